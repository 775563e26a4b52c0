#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "sgi/solver.hpp"
#include "sgi/spectral.hpp"
#include "sgi/testkit.hpp"

using namespace sgi;

namespace {

std::vector<std::size_t> multiplicities(const Graph& g) {
  std::vector<std::size_t> m;
  for (const auto& grp : eigendecompose(g).groups) m.push_back(grp.len);
  return m;
}

bool regular(const Graph& g, std::size_t k) {
  for (auto d : g.degrees())
    if (d != k) return false;
  return true;
}

}  // namespace

TEST_CASE("generator spec parsing") {
  CHECK(parse_generator_spec("paley 17").family == Family::paley);
  CHECK(parse_generator_spec("paley 17").parameter == 17);
  CHECK(parse_generator_spec("lattice(4)").family == Family::lattice);
  CHECK(parse_generator_spec("lattice(4)").parameter == 4);
  CHECK(parse_generator_spec("triangular:7").parameter == 7);
  CHECK(parse_generator_spec(" rook( 3 ) ").family == Family::lattice);
  CHECK_THROWS_AS(parse_generator_spec("paley"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("hypercube 4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("paley(17"), std::invalid_argument);
  CHECK_THROWS_AS(parse_generator_spec("paley x"), std::invalid_argument);
  CHECK(to_string(GeneratorSpec{Family::triangular, 7}) == "triangular(7)");
}

TEST_CASE("generate") {
  SUBCASE("cycle(6)") {
    CHECK(multiplicities(generate({Family::cycle, 6})) == std::vector<std::size_t>{1, 2, 2, 1});
  }
  SUBCASE("paley(17)") {
    const Graph g = generate({Family::paley, 17});
    CHECK(regular(g, 8));
    CHECK(g.edge_count() == 17 * 16 / 4);
    CHECK(multiplicities(g) == std::vector<std::size_t>{8, 8, 1});
  }
  SUBCASE("paley(13) is strongly regular (13, 6, 2, 3)") {
    const Graph g = generate({Family::paley, 13});
    for (std::size_t u = 0; u < 13; ++u) {
      for (std::size_t v = u + 1; v < 13; ++v) {
        std::size_t common = 0;
        for (std::size_t w = 0; w < 13; ++w) common += g.has_edge(u, w) && g.has_edge(v, w);
        CHECK(common == (g.has_edge(u, v) ? 2u : 3u));
      }
    }
  }
  SUBCASE("lattice(4)") {
    const Graph g = generate({Family::lattice, 4});
    CHECK(g.order() == 16);
    CHECK(regular(g, 6));
    const auto d = eigendecompose(g);
    REQUIRE(d.groups.size() == 3);
    CHECK(d.groups[0].value == doctest::Approx(-2.0));
    CHECK(d.groups[1].value == doctest::Approx(2.0));
    CHECK(d.groups[2].value == doctest::Approx(6.0));
    CHECK(multiplicities(g) == std::vector<std::size_t>{9, 6, 1});
  }
  SUBCASE("triangular(7)") {
    const Graph g = generate({Family::triangular, 7});
    CHECK(g.order() == 21);
    CHECK(regular(g, 10));
  }
  SUBCASE("strongly regular families have three eigenvalue groups") {
    for (std::size_t k : {3, 4, 5, 6}) {
      CHECK(eigendecompose(generate({Family::lattice, k})).groups.size() == 3);
    }
    for (std::size_t k : {4, 5, 6, 7, 8}) {
      CHECK(eigendecompose(generate({Family::triangular, k})).groups.size() == 3);
    }
  }
  SUBCASE("small families") {
    CHECK(generate({Family::complete, 4}).edge_count() == 6);
    CHECK(generate({Family::path, 4}).edge_count() == 3);
    CHECK(generate({Family::star, 5}).degrees() == std::vector<std::size_t>{4, 1, 1, 1, 1});
  }
  SUBCASE("random_gnp is seeded") {
    CHECK(generate({Family::random_gnp, 15, 9}) == generate({Family::random_gnp, 15, 9}));
    CHECK_FALSE(generate({Family::random_gnp, 15, 9}) == generate({Family::random_gnp, 15, 10}));
  }
  SUBCASE("invalid parameters") {
    CHECK_THROWS_AS(generate({Family::paley, 15}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::paley, 7}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::cycle, 2}), std::invalid_argument);
    CHECK_THROWS_AS(generate({Family::triangular, 2}), std::invalid_argument);
  }
}

TEST_CASE("Paley cost matrices against themselves are all zero") {
  for (std::size_t q : {13, 17, 29}) {
    const auto d = eigendecompose(generate({Family::paley, q}));
    CHECK(build_cost_matrix(d, d).maxCoeff() < kDefaultEpsilon);
  }
}

TEST_CASE("brute_force_isomorphism") {
  const Graph k3 = generate({Family::complete, 3});
  CHECK(brute_force_isomorphism(k3, k3));

  const auto [a, b] = cospectral_fixture();
  CHECK_FALSE(brute_force_isomorphism(a, b));
  std::size_t valid = 0;
  for (const auto& p : oracle::all_permutations(5)) valid += is_exact_isomorphism(a, b, Permutation(p));
  CHECK(valid == 0);

  const Graph c6 = generate({Family::cycle, 6});
  const Graph rot = apply_permutation(c6, Permutation({1, 2, 3, 4, 5, 0}));
  const auto p = brute_force_isomorphism(c6, rot);
  REQUIRE(p);
  CHECK(is_exact_isomorphism(c6, rot, *p));

  CHECK_THROWS_AS(brute_force_isomorphism(Graph(11), Graph(11)), std::invalid_argument);
  CHECK_FALSE(brute_force_isomorphism(Graph(3), Graph(4)));

  const Graph r10 = generate({Family::random_gnp, 10, 5});
  const auto q = brute_force_isomorphism(r10, apply_permutation(r10, random_permutation(10, 1)));
  CHECK(q);
}

TEST_CASE("cospectral fixture") {
  const auto [a, b] = cospectral_fixture();
  // Both characteristic polynomials are x^5 - 4x^3.
  const std::vector<double> expected{1, 0, -4, 0, 0, 0};
  CHECK(oracle::characteristic_polynomial(a.adjacency()) == expected);
  CHECK(oracle::characteristic_polynomial(b.adjacency()) == expected);
  const auto da = eigendecompose(a);
  const auto db = eigendecompose(b);
  CHECK(spectral_distance(da, db) < 10 * da.accuracy);
  const Vector spectrum = (Vector(5) << -2, 0, 0, 0, 2).finished();
  CHECK((da.values - spectrum).cwiseAbs().maxCoeff() < 1e-12);
  CHECK((db.values - spectrum).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(a.degrees() == std::vector<std::size_t>{4, 1, 1, 1, 1});
  CHECK(b.degrees() == std::vector<std::size_t>{2, 2, 2, 2, 0});
  CHECK(is_isomorphic(a, b).outcome == Outcome::not_isomorphic);
}

TEST_CASE("enumerate_graphs") {
  CHECK(enumerate_graphs(1).size() == 1);
  CHECK(enumerate_graphs(4).size() == 64);
  // Number of isomorphism classes on 4 vertices is 11.
  const auto all = enumerate_graphs(4);
  std::vector<Graph> reps;
  for (const auto& g : all) {
    bool known = false;
    for (const auto& r : reps) known = known || brute_force_isomorphism(g, r).has_value();
    if (!known) reps.push_back(g);
  }
  CHECK(reps.size() == 11);
  CHECK_THROWS_AS(enumerate_graphs(7), std::invalid_argument);
}
