#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "sgi/spectral.hpp"
#include "sgi/testkit.hpp"

using namespace sgi;

namespace {

std::vector<std::size_t> multiplicities(const SpectralDecomposition& d) {
  std::vector<std::size_t> m;
  for (const auto& g : d.groups) m.push_back(g.multiplicity());
  return m;
}

void check_decomposition(const Matrix& a, const SpectralDecomposition& d) {
  const auto n = a.rows();
  const double tol = d.accuracy;
  CHECK((a * d.vectors - d.vectors * d.values.asDiagonal()).cwiseAbs().maxCoeff() <= tol);
  CHECK((d.vectors.transpose() * d.vectors - Matrix::Identity(n, n)).cwiseAbs().maxCoeff() <= tol);
  for (Eigen::Index k = 1; k < n; ++k) CHECK(d.values(k - 1) <= d.values(k));
  std::size_t next = 0;
  for (const auto& g : d.groups) {
    CHECK(g.start == next);
    next += g.len;
  }
  CHECK(next == static_cast<std::size_t>(n));
}

}  // namespace

TEST_CASE("eigendecompose known spectra") {
  SUBCASE("C6") {
    const auto d = eigendecompose(generate({Family::cycle, 6}));
    const Vector expected = (Vector(6) << -2, -1, -1, 1, 1, 2).finished();
    CHECK((d.values - expected).cwiseAbs().maxCoeff() < 1e-12);
    CHECK(multiplicities(d) == std::vector<std::size_t>{1, 2, 2, 1});
  }
  SUBCASE("Paley-17") {
    const Graph g = generate({Family::paley, 17});
    const auto d = eigendecompose(g);
    check_decomposition(g.adjacency(), d);
    REQUIRE(d.groups.size() == 3);
    CHECK(multiplicities(d) == std::vector<std::size_t>{8, 8, 1});
    CHECK(d.groups[0].value == doctest::Approx((-1 - std::sqrt(17.0)) / 2).epsilon(1e-12));
    CHECK(d.groups[1].value == doctest::Approx((-1 + std::sqrt(17.0)) / 2).epsilon(1e-12));
    CHECK(d.groups[2].value == doctest::Approx(8.0).epsilon(1e-12));
  }
  SUBCASE("zero matrix") {
    const auto d = eigendecompose(Graph(3));
    CHECK(d.values.isZero());
    CHECK(multiplicities(d) == std::vector<std::size_t>{3});
    check_decomposition(Matrix::Zero(3, 3), d);
  }
  SUBCASE("one perturbation makes the C6 spectrum simple") {
    const auto d = eigendecompose(perturb(generate({Family::cycle, 6}), 0, 1.0));
    CHECK(d.groups.size() == 6);
  }
}

TEST_CASE("Jacobi backend agrees with tridiagonal QR") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Graph g = generate({Family::random_gnp, 5 + seed % 15, seed});
    g = perturb(g, seed % g.order(), 1.0 + static_cast<double>(seed % 3));
    const auto qr = eigendecompose(g);
    const auto jac = eigendecompose(g, kDefaultEpsilon, EigenBackend::jacobi);
    check_decomposition(g.adjacency(), jac);
    CHECK((qr.values - jac.values).cwiseAbs().maxCoeff() <= qr.accuracy);
    CHECK(multiplicities(qr) == multiplicities(jac));
    for (std::size_t k = 0; k < qr.groups.size(); ++k) {
      CHECK((projection(qr, k) - projection(jac, k)).cwiseAbs().maxCoeff() <= 10 * qr.accuracy);
    }
  }
  const auto p = eigendecompose(generate({Family::paley, 13}), kDefaultEpsilon, EigenBackend::jacobi);
  CHECK(multiplicities(p) == std::vector<std::size_t>{6, 6, 1});
}

TEST_CASE("group_eigenvalues") {
  auto mults = [](std::vector<double> v, double eps) {
    std::vector<std::size_t> m;
    for (const auto& g : group_eigenvalues(v, eps)) m.push_back(g.len);
    return m;
  };
  CHECK(mults({-2, -1, -1, 1, 1, 2}, 1e-6) == std::vector<std::size_t>{1, 2, 2, 1});
  CHECK(mults({1.0, 1.0 + 1e-9, 5.0}, 1e-6) == std::vector<std::size_t>{2, 1});
  CHECK(mults({0.0, 0.5e-6, 1.0e-6}, 1e-6) == std::vector<std::size_t>{3});
  CHECK(group_eigenvalues(std::vector<double>{}, 1e-6).empty());
  const auto g = group_eigenvalues(std::vector<double>{1.0, 1.0 + 1e-9}, 1e-6);
  CHECK(g[0].value == doctest::Approx(1.0 + 0.5e-9).epsilon(1e-15));
}

TEST_CASE("projection") {
  SUBCASE("rank one") {
    SpectralDecomposition d;
    d.values = Vector::Zero(3);
    d.values << 0, 1, 2;
    d.vectors = Matrix::Identity(3, 3);
    d.vectors.col(2) = Vector::Ones(3) / std::sqrt(3.0);
    d.groups = group_eigenvalues({d.values.data(), 3}, 1e-6);
    const Matrix e = projection(d, 2);
    CHECK((e - Matrix::Constant(3, 3, 1.0 / 3.0)).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(e.trace() == doctest::Approx(1.0));
  }
  SUBCASE("C6 top eigenspace is the all-ones projector") {
    const auto d = eigendecompose(generate({Family::cycle, 6}));
    const Matrix e = projection(d, d.groups.size() - 1);
    CHECK((e - Matrix::Constant(6, 6, 1.0 / 6.0)).cwiseAbs().maxCoeff() <= 10 * d.accuracy);
  }
  SUBCASE("projectors sum to identity") {
    const auto d = eigendecompose(generate({Family::lattice, 4}));
    Matrix sum = Matrix::Zero(16, 16);
    for (std::size_t k = 0; k < d.groups.size(); ++k) sum += projection(d, k);
    CHECK((sum - Matrix::Identity(16, 16)).cwiseAbs().maxCoeff() <= 10 * d.accuracy);
  }
  SUBCASE("basis independence") {
    // Rotate the basis of a degenerate eigenspace; the projector must not move.
    auto d = eigendecompose(generate({Family::cycle, 6}));
    const auto& g = d.groups[1];
    REQUIRE(g.len == 2);
    const double t = 0.7;
    Matrix rot(2, 2);
    rot << std::cos(t), -std::sin(t), std::sin(t), std::cos(t);
    const Matrix before = projection(d, 1);
    d.vectors.middleCols(static_cast<Eigen::Index>(g.start), 2) =
        d.vectors.middleCols(static_cast<Eigen::Index>(g.start), 2) * rot;
    CHECK((projection(d, 1) - before).cwiseAbs().maxCoeff() <= 10 * d.accuracy);
  }
}

TEST_CASE("spectral_distance") {
  const auto c6 = eigendecompose(generate({Family::cycle, 6}));
  CHECK(spectral_distance(c6, c6) == 0.0);

  SUBCASE("K3 against P3, spectra from characteristic polynomials") {
    const Graph k3 = generate({Family::complete, 3});
    const Graph p3 = generate({Family::path, 3});
    // det(xI - K3) = (x - 2)(x + 1)^2 = x^3 - 3x - 2; det(xI - P3) = x^3 - 2x.
    CHECK(oracle::characteristic_polynomial(k3.adjacency()) == std::vector<double>{1, 0, -3, -2});
    CHECK(oracle::characteristic_polynomial(p3.adjacency()) == std::vector<double>{1, 0, -2, 0});
    const double r2 = std::sqrt(2.0);
    const double expected = std::sqrt((-1 + r2) * (-1 + r2) + 1.0 + (2 - r2) * (2 - r2));
    const double got = spectral_distance(eigendecompose(k3), eigendecompose(p3));
    CHECK(got == doctest::Approx(expected).epsilon(1e-12));
    CHECK(got > 1.0);
  }

  const Graph c6g = generate({Family::cycle, 6});
  std::vector<std::size_t> rot{1, 2, 3, 4, 5, 0};
  const auto rotated = eigendecompose(apply_permutation(c6g, Permutation(rot)));
  CHECK(spectral_distance(c6, rotated) <= 10 * c6.accuracy);

  CHECK_THROWS_AS(spectral_distance(c6, eigendecompose(Graph(2))), std::invalid_argument);
}

TEST_CASE("reconstruct") {
  CHECK(reconstruct(eigendecompose(Graph(3))).isZero());
  for (auto spec : {GeneratorSpec{Family::cycle, 6}, GeneratorSpec{Family::paley, 17}}) {
    const Graph g = generate(spec);
    const auto d = eigendecompose(g);
    CHECK((reconstruct(d) - g.adjacency()).cwiseAbs().maxCoeff() <= 10 * d.accuracy);
  }
}

TEST_CASE("spectral properties on random graphs") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Graph g = generate({Family::random_gnp, 12, seed});
    const auto d = eigendecompose(g);
    const double tol = 10 * d.accuracy;
    check_decomposition(g.adjacency(), d);
    Matrix sum = Matrix::Zero(12, 12);
    for (std::size_t k = 0; k < d.groups.size(); ++k) {
      const Matrix e = projection(d, k);
      CHECK(e == e.transpose());
      CHECK((e * e - e).cwiseAbs().maxCoeff() <= tol);
      CHECK(std::abs(e.trace() - static_cast<double>(d.groups[k].len)) <= tol);
      sum += e;
    }
    CHECK((sum - Matrix::Identity(12, 12)).cwiseAbs().maxCoeff() <= tol);
    CHECK((reconstruct(d) - g.adjacency()).cwiseAbs().maxCoeff() <= tol);

    const Permutation p = random_permutation(12, seed + 1000);
    const auto dp = eigendecompose(apply_permutation(g, p));
    CHECK(spectral_distance(d, dp) <= tol);

    // Projector equivariance: E_B = P^T E_A P for groups matched by value.
    if (same_group_structure(d, dp)) {
      const Matrix pm = p.matrix();
      for (std::size_t k = 0; k < d.groups.size(); ++k) {
        const Matrix moved = pm.transpose() * projection(d, k) * pm;
        CHECK((moved - projection(dp, k)).cwiseAbs().maxCoeff() <= tol);
      }
    }
  }
}

TEST_CASE("connected graphs have a simple, positive top eigenvector") {
  for (auto spec : {GeneratorSpec{Family::cycle, 7}, GeneratorSpec{Family::paley, 13},
                    GeneratorSpec{Family::lattice, 3}, GeneratorSpec{Family::path, 5}}) {
    const auto d = eigendecompose(generate(spec));
    REQUIRE(d.groups.back().len == 1);
    Vector v = d.vectors.col(d.vectors.cols() - 1);
    if (v.sum() < 0) v = -v;
    CHECK(v.minCoeff() > 0.0);
  }
}
