#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sgi/graph.hpp"

namespace sgi {

enum class Family { cycle, paley, lattice, triangular, complete, path, star, random_gnp };

struct GeneratorSpec {
  Family family = Family::cycle;
  std::size_t parameter = 0;
  std::uint64_t seed = 0;          // random_gnp only
  double edge_probability = 0.5;   // random_gnp only
};

/// Accepts "paley 17", "paley(17)" and "paley:17". Family names are the
/// enumerator names; "rook" aliases lattice and "gnp"/"random" alias
/// random_gnp. Throws std::invalid_argument on anything else.
GeneratorSpec parse_generator_spec(std::string_view text);
std::optional<Family> parse_family(std::string_view name);
std::string_view family_name(Family family);
std::string to_string(const GeneratorSpec& spec);

// paley(q)      q prime, q = 1 (mod 4); u ~ v iff u - v is a nonzero square mod q
// lattice(k)    rook's graph on a k x k board (k^2 vertices)
// triangular(k) Johnson graph J(k, 2): 2-subsets meeting in one element
// star(n)       K_{1,n-1}
// random_gnp(n) Erdos-Renyi G(n, p) from `seed`
Graph generate(const GeneratorSpec& spec);

bool is_prime(std::size_t q);

/// Exhaustive isomorphism search with degree and neighbour-degree pruning.
/// Limited to n <= 10; throws std::invalid_argument beyond that.
std::optional<Permutation> brute_force_isomorphism(const Graph& a, const Graph& b);

inline constexpr std::size_t kBruteForceLimit = 10;

/// Star K_{1,4} and C_4 + K_1: cospectral (both {-2, 0, 0, 0, 2}) but not
/// isomorphic.
std::pair<Graph, Graph> cospectral_fixture();

/// Every labelled simple graph on n vertices, ordered by edge bitmask.
/// n <= 6.
std::vector<Graph> enumerate_graphs(std::size_t n);

}  // namespace sgi
