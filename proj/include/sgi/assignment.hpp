#pragma once

#include <cstddef>
#include <optional>

#include <Eigen/Dense>

#include "sgi/graph.hpp"
#include "sgi/spectral.hpp"

namespace sgi {

/// c(i, j) is the cost of assigning vertex i of the first graph to vertex j
/// of the second.
using CostMatrix = Matrix;

/// mask(i, j) is true where c(i, j) < epsilon.
using ZeroMask = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

struct LapSolution {
  Permutation assignment;  // row i -> column assignment[i]
  double cost = 0.0;       // sum of c(i, assignment[i]) in row order
  bool unique = false;     // cost < epsilon and the epsilon-mask admits one matching
};

/// Minimum-cost perfect matching by the Hungarian method with row and
/// column potentials, O(n^3). Ties resolve to the lowest column index.
/// Throws std::invalid_argument on non-square or non-finite input.
LapSolution solve_lap(const CostMatrix& c, double epsilon = kDefaultEpsilon);

ZeroMask count_zero_structure(const CostMatrix& c, double epsilon);

std::size_t count_true(const ZeroMask& mask);

/// The single perfect matching of `mask`, if the forced-entry elimination
/// proves it is unique. Empty when ambiguous or when no matching exists.
std::optional<Permutation> unique_zero_assignment(const ZeroMask& mask);

bool is_unique_zero_assignment(const ZeroMask& mask);

}  // namespace sgi
