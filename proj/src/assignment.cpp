#include "sgi/assignment.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace sgi {

LapSolution solve_lap(const CostMatrix& c, double epsilon) {
  if (c.rows() != c.cols()) throw std::invalid_argument("cost matrix must be square");
  if (!c.allFinite()) throw std::invalid_argument("cost matrix has non-finite entries");
  const std::size_t n = static_cast<std::size_t>(c.rows());
  constexpr double inf = std::numeric_limits<double>::infinity();

  // 1-based shortest augmenting path formulation; column 0 is a sentinel.
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> row_of(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    row_of[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, inf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = row_of[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double reduced = c(i0 - 1, j - 1) - u[i0] - v[j];
        if (reduced < minv[j]) {
          minv[j] = reduced;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }

  std::vector<std::size_t> assignment(n);
  for (std::size_t j = 1; j <= n; ++j) assignment[row_of[j] - 1] = j - 1;
  double cost = 0.0;
  for (std::size_t i = 0; i < n; ++i) cost += c(i, assignment[i]);

  LapSolution sol{Permutation(std::move(assignment)), cost, false};
  if (cost < epsilon) sol.unique = is_unique_zero_assignment(count_zero_structure(c, epsilon));
  return sol;
}

ZeroMask count_zero_structure(const CostMatrix& c, double epsilon) {
  return (c.array() < epsilon);
}

std::size_t count_true(const ZeroMask& mask) {
  return static_cast<std::size_t>(mask.count());
}

std::optional<Permutation> unique_zero_assignment(const ZeroMask& mask) {
  const std::size_t n = static_cast<std::size_t>(mask.rows());
  if (mask.cols() != mask.rows()) return std::nullopt;
  std::vector<bool> row_done(n, false), col_done(n, false);
  std::vector<std::size_t> assignment(n, 0);
  std::size_t remaining = n;

  // A row (or column) with a single live entry forces that entry in every
  // perfect matching; removing it preserves uniqueness of the rest.
  while (remaining > 0) {
    bool progressed = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (row_done[i]) continue;
      std::size_t live = 0, last = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (!col_done[j] && mask(i, j)) ++live, last = j;
      if (live == 0) return std::nullopt;
      if (live == 1) {
        assignment[i] = last;
        row_done[i] = col_done[last] = true;
        --remaining;
        progressed = true;
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (col_done[j]) continue;
      std::size_t live = 0, last = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (!row_done[i] && mask(i, j)) ++live, last = i;
      if (live == 0) return std::nullopt;
      if (live == 1) {
        assignment[last] = j;
        row_done[last] = col_done[j] = true;
        --remaining;
        progressed = true;
      }
    }
    if (!progressed) return std::nullopt;
  }
  return Permutation(std::move(assignment));
}

bool is_unique_zero_assignment(const ZeroMask& mask) {
  return unique_zero_assignment(mask).has_value();
}

}  // namespace sgi
