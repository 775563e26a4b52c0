#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sgi/assignment.hpp"
#include "sgi/graph.hpp"
#include "sgi/spectral.hpp"

namespace sgi {

/// ||sort(a) - sort(b)||_2; zero iff b is a rearrangement of a.
double sorted_row_distance(std::span<const double> a, std::span<const double> b);

class GroupMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// c(i, j) = sum over eigenvalue groups k of the sorted-row distance between
/// row i of the k-th projector of `a` and row j of the k-th projector of
/// `b`. Groups are paired in ascending order; throws GroupMismatch when the
/// multiplicity sequences differ.
CostMatrix build_cost_matrix(const SpectralDecomposition& a, const SpectralDecomposition& b);

enum class Rejection {
  none,            // error < epsilon, assignment feasible
  spectra_differ,  // eigenvalue distance above epsilon
  group_mismatch,  // close spectra but different multiplicity sequences
  assignment,      // LAP optimum above epsilon
};

struct PermutationCheck {
  double error = 0.0;
  Rejection rejection = Rejection::none;
  std::optional<LapSolution> lap;  // present whenever the LAP was solved
  CostMatrix cost;                 // empty unless the LAP was solved
};

/// Eigenvalue quick-reject followed by the projector cost LAP.
PermutationCheck find_permutation(const Graph& a, const Graph& b, double epsilon = kDefaultEpsilon,
                                  EigenBackend backend = EigenBackend::tridiagonal_qr);
PermutationCheck find_permutation(const SpectralDecomposition& a, const SpectralDecomposition& b,
                                  double epsilon = kDefaultEpsilon);

struct SolverOptions {
  double epsilon = kDefaultEpsilon;
  std::size_t max_backtrack_steps = 1'000'000;
  bool skip_assigned = true;       // scan only unassigned vertices of the second graph
  bool unique_early_exit = true;   // stop once the zero mask forces one matching
  bool offset_weights = false;     // round r uses weight n + r instead of r
  bool record_masks = false;       // keep the epsilon-mask of every accepted round
  EigenBackend backend = EigenBackend::tridiagonal_qr;
};

enum class Outcome { isomorphic, not_isomorphic, inconclusive };

std::string_view to_string(Outcome outcome);

struct RoundRecord {
  std::size_t a_vertex = 0;
  std::size_t b_vertex = 0;
  double weight = 0.0;
  double lap_cost = 0.0;
  std::size_t mask_true = 0;
  double mask_density = 0.0;
  std::optional<ZeroMask> mask;
};

struct SolveReport {
  Outcome outcome = Outcome::inconclusive;
  std::optional<Permutation> permutation;

  /// Root rejection reason when the unperturbed pair already fails.
  Rejection root_rejection = Rejection::none;
  double root_error = 0.0;
  std::optional<ZeroMask> root_mask;

  /// Rejection after exhausting the search; not a proof of non-isomorphism.
  bool heuristic_rejection = false;
  bool early_exit = false;

  std::size_t backtrack_steps = 0;
  std::size_t decompositions = 0;
  std::size_t lap_solves = 0;
  std::size_t trials = 0;  // perturbed (i, j) pairs examined

  /// Accepted assignments along the final search path, in order.
  std::vector<RoundRecord> rounds;
};

struct Assignment {
  std::size_t a_vertex = 0;
  std::size_t b_vertex = 0;
  double weight = 0.0;
};

struct SearchState {
  Graph a;
  Graph b;
  std::vector<Assignment> assigned;
};

/// pi(i) = j where the self-loop weight of a at i equals that of b at j.
/// Throws std::logic_error if the diagonals do not pair up one-to-one.
Permutation extract_permutation(const SearchState& state);

/// Perturbation search with depth-first backtracking. Never returns
/// `isomorphic` without a permutation that passes is_exact_isomorphism.
SolveReport is_isomorphic(const Graph& a, const Graph& b, const SolverOptions& opts = {});

}  // namespace sgi
