#include "sgi/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace sgi {
namespace {

/// Rows of the k-th projector, each sorted ascending (row-major n x n).
Matrix sorted_projector_rows(const SpectralDecomposition& d, std::size_t k) {
  // Column j of the transpose is row j of the projector; sort in place.
  Matrix rows = projection(d, k).transpose();
  for (Eigen::Index j = 0; j < rows.cols(); ++j) {
    auto col = rows.col(j);
    std::sort(col.data(), col.data() + col.size());
  }
  return rows;
}

}  // namespace

double sorted_row_distance(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw std::invalid_argument("sorted_row_distance needs equal lengths");
  std::vector<double> sa(a.begin(), a.end());
  std::vector<double> sb(b.begin(), b.end());
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  double sum = 0.0;
  for (std::size_t i = 0; i < sa.size(); ++i) sum += (sa[i] - sb[i]) * (sa[i] - sb[i]);
  return std::sqrt(sum);
}

CostMatrix build_cost_matrix(const SpectralDecomposition& a, const SpectralDecomposition& b) {
  if (a.size() != b.size()) throw std::invalid_argument("decompositions differ in size");
  if (!same_group_structure(a, b)) throw GroupMismatch("eigenvalue multiplicities differ");
  const auto n = static_cast<Eigen::Index>(a.size());
  CostMatrix c = CostMatrix::Zero(n, n);
  for (std::size_t k = 0; k < a.groups.size(); ++k) {
    const Matrix ra = sorted_projector_rows(a, k);
    const Matrix rb = sorted_projector_rows(b, k);
    for (Eigen::Index j = 0; j < n; ++j)
      for (Eigen::Index i = 0; i < n; ++i) c(i, j) += (ra.col(i) - rb.col(j)).norm();
  }
  return c;
}

PermutationCheck find_permutation(const SpectralDecomposition& a, const SpectralDecomposition& b,
                                  double epsilon) {
  PermutationCheck check;
  check.error = spectral_distance(a, b);
  if (check.error >= epsilon) {
    check.rejection = Rejection::spectra_differ;
    return check;
  }
  if (!same_group_structure(a, b)) {
    check.error = std::numeric_limits<double>::infinity();
    check.rejection = Rejection::group_mismatch;
    return check;
  }
  check.cost = build_cost_matrix(a, b);
  check.lap = solve_lap(check.cost, epsilon);
  check.error = check.lap->cost;
  check.rejection = check.error < epsilon ? Rejection::none : Rejection::assignment;
  return check;
}

PermutationCheck find_permutation(const Graph& a, const Graph& b, double epsilon,
                                  EigenBackend backend) {
  if (a.order() != b.order()) throw std::invalid_argument("graphs differ in order");
  return find_permutation(eigendecompose(a, epsilon, backend), eigendecompose(b, epsilon, backend),
                          epsilon);
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::isomorphic: return "isomorphic";
    case Outcome::not_isomorphic: return "not_isomorphic";
    case Outcome::inconclusive: return "inconclusive";
  }
  return "unknown";
}

Permutation extract_permutation(const SearchState& state) {
  const std::size_t n = state.a.order();
  if (state.b.order() != n) throw std::logic_error("search state graphs differ in order");
  std::vector<std::size_t> map(n, n);
  std::vector<bool> taken(n, false);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = state.a.loop_weight(i);
    if (w == 0.0) throw std::logic_error("vertex " + std::to_string(i) + " was never assigned");
    for (std::size_t j = 0; j < n; ++j) {
      if (state.b.loop_weight(j) != w) continue;
      if (map[i] != n || taken[j]) throw std::logic_error("duplicate diagonal weight");
      map[i] = j;
      taken[j] = true;
    }
    if (map[i] == n) throw std::logic_error("diagonal weight has no partner");
  }
  return Permutation(std::move(map));
}

namespace {

RoundRecord make_record(std::size_t i, std::size_t j, double w, const PermutationCheck& check,
                        const ZeroMask& mask, bool keep_mask) {
  RoundRecord r;
  r.a_vertex = i;
  r.b_vertex = j;
  r.weight = w;
  r.lap_cost = check.error;
  r.mask_true = count_true(mask);
  r.mask_density = static_cast<double>(r.mask_true) / static_cast<double>(mask.size());
  if (keep_mask) r.mask = mask;
  return r;
}

struct Level {
  std::size_t next_candidate = 0;
  std::optional<SpectralDecomposition> perturbed_a;  // A + D_i(w), reused across candidates
};

class Search {
 public:
  Search(const Graph& a, const Graph& b, const SolverOptions& opts)
      : a0_(a), b0_(b), opts_(opts), n_(a.order()), state_{a, b, {}} {}

  SolveReport run() {
    const auto da = decompose(a0_);
    const auto db = decompose(b0_);
    const auto root = check(da, db);
    report_.root_error = root.error;
    report_.root_rejection = root.rejection;
    if (root.rejection != Rejection::none) {
      report_.outcome = Outcome::not_isomorphic;
      return std::move(report_);
    }
    const ZeroMask root_mask = count_zero_structure(root.cost, opts_.epsilon);
    if (opts_.record_masks) report_.root_mask = root_mask;
    if (try_unique(root_mask)) return std::move(report_);

    std::vector<Level> levels(n_);
    std::vector<bool> b_used(n_, false);
    std::size_t depth = 0;

    while (true) {
      if (report_.backtrack_steps > opts_.max_backtrack_steps) {
        report_.outcome = Outcome::inconclusive;
        break;
      }
      Level& level = levels[depth];
      const std::size_t i = depth;
      const double w = weight(depth);
      if (!level.perturbed_a) level.perturbed_a = decompose(perturb(state_.a, i, w));

      bool accepted = false;
      for (std::size_t j = level.next_candidate; j < n_; ++j) {
        if (opts_.skip_assigned && b_used[j]) continue;
        Graph b_tilde = perturb(state_.b, j, w);
        ++report_.trials;
        const auto result = check(*level.perturbed_a, decompose(b_tilde));
        if (result.rejection != Rejection::none) continue;

        level.next_candidate = j + 1;
        accepted = true;
        state_.a = perturb(state_.a, i, w);
        state_.b = std::move(b_tilde);
        state_.assigned.push_back({i, j, w});
        b_used[j] = true;
        const ZeroMask mask = count_zero_structure(result.cost, opts_.epsilon);
        report_.rounds.push_back(make_record(i, j, w, result, mask, opts_.record_masks));
        if (try_unique(mask)) return std::move(report_);
        break;
      }

      if (accepted) {
        if (depth + 1 < n_) {
          levels[++depth] = Level{};
          continue;
        }
        if (try_complete()) return std::move(report_);
        // Full assignment that is not an isomorphism: undo the last vertex
        // and keep scanning its candidates.
        ++report_.backtrack_steps;
        undo(b_used);
        continue;
      }

      if (depth == 0) {
        report_.outcome = Outcome::not_isomorphic;
        report_.heuristic_rejection = true;
        break;
      }
      ++report_.backtrack_steps;
      levels[depth] = Level{};
      --depth;
      undo(b_used);
    }
    report_.rounds.clear();
    return std::move(report_);
  }

 private:
  double weight(std::size_t depth) const {
    return static_cast<double>(depth + 1 + (opts_.offset_weights ? n_ : 0));
  }

  SpectralDecomposition decompose(const Graph& g) {
    ++report_.decompositions;
    return eigendecompose(g, opts_.epsilon, opts_.backend);
  }

  PermutationCheck check(const SpectralDecomposition& a, const SpectralDecomposition& b) {
    auto result = find_permutation(a, b, opts_.epsilon);
    if (result.lap) ++report_.lap_solves;
    return result;
  }

  bool accept(const Permutation& p) {
    if (!is_exact_isomorphism(a0_, b0_, p)) return false;
    report_.outcome = Outcome::isomorphic;
    report_.permutation = p;
    return true;
  }

  bool try_unique(const ZeroMask& mask) {
    if (!opts_.unique_early_exit) return false;
    const auto forced = unique_zero_assignment(mask);
    if (!forced || !accept(*forced)) return false;
    report_.early_exit = true;
    return true;
  }

  bool try_complete() {
    // Without skip_assigned a B-vertex may carry two weights; such a state
    // cannot be read back as a bijection.
    std::vector<bool> hit(n_, false);
    for (const auto& step : state_.assigned) {
      if (hit[step.b_vertex]) return false;
      hit[step.b_vertex] = true;
    }
    return accept(extract_permutation(state_));
  }

  void undo(std::vector<bool>& b_used) {
    const Assignment last = state_.assigned.back();
    state_.assigned.pop_back();
    state_.a = perturb(state_.a, last.a_vertex, -last.weight);
    state_.b = perturb(state_.b, last.b_vertex, -last.weight);
    b_used[last.b_vertex] = std::any_of(state_.assigned.begin(), state_.assigned.end(),
                                        [&](const Assignment& s) { return s.b_vertex == last.b_vertex; });
    report_.rounds.pop_back();
  }

  const Graph& a0_;
  const Graph& b0_;
  const SolverOptions& opts_;
  std::size_t n_;
  SearchState state_;
  SolveReport report_;
};

}  // namespace

SolveReport is_isomorphic(const Graph& a, const Graph& b, const SolverOptions& opts) {
  if (a.order() != b.order()) {
    SolveReport report;
    report.outcome = Outcome::not_isomorphic;
    report.root_rejection = Rejection::spectra_differ;
    report.root_error = std::numeric_limits<double>::infinity();
    return report;
  }
  SolveReport report = Search(a, b, opts).run();
  if (report.outcome == Outcome::isomorphic &&
      (!report.permutation || !is_exact_isomorphism(a, b, *report.permutation))) {
    throw std::logic_error("solver produced an unverified isomorphism");
  }
  return report;
}

}  // namespace sgi
