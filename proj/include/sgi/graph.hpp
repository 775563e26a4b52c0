#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace sgi {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// Bijection on {0, ..., n-1}; `p[i]` is the image of vertex i.
class Permutation {
 public:
  Permutation() = default;

  /// Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<std::size_t> images);

  static Permutation identity(std::size_t n);

  std::size_t size() const { return map_.size(); }
  std::size_t operator[](std::size_t i) const { return map_[i]; }
  std::span<const std::size_t> images() const { return map_; }

  Permutation inverse() const;

  /// Permutation matrix P with P(i, p[i]) = 1, so that B = P^T A P.
  Matrix matrix() const;

  bool operator==(const Permutation&) const = default;

 private:
  std::vector<std::size_t> map_;
};

using Edge = std::pair<std::size_t, std::size_t>;

/// Undirected graph stored as a dense, exactly symmetric adjacency matrix.
/// The diagonal carries self-loop weights added by perturbation; plain
/// input graphs have a zero diagonal and 0/1 off-diagonal entries.
class Graph {
 public:
  /// Edgeless graph on n >= 1 vertices.
  explicit Graph(std::size_t n);

  /// Plain graph from 0-based edges. Duplicates collapse; self-loops and
  /// out-of-range endpoints throw std::invalid_argument.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  /// Throws std::invalid_argument if `adj` is empty, non-square or not
  /// bitwise symmetric.
  static Graph from_matrix(Matrix adj);

  std::size_t order() const { return static_cast<std::size_t>(adj_.rows()); }
  const Matrix& adjacency() const { return adj_; }

  double weight(std::size_t i, std::size_t j) const { return adj_(i, j); }
  double loop_weight(std::size_t i) const { return adj_(i, i); }
  bool has_edge(std::size_t i, std::size_t j) const { return i != j && adj_(i, j) != 0.0; }

  /// Number of unordered off-diagonal pairs with nonzero weight.
  std::size_t edge_count() const;
  std::vector<Edge> edges() const;
  std::vector<std::size_t> degrees() const;

  bool operator==(const Graph& other) const { return adj_ == other.adj_; }

 private:
  Graph() = default;
  Matrix adj_;
};

/// Returns B with B[p[i]][p[j]] = A[i][j], i.e. B = P^T A P.
Graph apply_permutation(const Graph& g, const Permutation& p);

/// True iff the off-diagonal part of apply_permutation(a, p) equals that of
/// b. Diagonals are ignored so perturbed graphs validate against their
/// unperturbed edge structure.
bool is_exact_isomorphism(const Graph& a, const Graph& b, const Permutation& p);

/// Seeded Fisher-Yates shuffle.
Permutation random_permutation(std::size_t n, std::uint64_t seed);

/// A + D_i(w): adds w to the self-loop weight of `vertex`.
Graph perturb(const Graph& g, std::size_t vertex, double weight);

}  // namespace sgi
