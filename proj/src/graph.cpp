#include "sgi/graph.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace sgi {

Permutation::Permutation(std::vector<std::size_t> images) : map_(std::move(images)) {
  std::vector<bool> seen(map_.size(), false);
  for (std::size_t img : map_) {
    if (img >= map_.size() || seen[img]) {
      throw std::invalid_argument("permutation is not a bijection");
    }
    seen[img] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  return Permutation(std::move(map));
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(map_.size());
  for (std::size_t i = 0; i < map_.size(); ++i) inv[map_[i]] = i;
  return Permutation(std::move(inv));
}

Matrix Permutation::matrix() const {
  const auto n = static_cast<Eigen::Index>(map_.size());
  Matrix p = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) p(i, static_cast<Eigen::Index>(map_[i])) = 1.0;
  return p;
}

Graph::Graph(std::size_t n) {
  if (n == 0) throw std::invalid_argument("graph needs at least one vertex");
  const auto m = static_cast<Eigen::Index>(n);
  adj_ = Matrix::Zero(m, m);
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + std::to_string(u) + " " +
                                  std::to_string(v));
    }
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    g.adj_(u, v) = 1.0;
    g.adj_(v, u) = 1.0;
  }
  return g;
}

Graph Graph::from_matrix(Matrix adj) {
  if (adj.rows() == 0 || adj.rows() != adj.cols()) {
    throw std::invalid_argument("adjacency matrix must be square and nonempty");
  }
  if (adj != adj.transpose()) throw std::invalid_argument("adjacency matrix is not symmetric");
  Graph g;
  g.adj_ = std::move(adj);
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t m = 0;
  for (Eigen::Index j = 0; j < adj_.cols(); ++j)
    for (Eigen::Index i = 0; i < j; ++i)
      if (adj_(i, j) != 0.0) ++m;
  return m;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  const std::size_t n = order();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (adj_(i, j) != 0.0) out.emplace_back(i, j);
  return out;
}

std::vector<std::size_t> Graph::degrees() const {
  const std::size_t n = order();
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (has_edge(i, j)) ++deg[i];
  return deg;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
  const std::size_t n = g.order();
  if (p.size() != n) throw std::invalid_argument("permutation length does not match graph order");
  Matrix b(g.adjacency().rows(), g.adjacency().cols());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b(p[i], p[j]) = g.weight(i, j);
  return Graph::from_matrix(std::move(b));
}

bool is_exact_isomorphism(const Graph& a, const Graph& b, const Permutation& p) {
  const std::size_t n = a.order();
  if (b.order() != n || p.size() != n) {
    throw std::invalid_argument("graph orders and permutation length must agree");
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (a.weight(i, j) != b.weight(p[i], p[j])) return false;
  return true;
}

Permutation random_permutation(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> map(n);
  std::iota(map.begin(), map.end(), std::size_t{0});
  for (std::size_t i = n; i > 1; --i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    std::swap(map[i - 1], map[pick(rng)]);
  }
  return Permutation(std::move(map));
}

Graph perturb(const Graph& g, std::size_t vertex, double weight) {
  if (vertex >= g.order()) throw std::out_of_range("perturbed vertex out of range");
  if (weight == 0.0) throw std::invalid_argument("perturbation weight must be nonzero");
  Matrix adj = g.adjacency();
  const auto v = static_cast<Eigen::Index>(vertex);
  adj(v, v) += weight;
  return Graph::from_matrix(std::move(adj));
}

}  // namespace sgi
