#include "sgi/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Eigenvalues>

namespace sgi {

double eigen_accuracy_budget(const Matrix& a) {
  const double n = static_cast<double>(a.rows());
  const double scale = a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
  return 1e-10 * n * std::max(1.0, scale);
}

std::vector<EigenGroup> group_eigenvalues(std::span<const double> values, double epsilon) {
  std::vector<EigenGroup> groups;
  std::size_t start = 0;
  for (std::size_t k = 1; k <= values.size(); ++k) {
    if (k == values.size() || values[k] - values[k - 1] >= epsilon) {
      const double sum = std::accumulate(values.begin() + start, values.begin() + k, 0.0);
      groups.push_back({sum / static_cast<double>(k - start), start, k - start});
      start = k;
    }
  }
  return groups;
}

SpectralDecomposition eigendecompose(const Matrix& a, double epsilon, EigenBackend backend) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eigendecompose needs a square matrix");
  SpectralDecomposition d;
  d.accuracy = eigen_accuracy_budget(a);

  if (backend == EigenBackend::tridiagonal_qr) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(a);
    if (solver.info() != Eigen::Success) {
      throw EigenSolverError("symmetric QR eigensolver did not converge");
    }
    d.values = solver.eigenvalues();
    d.vectors = solver.eigenvectors();
  } else {
    Vector values;
    Matrix vectors;
    detail::jacobi_eigensolve(a, values, vectors);
    std::vector<Eigen::Index> order(static_cast<std::size_t>(values.size()));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index x, Eigen::Index y) { return values(x) < values(y); });
    d.values.resize(values.size());
    d.vectors.resize(vectors.rows(), vectors.cols());
    for (std::size_t k = 0; k < order.size(); ++k) {
      const auto col = static_cast<Eigen::Index>(k);
      d.values(col) = values(order[k]);
      d.vectors.col(col) = vectors.col(order[k]);
    }
  }

  if (!d.values.allFinite() || !d.vectors.allFinite()) {
    throw EigenSolverError("eigensolver produced non-finite output");
  }
  d.groups = group_eigenvalues({d.values.data(), static_cast<std::size_t>(d.values.size())},
                               epsilon);
  return d;
}

SpectralDecomposition eigendecompose(const Graph& g, double epsilon, EigenBackend backend) {
  return eigendecompose(g.adjacency(), epsilon, backend);
}

Matrix projection(const SpectralDecomposition& d, std::size_t k) {
  const EigenGroup& group = d.groups.at(k);
  const auto block = d.vectors.middleCols(static_cast<Eigen::Index>(group.start),
                                          static_cast<Eigen::Index>(group.len));
  Matrix e = block * block.transpose();
  // The product is symmetric only up to rounding; make it exact.
  Matrix sym = 0.5 * (e + e.transpose());
  return sym;
}

double spectral_distance(const SpectralDecomposition& a, const SpectralDecomposition& b) {
  if (a.values.size() != b.values.size()) {
    throw std::invalid_argument("spectral_distance needs spectra of equal size");
  }
  return (a.values - b.values).norm();
}

bool same_group_structure(const SpectralDecomposition& a, const SpectralDecomposition& b) {
  return std::equal(a.groups.begin(), a.groups.end(), b.groups.begin(), b.groups.end(),
                    [](const EigenGroup& x, const EigenGroup& y) { return x.len == y.len; });
}

Matrix reconstruct(const SpectralDecomposition& d) {
  const auto n = d.vectors.rows();
  Matrix a = Matrix::Zero(n, n);
  for (std::size_t k = 0; k < d.groups.size(); ++k) a += d.groups[k].value * projection(d, k);
  return a;
}

}  // namespace sgi
