#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "sgi/graph.hpp"

namespace sgi {

/// Two eigenvalues closer than this are treated as equal, and an
/// assignment is accepted when its LAP cost stays below it.
inline constexpr double kDefaultEpsilon = 1e-6;

class EigenSolverError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class EigenBackend {
  tridiagonal_qr,  // Householder tridiagonalization + implicit QL (Eigen)
  jacobi,          // cyclic Jacobi rotations, in-repo
};

/// A cluster of numerically equal eigenvalues: columns [start, start+len)
/// of SpectralDecomposition::vectors.
struct EigenGroup {
  double value = 0.0;  // mean of the members
  std::size_t start = 0;
  std::size_t len = 0;

  std::size_t multiplicity() const { return len; }
};

struct SpectralDecomposition {
  Vector values;   // ascending
  Matrix vectors;  // orthonormal columns, column k pairs with values[k]
  std::vector<EigenGroup> groups;
  double accuracy = 0.0;  // solver accuracy budget for the source matrix

  std::size_t size() const { return static_cast<std::size_t>(values.size()); }
};

/// Accuracy budget for eigenpairs of `a`: 1e-10 * n * max|a_ij|, floored at
/// 1e-10 * n so the zero matrix still gets a usable tolerance.
double eigen_accuracy_budget(const Matrix& a);

SpectralDecomposition eigendecompose(const Matrix& a, double epsilon = kDefaultEpsilon,
                                     EigenBackend backend = EigenBackend::tridiagonal_qr);
SpectralDecomposition eigendecompose(const Graph& g, double epsilon = kDefaultEpsilon,
                                     EigenBackend backend = EigenBackend::tridiagonal_qr);

/// Single-linkage grouping of sorted values: a gap below epsilon joins the
/// neighbouring values into one group.
std::vector<EigenGroup> group_eigenvalues(std::span<const double> values, double epsilon);

/// Orthogonal projector onto the eigenspace of group k, symmetrized.
Matrix projection(const SpectralDecomposition& d, std::size_t k);

/// Frobenius distance between the sorted eigenvalue vectors.
double spectral_distance(const SpectralDecomposition& a, const SpectralDecomposition& b);

/// Same number of groups with the same multiplicities, in order.
bool same_group_structure(const SpectralDecomposition& a, const SpectralDecomposition& b);

/// Sum over groups of value * projector.
Matrix reconstruct(const SpectralDecomposition& d);

namespace detail {

/// Cyclic Jacobi eigensolver. Values come back unsorted, paired with the
/// columns of `vectors`. Throws EigenSolverError after `max_sweeps`.
void jacobi_eigensolve(const Matrix& a, Vector& values, Matrix& vectors, int max_sweeps = 64);

}  // namespace detail

}  // namespace sgi
