// Cyclic Jacobi eigensolver for small dense symmetric matrices.
//
// Each sweep visits every off-diagonal pair (p, q) and applies the plane
// rotation that annihilates a(p, q). The first few sweeps skip entries
// below a threshold; afterwards entries that are negligible next to both
// diagonal entries are zeroed directly. Converges quadratically once the
// off-diagonal mass is small.

#include <cmath>
#include <limits>

#include "sgi/spectral.hpp"

namespace sgi::detail {

void jacobi_eigensolve(const Matrix& input, Vector& values, Matrix& vectors, int max_sweeps) {
  const Eigen::Index n = input.rows();
  Matrix a = input;
  vectors = Matrix::Identity(n, n);
  values = a.diagonal();
  Vector pending = Vector::Zero(n);  // accumulated diagonal updates of the sweep
  Vector base = values;
  const double eps = std::numeric_limits<double>::epsilon();

  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index q = 1; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) off += std::abs(a(p, q));
    if (off == 0.0) return;

    const double threshold = sweep < 3 ? 0.2 * off / static_cast<double>(n * n) : 0.0;
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        const double g = 100.0 * std::abs(apq);
        if (sweep > 3 && g < eps * std::abs(values(p)) && g < eps * std::abs(values(q))) {
          a(p, q) = 0.0;
          continue;
        }
        if (std::abs(apq) <= threshold) continue;

        double h = values(q) - values(p);
        double t;
        if (g < eps * std::abs(h)) {
          t = apq / h;
        } else {
          const double theta = 0.5 * h / apq;
          t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        h = t * apq;
        pending(p) -= h;
        pending(q) += h;
        values(p) -= h;
        values(q) += h;
        a(p, q) = 0.0;

        auto rotate = [&](double& x, double& y) {
          const double gx = x;
          const double hy = y;
          x = gx - s * (hy + gx * tau);
          y = hy + s * (gx - hy * tau);
        };
        for (Eigen::Index j = 0; j < p; ++j) rotate(a(j, p), a(j, q));
        for (Eigen::Index j = p + 1; j < q; ++j) rotate(a(p, j), a(j, q));
        for (Eigen::Index j = q + 1; j < n; ++j) rotate(a(p, j), a(q, j));
        for (Eigen::Index j = 0; j < n; ++j) rotate(vectors(j, p), vectors(j, q));
      }
    }
    base += pending;
    values = base;
    pending.setZero();
  }
  throw EigenSolverError("Jacobi eigensolver did not converge");
}

}  // namespace sgi::detail
