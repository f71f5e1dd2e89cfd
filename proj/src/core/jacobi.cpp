#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "ls2pc/dense.hpp"
#include "ls2pc/error.hpp"
#include "ls2pc/kernels.hpp"
#include "ls2pc/tolerances.hpp"

namespace ls2pc {
namespace {

double off_diagonal_norm(const Matrix& a) {
  double sum = 0.0;
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < j; ++i) sum += a(i, j) * a(i, j);
  return std::sqrt(2.0 * sum);
}

// Rotation (c, s) with tangent t that annihilates the (p, q) entry of a 2x2
// symmetric block [[app, apq], [apq, aqq]].
struct Rotation {
  double c, s, t;
};

Rotation annihilating_rotation(double app, double aqq, double apq) {
  const double theta = (aqq - app) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  return {c, t * c, t};
}

}  // namespace

EigenDecomposition jacobi_eigh(const SymmetricMatrix& s) {
  const std::size_t n = s.dim();
  Matrix a = s.matrix();
  Matrix v = Matrix::identity(n);
  const double scale = frobenius_norm(a);
  const double target = tolerances().jacobi_offdiag * scale;

  // Once the threshold is met, one more sweep drives the off-diagonal mass
  // to roughly its square (quadratic convergence).
  bool polishing = false;
  bool converged = false;
  for (int sweep = 0; sweep <= tolerances().jacobi_max_sweeps; ++sweep) {
    const double off = off_diagonal_norm(a);
    if (off == 0.0 || polishing) {
      converged = true;
      break;
    }
    if (off <= target) polishing = true;
    if (sweep == tolerances().jacobi_max_sweeps) break;

    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        const Rotation r = annihilating_rotation(app, aqq, apq);
        kernels::rotate(r.c, r.s, a.col(p), a.col(q));
        for (std::size_t k = 0; k < n; ++k) {
          const double x = a(p, k);
          const double y = a(q, k);
          a(p, k) = r.c * x - r.s * y;
          a(q, k) = r.s * x + r.c * y;
        }
        a(p, p) = app - r.t * apq;
        a(q, q) = aqq + r.t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        kernels::rotate(r.c, r.s, v.col(p), v.col(q));
      }
    }
  }
  if (!converged) {
    throw Error(ErrorCode::NoConvergence, "jacobi_eigh: off-diagonal mass above threshold after " +
                                              std::to_string(tolerances().jacobi_max_sweeps) +
                                              " sweeps");
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });
  std::vector<double> values(n);
  Matrix vectors(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    values[j] = a(order[j], order[j]);
    std::copy(v.col(order[j]).begin(), v.col(order[j]).end(), vectors.col(j).begin());
  }
  return {std::move(values), Basis(std::move(vectors))};
}

std::vector<double> singular_values(const Matrix& m) {
  Matrix w = m.rows() >= m.cols() ? m : transpose(m);
  const std::size_t n = w.cols();
  const double eps = std::numeric_limits<double>::epsilon();
  constexpr int kMaxSweeps = 60;

  bool rotated = true;
  for (int sweep = 0; sweep < kMaxSweeps && rotated; ++sweep) {
    rotated = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const double alpha = kernels::sum_squares(w.col(i));
        const double beta = kernels::sum_squares(w.col(j));
        const double gamma = kernels::dot(w.col(i), w.col(j));
        if (std::abs(gamma) <= eps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const Rotation r = annihilating_rotation(alpha, beta, gamma);
        kernels::rotate(r.c, r.s, w.col(i), w.col(j));
      }
    }
  }
  if (rotated) throw Error(ErrorCode::NoConvergence, "singular_values: one-sided Jacobi stalled");

  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) sv[j] = norm2(w.col(j));
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

}  // namespace ls2pc
