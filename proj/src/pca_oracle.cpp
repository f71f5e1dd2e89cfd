#include "ls2pc/pca_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "ls2pc/dense.hpp"
#include "ls2pc/error.hpp"
#include "ls2pc/kernels.hpp"
#include "ls2pc/tolerances.hpp"

namespace ls2pc {
namespace {

void require_unit(std::span<const double> w, std::size_t p) {
  if (w.size() != p) throw Error(ErrorCode::DimensionMismatch, "direction length differs from p");
  if (std::abs(norm2(w) - 1.0) > tolerances().unit_norm) {
    throw Error(ErrorCode::NotUnit, "direction must have unit norm");
  }
}

// Entry (i, j) is the dot product of rows i and j of R, computed once per
// pair and mirrored, so the result is exactly symmetric.
Matrix row_gram(const DataMatrix& r) {
  const Matrix rows = transpose(r.matrix());
  const std::size_t p = r.dim();
  Matrix g(p, p);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t i = 0; i <= j; ++i) {
      const double v = kernels::dot(rows.col(i), rows.col(j));
      g(i, j) = v;
      g(j, i) = v;
    }
  }
  return g;
}

}  // namespace

SymmetricMatrix scatter(const DataMatrix& r) { return SymmetricMatrix(row_gram(r)); }

SymmetricMatrix covariance(const DataMatrix& r) {
  return SymmetricMatrix((1.0 / static_cast<double>(r.samples())) * row_gram(r));
}

bool has_degenerate_gap(const Spectrum& s, std::size_t d) {
  if (d == 0 || d > s.size()) throw Error(ErrorCode::InvalidArgument, "d out of range");
  if (d == s.size()) return false;
  const double hi = s[d - 1];
  const double lo = s[d];
  if (hi <= 0.0) return true;
  return (hi - lo) / hi < tolerances().degenerate_gap;
}

PrincipalSpace pca_topd(const DataMatrix& r, std::size_t d) {
  if (d == 0 || d > r.dim()) throw Error(ErrorCode::InvalidArgument, "pca_topd: need 1 <= d <= p");
  EigenDecomposition eig = jacobi_eigh(scatter(r));
  std::vector<double> sv(eig.values.size());
  std::transform(eig.values.begin(), eig.values.end(), sv.begin(),
                 [](double lambda) { return std::sqrt(std::max(lambda, 0.0)); });
  Spectrum spectrum(std::move(sv));
  const bool degenerate = has_degenerate_gap(spectrum, d);
  return {eig.vectors.leading(d), std::move(spectrum), degenerate};
}

double variance_along(const DataMatrix& r, std::span<const double> w) {
  require_unit(w, r.dim());
  double total = 0.0;
  for (std::size_t i = 0; i < r.samples(); ++i) {
    const double proj = kernels::dot(w, r.sample(i));
    total += proj * proj;
  }
  return total;
}

double sum_sq_distances(const DataMatrix& r, std::span<const double> w) {
  require_unit(w, r.dim());
  const std::size_t p = r.dim();
  double total = 0.0;
  for (std::size_t i = 0; i < r.samples(); ++i) {
    const auto x = r.sample(i);
    const double proj = kernels::dot(w, x);
    for (std::size_t k = 0; k < p; ++k) {
      const double diff = x[k] - proj * w[k];
      total += diff * diff;
    }
  }
  return total;
}

double sum_sq_distances_identity(const DataMatrix& r, std::span<const double> w) {
  const double fro = frobenius_norm(r.matrix());
  return fro * fro - variance_along(r, w);
}

PearsonSweep pearson_equivalence_2d(const DataMatrix& r, std::size_t grid_n) {
  if (r.dim() != 2) throw Error(ErrorCode::DimensionMismatch, "pearson sweep needs p = 2");
  if (grid_n < 3) throw Error(ErrorCode::InvalidArgument, "grid_n must be at least 3");

  const double fro = frobenius_norm(r.matrix());
  const double total = fro * fro;
  PearsonSweep out{0, 0, 0.0, 0.0, 0.0, false};
  double best_var = -1.0;
  double worst_var = 0.0;
  double best_dist = 0.0;
  for (std::size_t j = 0; j < grid_n; ++j) {
    const double theta = std::numbers::pi * static_cast<double>(j) / static_cast<double>(grid_n);
    const double w[2] = {std::cos(theta), std::sin(theta)};
    const double var = variance_along(r, w);
    const double dist = sum_sq_distances(r, w);
    if (j == 0 || var > best_var) {
      best_var = var;
      out.argmax_index = j;
    }
    if (j == 0 || var < worst_var) worst_var = var;
    if (j == 0 || dist < best_dist) {
      best_dist = dist;
      out.argmin_index = j;
    }
    out.max_gap = std::max(out.max_gap, std::abs(var + dist - total));
  }
  const double step = std::numbers::pi / static_cast<double>(grid_n);
  out.argmax_angle = step * static_cast<double>(out.argmax_index);
  out.argmin_angle = step * static_cast<double>(out.argmin_index);
  out.degenerate = best_var - worst_var <= 1e-12 * total;
  return out;
}

}  // namespace ls2pc
