#pragma once

#include <cstddef>
#include <span>

#include "ls2pc/types.hpp"

namespace ls2pc {

/// R R^T / N, symmetrized.
SymmetricMatrix covariance(const DataMatrix& r);

/// R R^T, the matrix Subspace Iterations runs on.
SymmetricMatrix scatter(const DataMatrix& r);

struct PrincipalSpace {
  /// Leading d eigenvectors of R R^T.
  Basis basis;
  /// All p singular values of R (square roots of the eigenvalues of R R^T,
  /// negatives from rounding clamped to zero). Divide the squares by N for
  /// the eigenvalues of the covariance.
  Spectrum singular_values;
  /// s_d and s_{d+1} are equal within tolerances().degenerate_gap, so the
  /// top-d space is not unique. Always false for d = p.
  bool degenerate_gap;
};

/// Ground truth from jacobi_eigh on R R^T.
PrincipalSpace pca_topd(const DataMatrix& r, std::size_t d);

/// True when (s[d-1] - s[d]) / s[d-1] < tolerances().degenerate_gap, or s[d-1] = 0.
bool has_degenerate_gap(const Spectrum& s, std::size_t d);

/// sum_i <w, r_i>^2 = ||w^T R||^2. Unnormalized: divide by N for the sample
/// variance. Throws NotUnit unless |‖w‖ - 1| <= tolerances().unit_norm.
double variance_along(const DataMatrix& r, std::span<const double> w);

/// sum_i ||r_i - <w, r_i> w||^2, summed directly over samples.
double sum_sq_distances(const DataMatrix& r, std::span<const double> w);

/// The same quantity through ||R||_F^2 - variance_along(r, w).
double sum_sq_distances_identity(const DataMatrix& r, std::span<const double> w);

struct PearsonSweep {
  std::size_t argmax_index;
  std::size_t argmin_index;
  double argmax_angle;
  double argmin_angle;
  /// max over the grid of |variance + distance - ||R||_F^2|.
  double max_gap;
  /// Variance is constant over the grid within 1e-12 ||R||_F^2 (isotropic
  /// data, no unique direction).
  bool degenerate;
};

/// Sweeps w = (cos t, sin t) over t_j = pi j / grid_n, j < grid_n, and
/// records the variance maximizer and the distance minimizer. Ties resolve
/// to the lowest index. Requires p = 2 and grid_n >= 3.
PearsonSweep pearson_equivalence_2d(const DataMatrix& r, std::size_t grid_n);

}  // namespace ls2pc
