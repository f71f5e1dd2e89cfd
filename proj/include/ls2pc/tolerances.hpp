#pragma once

namespace ls2pc {

/// Numerical thresholds used across the library. A single record so that the
/// defaults live in one place; every function that needs one reads it from
/// `tolerances()`.
struct Tolerances {
  /// ||U^T U - I||_F <= orthonormality * d for a Basis.
  double orthonormality = 1e-12;
  /// ||S - S^T||_F <= symmetry * ||S||_F for a SymmetricMatrix.
  double symmetry = 1e-12;
  /// |‖w‖ - 1| bound for unit-vector arguments.
  double unit_norm = 1e-12;
  /// Gram-Schmidt pivot below rank_pivot * ||M||_F means rank deficiency.
  double rank_pivot = 1e-12;
  /// Cholesky pivot below cholesky_pivot * trace(S) / d means not SPD.
  double cholesky_pivot = 1e-14;
  /// Jacobi stops when off-diagonal Frobenius mass <= jacobi_offdiag * ||S||_F.
  double jacobi_offdiag = 1e-12;
  int jacobi_max_sweeps = 50;
  /// Smallest singular value of U0^T Ud above this means rank d.
  double condition_rank = 1e-8;
  /// Relative gap (s_d - s_{d+1}) / s_d below this flags a repeated value.
  double degenerate_gap = 1e-10;
  /// Numerical noise floor for subspace errors.
  double error_floor = 1e-13;
};

inline const Tolerances& tolerances() {
  static const Tolerances t{};
  return t;
}

}  // namespace ls2pc
