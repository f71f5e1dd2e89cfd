#pragma once

#include <vector>

#include "ls2pc/matrix.hpp"
#include "ls2pc/types.hpp"

namespace ls2pc {

/// Thin QR factor: orthonormal basis of Col(M) via modified Gram-Schmidt with
/// one reorthogonalization pass. The implied triangular factor has a positive
/// diagonal, so the result is unique. Throws RankDeficient when a pivot falls
/// below tolerances().rank_pivot * ||M||_F.
Basis gram_schmidt(const Matrix& m);

/// Lower Cholesky factor of a symmetric positive definite matrix. Throws
/// NotPositiveDefinite on a pivot below tolerances().cholesky_pivot * trace/d.
Matrix cholesky(const Matrix& s);

/// Solves S W = B for symmetric positive definite S (d x d) and B (d x m).
Matrix solve_spd(const Matrix& s, const Matrix& b);

struct EigenDecomposition {
  /// Sorted nonincreasing. May carry tiny negative values for PSD input.
  std::vector<double> values;
  /// Column j pairs with values[j].
  Basis vectors;
};

/// Cyclic Jacobi eigensolver. Throws NoConvergence after
/// tolerances().jacobi_max_sweeps sweeps.
EigenDecomposition jacobi_eigh(const SymmetricMatrix& s);

/// Singular values of a tall or square matrix by one-sided Jacobi, sorted
/// nonincreasing. Accurate to roughly machine epsilon times ||M||_2 in
/// absolute terms, including the small ones.
std::vector<double> singular_values(const Matrix& m);

/// Principal angles between Col(U) and Col(V), nondecreasing, in [0, pi/2].
/// Small angles come from the sines (singular values of V - U U^T V) and
/// large ones from the cosines (singular values of U^T V), which keeps both
/// ends accurate.
std::vector<double> principal_angles(const Basis& u, const Basis& v);

/// sin of the largest principal angle, i.e. ||(I - U U^T) V||_2.
double subspace_distance(const Basis& u, const Basis& v);

/// ||U U^T - V V^T||_F / sqrt(2) = sqrt(sum_i sin^2 theta_i).
double projector_distance(const Basis& u, const Basis& v);

}  // namespace ls2pc
