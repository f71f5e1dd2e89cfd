#include <algorithm>
#include <cmath>

#include "ls2pc/dense.hpp"
#include "ls2pc/error.hpp"

namespace ls2pc {
namespace {

void require_comparable(const Basis& u, const Basis& v) {
  if (u.ambient_dim() != v.ambient_dim() || u.dim() != v.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subspaces must share ambient and subspace dimension");
  }
}

// (I - U U^T) V
Matrix residual(const Basis& u, const Basis& v) {
  return v.matrix() - matmul(u.matrix(), matmul_tn(u.matrix(), v.matrix()));
}

}  // namespace

std::vector<double> principal_angles(const Basis& u, const Basis& v) {
  require_comparable(u, v);
  const std::size_t d = u.dim();
  // Two d-dimensional subspaces of R^d coincide.
  if (d == u.ambient_dim()) return std::vector<double>(d, 0.0);

  std::vector<double> cosines = singular_values(matmul_tn(u.matrix(), v.matrix()));
  std::vector<double> sines = singular_values(residual(u, v));
  std::vector<double> angles(d);
  for (std::size_t i = 0; i < d; ++i) {
    const double c = std::clamp(cosines[i], 0.0, 1.0);
    const double s = std::clamp(sines[d - 1 - i], 0.0, 1.0);
    angles[i] = c * c >= 0.5 ? std::asin(s) : std::acos(c);
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

double subspace_distance(const Basis& u, const Basis& v) {
  require_comparable(u, v);
  if (u.dim() == u.ambient_dim()) return 0.0;
  return std::min(1.0, singular_values(residual(u, v)).front());
}

double projector_distance(const Basis& u, const Basis& v) {
  require_comparable(u, v);
  if (u.dim() == u.ambient_dim()) return 0.0;
  return frobenius_norm(residual(u, v));
}

}  // namespace ls2pc
