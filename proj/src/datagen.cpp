#include "ls2pc/datagen.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ls2pc/dense.hpp"
#include "ls2pc/error.hpp"

namespace ls2pc {

NormalSource::NormalSource(std::uint64_t seed) : engine_(seed) {}

double NormalSource::uniform_open_closed() {
  return static_cast<double>((engine_() >> 11) + 1) * 0x1p-53;
}

double NormalSource::next() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  const double u1 = uniform_open_closed();
  const double u2 = uniform_open_closed();
  const double radius = std::sqrt(-2.0 * std::log(u1));
  const double angle = 2.0 * std::numbers::pi * u2;
  spare_ = radius * std::sin(angle);
  has_spare_ = true;
  return radius * std::cos(angle);
}

SeededBasis random_orthonormal_seeded(std::size_t p, std::size_t d, std::uint64_t seed) {
  if (d == 0 || d > p) {
    throw Error(ErrorCode::InvalidArgument, "random_orthonormal: need 1 <= d <= p");
  }
  constexpr int kMaxAttempts = 16;
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    const std::uint64_t s = seed + static_cast<std::uint64_t>(attempt);
    NormalSource normals(s);
    Matrix m(p, d);
    for (double& x : m.data()) x = normals.next();
    try {
      return {gram_schmidt(m), s};
    } catch (const Error& e) {
      if (e.code() != ErrorCode::RankDeficient) throw;
    }
  }
  throw Error(ErrorCode::RankDeficient, "random_orthonormal: repeated rank-deficient draws");
}

Basis random_orthonormal(std::size_t p, std::size_t d, std::uint64_t seed) {
  return random_orthonormal_seeded(p, d, seed).basis;
}

GeneratedInstance generate_with_spectrum(const GenSpec& spec) {
  if (spec.p == 0 || spec.n <= spec.p) {
    throw Error(ErrorCode::InvalidArgument, "generate_with_spectrum: need 1 <= p < N");
  }
  if (spec.spectrum.size() != spec.p) {
    throw Error(ErrorCode::DimensionMismatch,
                "spectrum has " + std::to_string(spec.spectrum.size()) + " values, p = " +
                    std::to_string(spec.p));
  }
  Basis axes = random_orthonormal(spec.p, spec.p, spec.seed);
  const Basis right = random_orthonormal(spec.n, spec.p, spec.seed + 1);

  Matrix scaled = axes.matrix();
  for (std::size_t j = 0; j < spec.p; ++j) {
    for (double& x : scaled.col(j)) x *= spec.spectrum[j];
  }
  return {DataMatrix(matmul_nt(scaled, right.matrix())), std::move(axes)};
}

}  // namespace ls2pc
