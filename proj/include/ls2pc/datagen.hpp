#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "ls2pc/types.hpp"

namespace ls2pc {

/// Deterministic standard-normal source: std::mt19937_64 for raw bits, the
/// top 53 bits mapped to (0, 1], and Box-Muller for the Gaussian pair. Both
/// pieces are fully specified, so a seed reproduces bit-identical draws on a
/// fixed build.
class NormalSource {
 public:
  explicit NormalSource(std::uint64_t seed);
  double next();

 private:
  double uniform_open_closed();

  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

struct GenSpec {
  std::size_t p = 0;
  std::size_t n = 0;
  /// Singular values of R, length p.
  Spectrum spectrum{{}};
  std::uint64_t seed = 0;
};

struct GeneratedInstance {
  DataMatrix data;
  /// P in R = P diag(spectrum) Q^T; its leading d columns span the top-d
  /// principal space whenever spectrum[d-1] > spectrum[d].
  Basis principal_axes;
};

struct SeededBasis {
  Basis basis;
  /// Seed actually used; differs from the request only if a draw was rank
  /// deficient and had to be repeated with seed + 1.
  std::uint64_t seed_used;
};

/// p x d Gaussian matrix orthonormalized by gram_schmidt.
SeededBasis random_orthonormal_seeded(std::size_t p, std::size_t d, std::uint64_t seed);
Basis random_orthonormal(std::size_t p, std::size_t d, std::uint64_t seed);

/// R = P diag(spectrum) Q^T with P = random_orthonormal(p, p, seed) and
/// Q = random_orthonormal(N, p, seed + 1). Requires N > p.
GeneratedInstance generate_with_spectrum(const GenSpec& spec);

}  // namespace ls2pc
