#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace ls2pc::kernels {

/// Level-1 inner loops. Every table implements the same contract; the scalar
/// table is the reference and the vector tables are tested against it.
struct KernelTable {
  const char* name;
  /// sum_i x[i] * y[i]
  double (*dot)(const double* x, const double* y, std::size_t n);
  /// y += a * x
  void (*axpy)(double a, const double* x, double* y, std::size_t n);
  /// x *= a
  void (*scale)(double a, double* x, std::size_t n);
  /// sum_i x[i]^2
  double (*sum_squares)(const double* x, std::size_t n);
  /// (x, y) <- (c x - s y, s x + c y)
  void (*rotate)(double c, double s, double* x, double* y, std::size_t n);
};

const KernelTable& scalar_table();

/// nullptr when the variant was not compiled in or the CPU lacks support.
const KernelTable* avx2_table();
const KernelTable* neon_table();

/// All tables usable on this host, scalar first.
std::vector<const KernelTable*> available_tables();

/// The table used by the library. Chosen once at first use: the widest
/// supported variant, unless LS2PC_KERNELS names another ("scalar", "avx2",
/// "neon").
const KernelTable& active();

/// Overrides the active table by name. Returns false if it is unavailable.
bool select(std::string_view name);

inline double dot(std::span<const double> x, std::span<const double> y) {
  return active().dot(x.data(), y.data(), x.size());
}
inline void axpy(double a, std::span<const double> x, std::span<double> y) {
  active().axpy(a, x.data(), y.data(), x.size());
}
inline void scale(double a, std::span<double> x) { active().scale(a, x.data(), x.size()); }
inline double sum_squares(std::span<const double> x) {
  return active().sum_squares(x.data(), x.size());
}
inline void rotate(double c, double s, std::span<double> x, std::span<double> y) {
  active().rotate(c, s, x.data(), y.data(), x.size());
}

}  // namespace ls2pc::kernels
