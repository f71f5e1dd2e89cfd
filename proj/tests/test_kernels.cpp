#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "ls2pc/datagen.hpp"
#include "ls2pc/dense.hpp"
#include "ls2pc/iterations.hpp"
#include "ls2pc/kernels.hpp"
#include "support/oracles.hpp"

namespace ls2pc {
namespace {

using kernels::KernelTable;

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
  const Matrix m = oracle::uniform_matrix(n, 1, seed);
  return {m.data().begin(), m.data().end()};
}

// Restores the default table after tests that force one.
class KernelScope {
 public:
  explicit KernelScope(const char* name) : saved_(kernels::active().name) {
    EXPECT_TRUE(kernels::select(name));
  }
  ~KernelScope() { kernels::select(saved_); }

 private:
  const char* saved_;
};

TEST(Kernels, ScalarTableIsAlwaysAvailable) {
  const auto tables = kernels::available_tables();
  ASSERT_FALSE(tables.empty());
  EXPECT_STREQ(tables.front()->name, "scalar");
  EXPECT_FALSE(kernels::select("no-such-isa"));
}

// Every vector table must match the scalar reference within a rounding
// bound of n * eps * sum |x_i y_i|, for lengths that exercise all tails.
TEST(Kernels, VariantsMatchScalarReference) {
  const KernelTable& ref = kernels::scalar_table();
  for (const KernelTable* t : kernels::available_tables()) {
    SCOPED_TRACE(t->name);
    for (std::size_t n = 0; n <= 67; ++n) {
      const auto x = random_vector(n, 100 + n);
      const auto y = random_vector(n, 200 + n);
      double abs_sum = 0.0;
      for (std::size_t i = 0; i < n; ++i) abs_sum += std::abs(x[i] * y[i]);
      const double bound = 4.0 * static_cast<double>(n + 1) * 2.2e-16 * (abs_sum + 1e-300);

      EXPECT_NEAR(t->dot(x.data(), y.data(), n), ref.dot(x.data(), y.data(), n), bound);
      EXPECT_NEAR(t->sum_squares(x.data(), n), ref.sum_squares(x.data(), n),
                  4.0 * static_cast<double>(n + 1) * 2.2e-16 * ref.sum_squares(x.data(), n) +
                      1e-300);

      auto y1 = y, y2 = y;
      t->axpy(-0.75, x.data(), y1.data(), n);
      ref.axpy(-0.75, x.data(), y2.data(), n);
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(y1[i], y2[i], 1e-15);

      auto s1 = x, s2 = x;
      t->scale(3.5, s1.data(), n);
      ref.scale(3.5, s2.data(), n);
      EXPECT_EQ(s1, s2);

      auto rx1 = x, ry1 = y, rx2 = x, ry2 = y;
      t->rotate(0.6, 0.8, rx1.data(), ry1.data(), n);
      ref.rotate(0.6, 0.8, rx2.data(), ry2.data(), n);
      for (std::size_t i = 0; i < n; ++i) {
        EXPECT_NEAR(rx1[i], rx2[i], 1e-15);
        EXPECT_NEAR(ry1[i], ry2[i], 1e-15);
      }
    }
  }
}

TEST(Kernels, RotationPreservesPairNorms) {
  for (const KernelTable* t : kernels::available_tables()) {
    auto x = random_vector(33, 1);
    auto y = random_vector(33, 2);
    const double before = t->sum_squares(x.data(), 33) + t->sum_squares(y.data(), 33);
    const double c = std::cos(0.3), s = std::sin(0.3);
    t->rotate(c, s, x.data(), y.data(), 33);
    const double after = t->sum_squares(x.data(), 33) + t->sum_squares(y.data(), 33);
    EXPECT_NEAR(after, before, 1e-13 * before) << t->name;
  }
}

// The full algorithm must land on the same subspace whichever table runs
// the inner loops.
TEST(Kernels, Ls2pcAgreesAcrossTables) {
  const GeneratedInstance inst = generate_with_spectrum(
      {8, 60, Spectrum({4, 3, 2, 1, 0.5, 0.25, 0.1, 0.05}), 1});
  const Basis u0 = random_orthonormal(8, 3, 42);
  IterationSettings settings;
  settings.eps = 1e-12;

  std::optional<Basis> reference;
  for (const KernelTable* t : kernels::available_tables()) {
    KernelScope scope(t->name);
    const SubspaceResult r = ls2pc(inst.data, u0, settings);
    EXPECT_EQ(r.terminated, Termination::Converged) << t->name;
    if (!reference) {
      reference = r.basis;
    } else {
      EXPECT_LE(subspace_distance(*reference, r.basis), 1e-12) << t->name;
    }
  }
}

}  // namespace
}  // namespace ls2pc
