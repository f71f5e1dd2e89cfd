#include <gtest/gtest.h>

#include <cmath>

#include "ls2pc/datagen.hpp"
#include "ls2pc/dense.hpp"
#include "ls2pc/error.hpp"
#include "ls2pc/iterations.hpp"
#include "ls2pc/pca_oracle.hpp"
#include "support/oracles.hpp"

namespace ls2pc {
namespace {

const std::vector<double> kSpectrum8{4, 3, 2, 1, 0.5, 0.25, 0.1, 0.05};

GeneratedInstance instance(std::uint64_t seed) {
  return generate_with_spectrum({8, 60, Spectrum(kSpectrum8), seed});
}

IterationSettings fixed_steps(std::size_t k) {
  IterationSettings s;
  s.eps = 1e-300;
  s.max_iter = k;
  return s;
}

SymmetricMatrix diag_matrix(std::initializer_list<double> values) {
  return SymmetricMatrix(Matrix::diagonal(std::vector<double>(values)));
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::InvalidArgument;
}

TEST(Settings, Validation) {
  IterationSettings s;
  s.eps = 0.0;
  EXPECT_EQ(code_of([&] { s.validate(); }), ErrorCode::InvalidArgument);
  s.eps = 1e-3;
  s.max_iter = 0;
  EXPECT_EQ(code_of([&] { s.validate(); }), ErrorCode::InvalidArgument);
}

TEST(PowerIteration, EigenvectorStartIsFixed) {
  const auto r = power_iteration(diag_matrix({3, 1}), std::vector<double>{1, 0}, {});
  EXPECT_EQ(r.terminated, Termination::Converged);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_EQ(std::abs(r.basis.matrix()(0, 0)), 1.0);
}

TEST(PowerIteration, ConvergesToLeadingEigenvector) {
  const double h = 1.0 / std::sqrt(2.0);
  const SymmetricMatrix s = diag_matrix({3, 1});
  const auto r = power_iteration(s, std::vector<double>{h, h}, {});
  EXPECT_EQ(r.terminated, Termination::Converged);
  const auto truth = jacobi_eigh(s).vectors.leading(1);
  EXPECT_LE(subspace_distance(r.basis, truth), 1e-10);
  // Eigen-residual with the Rayleigh quotient.
  const auto v = r.basis.column(0);
  const auto sv = matvec(s.matrix(), v);
  double lambda = 0.0;
  for (std::size_t i = 0; i < 2; ++i) lambda += v[i] * sv[i];
  double res = 0.0;
  for (std::size_t i = 0; i < 2; ++i) res += (sv[i] - lambda * v[i]) * (sv[i] - lambda * v[i]);
  EXPECT_LE(std::sqrt(res), 1e-9 * frobenius_norm(s.matrix()));
}

TEST(PowerIteration, RepeatedEigenvalueKeepsStart) {
  const std::vector<double> u0{0.6, 0.8};
  const auto r = power_iteration(diag_matrix({1, 1}), u0, {});
  EXPECT_EQ(r.terminated, Termination::Converged);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_NEAR(r.basis.matrix()(0, 0), 0.6, 1e-15);
  EXPECT_NEAR(r.basis.matrix()(1, 0), 0.8, 1e-15);
}

TEST(PowerIteration, Errors) {
  EXPECT_EQ(code_of([] { power_iteration(diag_matrix({3, 1}), std::vector<double>{1, 1}, {}); }),
            ErrorCode::NotUnit);
  EXPECT_EQ(code_of([] { power_iteration(diag_matrix({3, 1}), std::vector<double>{1, 0, 0}, {}); }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] { power_iteration(diag_matrix({3, 0}), std::vector<double>{0, 1}, {}); }),
            ErrorCode::ConditionViolated);
}

TEST(PowerIteration, OrthogonalStartNeverFindsLeadingVector) {
  IterationSettings s;
  s.max_iter = 50;
  const auto r = power_iteration(diag_matrix({3, 1, 0.5}), std::vector<double>{0, 1, 0}, s);
  EXPECT_NEAR(std::abs(r.basis.matrix()(1, 0)), 1.0, 1e-15);
}

TEST(SubspaceIteration, InvariantStartIsFixedPoint) {
  const SymmetricMatrix s = diag_matrix({5, 2, 1});
  const Basis u0 = Basis::coordinate(3, {0, 1});
  const auto r = subspace_iteration(s, u0, {});
  EXPECT_EQ(r.terminated, Termination::Converged);
  EXPECT_EQ(r.iterations, 1u);
  EXPECT_LE(subspace_distance(r.basis, jacobi_eigh(s).vectors.leading(2)), 1e-15);
}

TEST(SubspaceIteration, MixedStartConverges) {
  const SymmetricMatrix s = diag_matrix({5, 2, 1});
  // Columns 1 and 3 of a random rotation of R^3: [e1 e3] moved into general position.
  const Matrix g = random_orthonormal(3, 3, 3).matrix();
  Matrix cols(3, 2);
  for (std::size_t i = 0; i < 3; ++i) {
    cols(i, 0) = g(i, 0);
    cols(i, 1) = g(i, 2);
  }
  IterationSettings settings;
  settings.eps = 1e-12;
  const Basis truth = jacobi_eigh(s).vectors.leading(2);
  settings.oracle = OracleReference{truth, false};
  const auto r = subspace_iteration(s, Basis(cols), settings);
  EXPECT_EQ(r.terminated, Termination::Converged);
  EXPECT_TRUE(r.condition->satisfied);
  EXPECT_LE(subspace_distance(r.basis, Basis::coordinate(3, {0, 1})), 10 * settings.eps);
}

TEST(SubspaceIteration, ConditionViolationIsReported) {
  const SymmetricMatrix s = diag_matrix({5, 2, 1});
  IterationSettings settings;
  settings.max_iter = 200;
  settings.oracle = OracleReference{Basis::coordinate(3, {0, 1}), false};
  const auto r = subspace_iteration(s, Basis::coordinate(3, {1, 2}), settings);
  ASSERT_TRUE(r.condition.has_value());
  EXPECT_FALSE(r.condition->satisfied);
  EXPECT_EQ(r.condition->smallest_cosine, 0.0);
  EXPECT_FALSE(r.warnings.empty());
  // Stuck on span(e2, e3): the oracle error stays at 1.
  EXPECT_NEAR(r.trace.steps.back().oracle_error.value(), 1.0, 1e-15);
}

TEST(LeastSquaresStep, IdentityData) {
  const Matrix a = least_squares_step(DataMatrix(Matrix::identity(2)), Basis::coordinate(2, {0}));
  EXPECT_EQ(a, Matrix::from_rows({{1}, {0}}));
}

TEST(LeastSquaresStep, InvariantSubspaceIsPreserved) {
  const auto inst = instance(4);
  const Basis top = pca_topd(inst.data, 3).basis;
  const Matrix a = least_squares_step(inst.data, top);
  EXPECT_LE(subspace_distance(gram_schmidt(a), top), 1e-12);
}

TEST(LeastSquaresStep, MatchesRowByRowNormalEquations) {
  const Matrix r = oracle::uniform_matrix(3, 10, 5);
  const Basis u = random_orthonormal(3, 1, 5);
  const Matrix a = least_squares_step(DataMatrix(r), u);
  const Matrix x = oracle::naive_matmul(oracle::naive_transpose(u.matrix()), r);
  const Matrix expected = oracle::rowwise_ols(r, x);
  EXPECT_LE(oracle::naive_fro(oracle::naive_sub(a, expected)), 1e-12 * oracle::naive_fro(expected));
}

// No perturbation of the solution fits the data better.
TEST(LeastSquaresStep, PropertyOptimality) {
  const DataMatrix r(oracle::uniform_matrix(6, 25, 12));
  const Basis u = random_orthonormal(6, 2, 12);
  const Matrix a = least_squares_step(r, u);
  const Matrix x = matmul_tn(u.matrix(), r.matrix());
  const double best = frobenius_norm(r.matrix() - matmul(a, x));
  for (std::uint64_t t = 0; t < 100; ++t) {
    const double size = std::pow(10.0, -static_cast<double>(t % 8));
    const Matrix b = a + size * oracle::uniform_matrix(6, 2, 7000 + t);
    EXPECT_LE(best, frobenius_norm(r.matrix() - matmul(b, x)) + 1e-9);
  }
}

TEST(LeastSquaresStep, NullSpaceDirectionViolatesCondition) {
  // Data confined to span(e1, e2); e3 sees no samples, so X X^T is singular.
  Matrix r(3, 10);
  for (std::size_t i = 0; i < 10; ++i) {
    r(0, i) = std::cos(static_cast<double>(i));
    r(1, i) = std::sin(static_cast<double>(2 * i));
  }
  EXPECT_EQ(code_of([&] { least_squares_step(DataMatrix(r), Basis::coordinate(3, {0, 2})); }),
            ErrorCode::ConditionViolated);
  EXPECT_EQ(code_of([&] { ls2pc(DataMatrix(r), Basis::coordinate(3, {2}), {}); }),
            ErrorCode::ConditionViolated);
}

TEST(Ls2pc, NoisyLineConvergesToItsDirection) {
  Matrix r(3, 40);
  NormalSource noise(17);
  for (std::size_t i = 0; i < 40; ++i) {
    r(0, i) = noise.next() * 3.0;
    r(1, i) = 1e-3 * noise.next();
    r(2, i) = 1e-3 * noise.next();
  }
  const DataMatrix data(r);
  const double n = std::sqrt(0.01 + 1.0);
  const Basis u0(Matrix::from_rows({{0.1 / n}, {1.0 / n}, {0.0}}));
  IterationSettings settings;
  settings.eps = 1e-12;
  const auto result = ls2pc(data, u0, settings);
  EXPECT_EQ(result.terminated, Termination::Converged);
  EXPECT_LE(subspace_distance(result.basis, pca_topd(data, 1).basis), 1e-11);
  EXPECT_LE(subspace_distance(result.basis, Basis::coordinate(3, {0})), 1e-2);
}

TEST(Ls2pc, OracleStartIsFixedPoint) {
  const auto inst = instance(1);
  const Basis top = pca_topd(inst.data, 3).basis;
  const auto result = ls2pc(inst.data, top, {});
  EXPECT_EQ(result.iterations, 1u);
  EXPECT_LE(result.trace.steps.front().step_change, 1e-12);
}

TEST(Ls2pc, GeneratedInstanceReachesPrincipalSpace) {
  const auto inst = instance(1);
  const PrincipalSpace truth = pca_topd(inst.data, 3);
  IterationSettings settings;
  settings.oracle = OracleReference{truth.basis, truth.degenerate_gap};
  const auto result = ls2pc(inst.data, random_orthonormal(8, 3, 71), settings);
  EXPECT_EQ(result.terminated, Termination::Converged);
  EXPECT_LE(subspace_distance(result.basis, truth.basis), 1e-9);
  EXPECT_TRUE(result.condition->satisfied);
  EXPECT_FALSE(result.degenerate_gap);
  EXPECT_TRUE(result.warnings.empty());
  ASSERT_EQ(result.trace.steps.size(), result.iterations);
  for (std::size_t i = 0; i < result.trace.steps.size(); ++i) {
    EXPECT_EQ(result.trace.steps[i].k, i + 1);
    EXPECT_GE(result.trace.steps[i].step_change, 0.0);
  }
}

TEST(Ls2pc, RawMetricAlsoConverges) {
  const auto inst = instance(2);
  IterationSettings settings;
  settings.stop_metric = StopMetric::RawBasisDifference;
  settings.eps = 1e-11;
  const auto result = ls2pc(inst.data, random_orthonormal(8, 3, 72), settings);
  EXPECT_EQ(result.terminated, Termination::Converged);
  EXPECT_LE(subspace_distance(result.basis, pca_topd(inst.data, 3).basis), 1e-9);
}

TEST(Ls2pc, MaxIterIsReportedNotThrown) {
  const auto inst = instance(3);
  IterationSettings settings;
  settings.max_iter = 3;
  const auto result = ls2pc(inst.data, random_orthonormal(8, 3, 73), settings);
  EXPECT_EQ(result.terminated, Termination::MaxIter);
  EXPECT_EQ(result.iterations, 3u);
}

TEST(Ls2pc, TraceCanBeSkipped) {
  const auto inst = instance(3);
  IterationSettings settings;
  settings.record_trace = false;
  const auto result = ls2pc(inst.data, random_orthonormal(8, 3, 73), settings);
  EXPECT_TRUE(result.trace.steps.empty());
  EXPECT_FALSE(result.trace.initial.has_value());
}

TEST(Ls2pc, DegenerateGapIsFlagged) {
  const auto inst = generate_with_spectrum({4, 20, Spectrum({2, 1, 1, 0.5}), 6});
  const PrincipalSpace truth = pca_topd(inst.data, 2);
  EXPECT_TRUE(truth.degenerate_gap);
  IterationSettings settings;
  settings.oracle = OracleReference{truth.basis, truth.degenerate_gap};
  settings.max_iter = 20;
  const auto result = ls2pc(inst.data, random_orthonormal(4, 2, 6), settings);
  EXPECT_TRUE(result.degenerate_gap);
  EXPECT_FALSE(result.warnings.empty());
}

TEST(Ls2pc, FewerSamplesThanDimensionsStillRuns) {
  const DataMatrix r(oracle::uniform_matrix(6, 4, 8));
  IterationSettings settings;
  settings.eps = 1e-12;
  const auto result = ls2pc(r, random_orthonormal(6, 2, 8), settings);
  EXPECT_EQ(result.terminated, Termination::Converged);
  EXPECT_LE(subspace_distance(result.basis, pca_topd(r, 2).basis), 1e-9);
}

// Rebasing U0 inside its span does not change any later subspace.
TEST(Ls2pc, PropertyBasisInvariance) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const auto inst = instance(seed);
    const Basis u0 = random_orthonormal(8, 3, 100 + seed);
    const Matrix q = random_orthonormal(3, 3, 200 + seed).matrix();
    const auto a = ls2pc(inst.data, u0, fixed_steps(20));
    const auto b = ls2pc(inst.data, u0.rebased(q), fixed_steps(20));
    ASSERT_EQ(a.trace.steps.size(), b.trace.steps.size());
    for (std::size_t k = 0; k < a.trace.steps.size(); ++k) {
      EXPECT_LE(subspace_distance(a.trace.steps[k].basis, b.trace.steps[k].basis), 1e-10);
    }
  }
}

// Scaling the data scales the least-squares solution, not its span.
TEST(Ls2pc, PropertyScaleEquivariance) {
  for (double c : {1e-3, 0.5, 7.0, 1e4}) {
    const auto inst = instance(5);
    const DataMatrix scaled(c * inst.data.matrix());
    const Basis u0 = random_orthonormal(8, 3, 55);
    const auto a = ls2pc(inst.data, u0, fixed_steps(15));
    const auto b = ls2pc(scaled, u0, fixed_steps(15));
    for (std::size_t k = 0; k < 15; ++k) {
      EXPECT_LE(subspace_distance(a.trace.steps[k].basis, b.trace.steps[k].basis), 1e-10) << c;
    }
  }
}

TEST(CheckCondition, Examples) {
  const Basis u = random_orthonormal(5, 2, 9);
  const auto same = check_condition(u, u);
  EXPECT_TRUE(same.satisfied);
  EXPECT_NEAR(same.smallest_cosine, 1.0, 1e-15);

  const auto perp = check_condition(Basis::coordinate(2, {0}), Basis::coordinate(2, {1}));
  EXPECT_FALSE(perp.satisfied);
  EXPECT_EQ(perp.smallest_cosine, 0.0);

  const auto partial = check_condition(Basis::coordinate(3, {0, 1}), Basis::coordinate(3, {0, 2}));
  EXPECT_FALSE(partial.satisfied);
  EXPECT_EQ(partial.smallest_cosine, 0.0);

  EXPECT_EQ(code_of([] { check_condition(Basis::coordinate(3, {0}), Basis::coordinate(3, {0, 1})); }),
            ErrorCode::DimensionMismatch);
}

TEST(CheckCondition, PropertyRebasingInvariance) {
  for (std::uint64_t seed = 0; seed < 15; ++seed) {
    const Basis u0 = random_orthonormal(7, 3, 300 + seed);
    const Basis ud = random_orthonormal(7, 3, 400 + seed);
    const Matrix q1 = random_orthonormal(3, 3, 500 + seed).matrix();
    const Matrix q2 = random_orthonormal(3, 3, 600 + seed).matrix();
    const auto base = check_condition(u0, ud);
    const auto moved = check_condition(u0.rebased(q1), ud.rebased(q2));
    EXPECT_EQ(base.satisfied, moved.satisfied);
    EXPECT_NEAR(base.smallest_cosine, moved.smallest_cosine, 1e-13);
  }
}

TEST(RunPaired, ZeroStepsIsSingleZero) {
  const auto inst = instance(1);
  const auto d = run_paired(inst.data, random_orthonormal(8, 3, 71), 0);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_EQ(d[0], 0.0);
}

TEST(RunPaired, GeneratedInstanceStaysLocked) {
  const auto inst = instance(1);
  const auto d = run_paired(inst.data, random_orthonormal(8, 3, 71), 30);
  ASSERT_EQ(d.size(), 31u);
  for (double v : d) EXPECT_LE(v, 1e-9);
}

TEST(RunPaired, SharedFixedPoint) {
  const DataMatrix r(Matrix::from_rows({{3, 0, 0, 0, 0}, {0, 2, 0, 0, 0}, {0, 0, 1, 0, 0}}));
  const auto d = run_paired(r, Basis::coordinate(3, {0, 1}), 10);
  for (double v : d) EXPECT_LE(v, 1e-12);
}

TEST(RunPaired, PropertyManySeeds) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto inst = instance(seed);
    const auto d = run_paired(inst.data, random_orthonormal(8, 3, 1000 + seed), 30);
    for (double v : d) EXPECT_LE(v, 1e-9) << "seed " << seed;
  }
}

TEST(RunPaired, ViolatedConditionIsRejected) {
  const auto inst = instance(1);
  // Directions from the orthogonal complement of the principal space.
  Matrix tail(8, 3);
  for (std::size_t j = 0; j < 3; ++j) {
    auto src = inst.principal_axes.column(3 + j);
    std::copy(src.begin(), src.end(), tail.col(j).begin());
  }
  EXPECT_EQ(code_of([&] { run_paired(inst.data, Basis(tail), 5); }), ErrorCode::ConditionViolated);
}

}  // namespace
}  // namespace ls2pc
