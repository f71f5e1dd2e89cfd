#include "ls2pc/iterations.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "ls2pc/dense.hpp"
#include "ls2pc/error.hpp"
#include "ls2pc/pca_oracle.hpp"
#include "ls2pc/tolerances.hpp"

namespace ls2pc {
namespace {

double step_change(const Basis& current, const Basis& previous, StopMetric metric) {
  switch (metric) {
    case StopMetric::ProjectorDistance: return projector_distance(current, previous);
    case StopMetric::RawBasisDifference:
      return frobenius_norm(current.matrix() - previous.matrix());
  }
  return 0.0;
}

std::string format_cosine(double c) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", c);
  return buf;
}

// Shared driver for the three algorithms: apply `step` until the chosen
// metric between consecutive bases drops below eps.
template <typename Step>
SubspaceResult iterate(const Basis& u0, const IterationSettings& settings, Step&& step) {
  settings.validate();
  SubspaceResult result{u0, 0, Termination::MaxIter, {}, false, std::nullopt, {}};

  const OracleReference* oracle = settings.oracle ? &*settings.oracle : nullptr;
  if (oracle != nullptr) {
    if (oracle->basis.ambient_dim() != u0.ambient_dim() || oracle->basis.dim() != u0.dim()) {
      throw Error(ErrorCode::DimensionMismatch, "oracle basis does not match the start basis");
    }
    result.condition = check_condition(u0, oracle->basis);
    if (!result.condition->satisfied) {
      result.warnings.push_back(
          "initial basis fails the rank condition rank(U0^T Ud) = d (smallest cosine " +
          format_cosine(result.condition->smallest_cosine) +
          "); the iteration may settle on a non-leading invariant subspace");
    }
    result.degenerate_gap = oracle->degenerate_gap;
    if (oracle->degenerate_gap) {
      result.warnings.push_back(
          "singular values d and d+1 coincide; the leading d-dimensional subspace is not unique");
    }
  }
  if (settings.record_trace) result.trace.initial = u0;

  Basis current = u0;
  for (std::size_t k = 1; k <= settings.max_iter; ++k) {
    Basis next = step(current);
    const double change = step_change(next, current, settings.stop_metric);
    std::optional<double> error;
    if (oracle != nullptr) error = subspace_distance(next, oracle->basis);
    if (settings.record_trace) result.trace.steps.push_back({k, next, change, error});
    current = std::move(next);
    result.iterations = k;
    if (change < settings.eps) {
      result.terminated = Termination::Converged;
      break;
    }
  }
  result.basis = std::move(current);
  return result;
}

}  // namespace

const char* to_string(Termination t) {
  return t == Termination::Converged ? "Converged" : "MaxIter";
}

const char* to_string(StopMetric m) {
  return m == StopMetric::ProjectorDistance ? "projector" : "raw";
}

void IterationSettings::validate() const {
  if (!(eps > 0.0)) throw Error(ErrorCode::InvalidArgument, "eps must be positive");
  if (max_iter < 1) throw Error(ErrorCode::InvalidArgument, "max_iter must be at least 1");
}

ConditionReport check_condition(const Basis& u0, const Basis& ud) {
  if (u0.ambient_dim() != ud.ambient_dim() || u0.dim() != ud.dim()) {
    throw Error(ErrorCode::DimensionMismatch, "check_condition: bases differ in shape");
  }
  const std::vector<double> sv = singular_values(matmul_tn(u0.matrix(), ud.matrix()));
  const double smallest = std::clamp(sv.back(), 0.0, 1.0);
  return {smallest > tolerances().condition_rank, smallest};
}

SubspaceResult power_iteration(const SymmetricMatrix& s, std::span<const double> u0,
                               const IterationSettings& settings) {
  if (u0.size() != s.dim()) throw Error(ErrorCode::DimensionMismatch, "u0 length differs from S");
  if (std::abs(norm2(u0) - 1.0) > tolerances().unit_norm) {
    throw Error(ErrorCode::NotUnit, "power_iteration: u0 must be a unit vector");
  }
  Matrix start(u0.size(), 1);
  std::copy(u0.begin(), u0.end(), start.col(0).begin());
  return iterate(Basis(std::move(start)), settings, [&](const Basis& v) {
    Matrix z = matmul(s.matrix(), v.matrix());
    const double norm = frobenius_norm(z);
    if (!(norm > 0.0)) {
      throw Error(ErrorCode::ConditionViolated, "S v vanished: the start lies in the null space of S");
    }
    return Basis((1.0 / norm) * z);
  });
}

Basis subspace_step(const SymmetricMatrix& s, const Basis& v) {
  if (s.dim() != v.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "subspace_step");
  return gram_schmidt(matmul(s.matrix(), v.matrix()));
}

SubspaceResult subspace_iteration(const SymmetricMatrix& s, const Basis& u0,
                                  const IterationSettings& settings) {
  if (s.dim() != u0.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "subspace_iteration: S and U0 differ in dimension");
  }
  return iterate(u0, settings, [&](const Basis& v) { return subspace_step(s, v); });
}

Matrix least_squares_step(const DataMatrix& r, const Basis& u) {
  if (r.dim() != u.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "least_squares_step: R and U differ in p");
  }
  const Matrix& data = r.matrix();
  const Matrix x = matmul_tn(u.matrix(), data);  // d x N coordinates
  const Matrix normal = matmul_nt(x, x);          // X X^T
  const Matrix rhs = matmul_nt(data, x);          // R X^T
  try {
    // A (X X^T) = R X^T  <=>  (X X^T) A^T = X R^T
    return transpose(solve_spd(normal, transpose(rhs)));
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotPositiveDefinite) throw;
    throw Error(ErrorCode::ConditionViolated,
                "X X^T is singular, so rank(U^T R) < d: the basis has a direction orthogonal to "
                "every sample, which violates the rank condition rank(U0^T Ud) = d (" +
                    std::string(e.what()) + ")");
  }
}

Basis ls2pc_step(const DataMatrix& r, const Basis& u) {
  return gram_schmidt(least_squares_step(r, u));
}

SubspaceResult ls2pc(const DataMatrix& r, const Basis& u0, const IterationSettings& settings) {
  if (r.dim() != u0.ambient_dim()) {
    throw Error(ErrorCode::DimensionMismatch, "ls2pc: R and U0 differ in p");
  }
  return iterate(u0, settings, [&](const Basis& u) { return ls2pc_step(r, u); });
}

std::vector<double> run_paired(const DataMatrix& r, const Basis& u0, std::size_t k_max) {
  if (r.dim() != u0.ambient_dim()) throw Error(ErrorCode::DimensionMismatch, "run_paired");
  const PrincipalSpace truth = pca_topd(r, u0.dim());
  const ConditionReport cond = check_condition(u0, truth.basis);
  if (!cond.satisfied) {
    throw Error(ErrorCode::ConditionViolated,
                "rank(U0^T Ud) < d: smallest cosine between the start and the principal space is " +
                    format_cosine(cond.smallest_cosine));
  }
  const SymmetricMatrix s = scatter(r);
  Basis ls = u0;
  Basis si = u0;
  std::vector<double> distances{0.0};
  for (std::size_t k = 1; k <= k_max; ++k) {
    ls = ls2pc_step(r, ls);
    si = subspace_step(s, si);
    distances.push_back(subspace_distance(ls, si));
  }
  return distances;
}

}  // namespace ls2pc
