#include "ls2pc/metrics.hpp"

#include <cmath>
#include <string>

#include "ls2pc/dense.hpp"
#include "ls2pc/error.hpp"
#include "ls2pc/tolerances.hpp"

namespace ls2pc {
namespace {

double floor_threshold() { return 100.0 * tolerances().error_floor; }

}  // namespace

std::vector<double> error_sequence(const IterationTrace& trace, const Basis& reference) {
  if (!trace.initial) {
    throw Error(ErrorCode::InvalidArgument, "error_sequence: trace has no initial basis");
  }
  std::vector<double> errors;
  errors.reserve(trace.steps.size() + 1);
  errors.push_back(subspace_distance(*trace.initial, reference));
  for (const IterationStep& step : trace.steps) {
    errors.push_back(subspace_distance(step.basis, reference));
  }
  return errors;
}

RateEstimate estimate_rate(std::span<const double> errors, std::size_t k_lo, std::size_t k_hi) {
  if (k_lo >= k_hi || k_hi >= errors.size()) {
    throw Error(ErrorCode::InvalidArgument, "estimate_rate: need k_lo < k_hi < errors.size()");
  }
  for (std::size_t k = k_lo; k <= k_hi; ++k) {
    if (!(errors[k] > floor_threshold())) {
      throw Error(ErrorCode::WindowAtFloor,
                  "error at k=" + std::to_string(k) + " is at the numerical floor; shrink the window");
    }
  }
  RateEstimate out{0.0, {}};
  double log_sum = 0.0;
  for (std::size_t k = k_lo; k < k_hi; ++k) {
    const double ratio = errors[k + 1] / errors[k];
    out.per_step_ratios.push_back(ratio);
    log_sum += std::log(ratio);
  }
  out.ratio = std::exp(log_sum / static_cast<double>(k_hi - k_lo));
  return out;
}

std::size_t clip_window(std::span<const double> errors, std::size_t k_lo, std::size_t k_hi) {
  std::size_t hi = k_lo;
  for (std::size_t k = k_lo; k <= k_hi && k < errors.size(); ++k) {
    if (!(errors[k] > floor_threshold())) break;
    hi = k;
  }
  return hi;
}

double predicted_rate(const Spectrum& singular_values, std::size_t d) {
  if (d == 0 || d >= singular_values.size()) {
    throw Error(ErrorCode::InvalidArgument, "predicted_rate: need 1 <= d < p");
  }
  const double hi = singular_values[d - 1];
  const double lo = singular_values[d];
  if (!(hi > 0.0)) throw Error(ErrorCode::InvalidArgument, "predicted_rate: s_d is zero");
  return (lo / hi) * (lo / hi);
}

}  // namespace ls2pc
