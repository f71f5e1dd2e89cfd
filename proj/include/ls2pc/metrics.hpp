#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ls2pc/iterations.hpp"

namespace ls2pc {

/// e_k = sin theta_max(U_k, reference) for k = 0..iterations, where e_0 uses
/// the trace's initial basis. Requires a trace recorded with its initial basis.
std::vector<double> error_sequence(const IterationTrace& trace, const Basis& reference);

struct RateEstimate {
  /// Geometric mean of e_{k+1} / e_k over the window.
  double ratio;
  std::vector<double> per_step_ratios;
};

/// Fits the contraction factor over errors[k_lo..k_hi]. Throws WindowAtFloor
/// when any error in the window is <= 100 * tolerances().error_floor, and
/// InvalidArgument for an empty or out-of-range window.
RateEstimate estimate_rate(std::span<const double> errors, std::size_t k_lo, std::size_t k_hi);

/// Largest k_hi' <= k_hi such that errors[k_lo..k_hi'] all sit above the
/// noise floor; k_lo when even errors[k_lo] is at the floor.
std::size_t clip_window(std::span<const double> errors, std::size_t k_lo, std::size_t k_hi);

/// (s[d] / s[d-1])^2, the asymptotic contraction of Subspace Iterations on
/// R R^T for the top-d space.
double predicted_rate(const Spectrum& singular_values, std::size_t d);

}  // namespace ls2pc
