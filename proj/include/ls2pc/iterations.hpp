#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ls2pc/types.hpp"

namespace ls2pc {

enum class StopMetric {
  /// ||U U^T - U_prev U_prev^T||_F / sqrt(2); invariant to the choice of basis.
  ProjectorDistance,
  /// ||U - U_prev||_F, as written in the textbook loops.
  RawBasisDifference,
};

/// Known answer used only for diagnostics: per-step errors, the rank
/// condition at entry, and the repeated-singular-value flag.
struct OracleReference {
  Basis basis;
  bool degenerate_gap = false;
};

struct IterationSettings {
  double eps = 1e-10;
  std::size_t max_iter = 1000;
  StopMetric stop_metric = StopMetric::ProjectorDistance;
  bool record_trace = true;
  std::optional<OracleReference> oracle;

  /// Throws InvalidArgument unless eps > 0 and max_iter >= 1.
  void validate() const;
};

struct IterationStep {
  std::size_t k;
  Basis basis;
  double step_change;
  std::optional<double> oracle_error;
};

struct IterationTrace {
  /// U_0; present whenever the trace was recorded.
  std::optional<Basis> initial;
  std::vector<IterationStep> steps;
};

enum class Termination { Converged, MaxIter };

const char* to_string(Termination t);
const char* to_string(StopMetric m);

struct ConditionReport {
  bool satisfied;
  /// Smallest singular value of U0^T Ud.
  double smallest_cosine;
};

struct SubspaceResult {
  Basis basis;
  std::size_t iterations;
  Termination terminated;
  IterationTrace trace;
  bool degenerate_gap = false;
  /// Rank condition of the start against the oracle, when one was given.
  std::optional<ConditionReport> condition;
  std::vector<std::string> warnings;
};

/// rank(U0^T Ud) = d, judged by the smallest singular value exceeding
/// tolerances().condition_rank.
ConditionReport check_condition(const Basis& u0, const Basis& ud);

/// Power iteration on S from unit vector u0 (d = 1).
SubspaceResult power_iteration(const SymmetricMatrix& s, std::span<const double> u0,
                               const IterationSettings& settings);

/// One Subspace Iterations step: gram_schmidt(S V).
Basis subspace_step(const SymmetricMatrix& s, const Basis& v);

SubspaceResult subspace_iteration(const SymmetricMatrix& s, const Basis& u0,
                                  const IterationSettings& settings);

/// argmin_A ||R - A X||_F with X = U^T R, from A (X X^T) = R X^T. Throws
/// ConditionViolated when X X^T is not positive definite.
Matrix least_squares_step(const DataMatrix& r, const Basis& u);

/// One LS2PC step: gram_schmidt(least_squares_step(R, U)).
Basis ls2pc_step(const DataMatrix& r, const Basis& u);

/// Iterative least squares. N > p is what the equivalence with Subspace
/// Iterations assumes; smaller N is accepted as long as X X^T stays
/// invertible.
SubspaceResult ls2pc(const DataMatrix& r, const Basis& u0, const IterationSettings& settings);

/// Runs LS2PC on R and Subspace Iterations on R R^T from the same U0 for
/// k_max steps each, returning sin theta_max between the k-th iterates for
/// k = 0..k_max. Throws ConditionViolated if U0 fails the rank condition
/// against the top-d principal space of R.
std::vector<double> run_paired(const DataMatrix& r, const Basis& u0, std::size_t k_max);

}  // namespace ls2pc
