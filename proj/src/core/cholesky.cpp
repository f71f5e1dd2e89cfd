#include <cmath>
#include <string>

#include "ls2pc/dense.hpp"
#include "ls2pc/error.hpp"
#include "ls2pc/tolerances.hpp"

namespace ls2pc {

Matrix cholesky(const Matrix& s) {
  const std::size_t n = s.rows();
  if (n == 0 || s.cols() != n) throw Error(ErrorCode::DimensionMismatch, "cholesky: not square");
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += s(i, i);
  const double min_pivot = tolerances().cholesky_pivot * trace / static_cast<double>(n);
  if (!(trace > 0.0)) throw Error(ErrorCode::NotPositiveDefinite, "trace is not positive");

  Matrix l(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    double diag = s(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l(j, k) * l(j, k);
    if (!(diag > min_pivot)) {
      throw Error(ErrorCode::NotPositiveDefinite,
                  "pivot " + std::to_string(j) + " is " + std::to_string(diag));
    }
    const double ljj = std::sqrt(diag);
    l(j, j) = ljj;
    for (std::size_t i = j + 1; i < n; ++i) {
      double v = s(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l(i, k) * l(j, k);
      l(i, j) = v / ljj;
    }
  }
  return l;
}

Matrix solve_spd(const Matrix& s, const Matrix& b) {
  if (b.rows() != s.rows()) throw Error(ErrorCode::DimensionMismatch, "solve_spd: rhs rows");
  const Matrix l = cholesky(s);
  const std::size_t n = l.rows();
  Matrix w = b;
  for (std::size_t c = 0; c < w.cols(); ++c) {
    auto x = w.col(c);
    // L y = b
    for (std::size_t i = 0; i < n; ++i) {
      double v = x[i];
      for (std::size_t k = 0; k < i; ++k) v -= l(i, k) * x[k];
      x[i] = v / l(i, i);
    }
    // L^T x = y
    for (std::size_t i = n; i-- > 0;) {
      double v = x[i];
      for (std::size_t k = i + 1; k < n; ++k) v -= l(k, i) * x[k];
      x[i] = v / l(i, i);
    }
  }
  return w;
}

}  // namespace ls2pc
