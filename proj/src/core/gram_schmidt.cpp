#include <string>

#include "ls2pc/dense.hpp"
#include "ls2pc/error.hpp"
#include "ls2pc/kernels.hpp"
#include "ls2pc/tolerances.hpp"

namespace ls2pc {

Basis gram_schmidt(const Matrix& m) {
  const std::size_t d = m.cols();
  if (d == 0 || d > m.rows()) {
    throw Error(ErrorCode::RankDeficient, "gram_schmidt: need 1 <= columns <= rows");
  }
  const double threshold = tolerances().rank_pivot * frobenius_norm(m);
  Matrix q = m;
  for (std::size_t j = 0; j < d; ++j) {
    auto v = q.col(j);
    // Two MGS passes: the second restores orthogonality lost to cancellation.
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t i = 0; i < j; ++i) {
        const double r = kernels::dot(q.col(i), v);
        kernels::axpy(-r, q.col(i), v);
      }
    }
    const double pivot = norm2(v);
    if (!(pivot > threshold)) {
      throw Error(ErrorCode::RankDeficient,
                  "column " + std::to_string(j) + " is numerically dependent on the previous ones");
    }
    kernels::scale(1.0 / pivot, v);
  }
  return Basis(std::move(q));
}

}  // namespace ls2pc
