#include "ls2pc/types.hpp"

#include <cmath>
#include <string>

#include "ls2pc/error.hpp"
#include "ls2pc/tolerances.hpp"

namespace ls2pc {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotUnit: return "NotUnit";
    case ErrorCode::RankDeficient: return "RankDeficient";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::ConditionViolated: return "ConditionViolated";
    case ErrorCode::WindowAtFloor: return "WindowAtFloor";
  }
  return "Unknown";
}

DataMatrix::DataMatrix(Matrix samples) : m_(std::move(samples)) {
  if (m_.rows() == 0 || m_.cols() == 0) {
    throw Error(ErrorCode::InvalidArgument, "data matrix needs p >= 1 and N >= 1");
  }
  if (!all_finite(m_)) throw Error(ErrorCode::InvalidArgument, "data matrix has non-finite entries");
}

double orthonormality_defect(const Matrix& u) {
  Matrix g = matmul_tn(u, u);
  for (std::size_t i = 0; i < g.rows(); ++i) g(i, i) -= 1.0;
  return frobenius_norm(g);
}

Basis::Basis(Matrix columns) : m_(std::move(columns)) {
  const std::size_t d = m_.cols();
  if (d == 0 || d > m_.rows()) {
    throw Error(ErrorCode::InvalidArgument,
                "basis needs 1 <= d <= p, got d=" + std::to_string(d) +
                    " p=" + std::to_string(m_.rows()));
  }
  const double defect = orthonormality_defect(m_);
  if (!(defect <= tolerances().orthonormality * static_cast<double>(d))) {
    throw Error(ErrorCode::InvalidArgument,
                "columns are not orthonormal (||U^T U - I||_F = " + std::to_string(defect) + ")");
  }
}

Basis Basis::coordinate(std::size_t p, std::initializer_list<std::size_t> indices) {
  Matrix m(p, indices.size());
  std::size_t j = 0;
  for (std::size_t idx : indices) {
    if (idx >= p) throw Error(ErrorCode::InvalidArgument, "coordinate index out of range");
    m(idx, j++) = 1.0;
  }
  return Basis(std::move(m));
}

Basis Basis::rebased(const Matrix& orthogonal) const { return Basis(matmul(m_, orthogonal)); }

Basis Basis::leading(std::size_t count) const { return Basis(m_.left_cols(count)); }

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!(values_[i] >= 0.0) || !std::isfinite(values_[i])) {
      throw Error(ErrorCode::InvalidArgument, "spectrum entries must be finite and nonnegative");
    }
    if (i + 1 < values_.size() && values_[i] < values_[i + 1]) {
      throw Error(ErrorCode::InvalidArgument, "spectrum must be nonincreasing");
    }
  }
}

SymmetricMatrix::SymmetricMatrix(Matrix entries) : m_(std::move(entries)) {
  if (m_.rows() != m_.cols()) throw Error(ErrorCode::DimensionMismatch, "symmetric matrix must be square");
  if (!all_finite(m_)) throw Error(ErrorCode::InvalidArgument, "non-finite entries");
  const double asym = frobenius_norm(m_ - transpose(m_));
  if (asym > tolerances().symmetry * frobenius_norm(m_)) {
    throw Error(ErrorCode::InvalidArgument, "matrix is not symmetric");
  }
}

}  // namespace ls2pc
