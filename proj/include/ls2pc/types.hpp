#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ls2pc/matrix.hpp"

namespace ls2pc {

/// The p x N sample matrix; column i is the sample r_i. Entries are finite.
class DataMatrix {
 public:
  explicit DataMatrix(Matrix samples);

  std::size_t dim() const noexcept { return m_.rows(); }
  std::size_t samples() const noexcept { return m_.cols(); }
  const Matrix& matrix() const noexcept { return m_; }
  std::span<const double> sample(std::size_t i) const noexcept { return m_.col(i); }

 private:
  Matrix m_;
};

/// p x d matrix with orthonormal columns, 1 <= d <= p.
class Basis {
 public:
  /// Throws InvalidArgument if the columns are not orthonormal to
  /// tolerances().orthonormality * d.
  explicit Basis(Matrix columns);

  /// Standard basis vectors e_{indices[0]}, e_{indices[1]}, ... of R^p.
  static Basis coordinate(std::size_t p, std::initializer_list<std::size_t> indices);

  std::size_t ambient_dim() const noexcept { return m_.rows(); }
  std::size_t dim() const noexcept { return m_.cols(); }
  const Matrix& matrix() const noexcept { return m_; }
  std::span<const double> column(std::size_t j) const noexcept { return m_.col(j); }

  /// Same subspace, columns mixed by a d x d orthogonal matrix.
  Basis rebased(const Matrix& orthogonal) const;
  Basis leading(std::size_t count) const;

 private:
  Matrix m_;
};

/// Nonincreasing, nonnegative sequence of singular values or eigenvalues.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> values);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  const std::vector<double>& values() const noexcept { return values_; }

 private:
  std::vector<double> values_;
};

/// Square matrix with ||S - S^T||_F <= tolerances().symmetry * ||S||_F.
class SymmetricMatrix {
 public:
  explicit SymmetricMatrix(Matrix entries);

  std::size_t dim() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

 private:
  Matrix m_;
};

/// ||U^T U - I||_F.
double orthonormality_defect(const Matrix& u);

}  // namespace ls2pc
