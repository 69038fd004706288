#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace quivkit {

using Rational = mpq_class;
using Integer = mpz_class;

// Dense row-major matrix over the rationals. Shapes may be zero in either
// direction; a 0 x n matrix is a valid linear map from an n-dimensional space.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  Matrix operator*(const Matrix& rhs) const;
  bool operator==(const Matrix& rhs) const;

  bool is_zero() const;
  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

// Rank by fraction-free (Bareiss) elimination after clearing denominators
// row by row.
std::size_t rank(const Matrix& m);

// Basis of the right kernel {v : m v = 0}. Each basis vector is scaled to a
// primitive integer vector whose first nonzero entry is positive. Vectors are
// returned as the columns of an cols() x k matrix.
Matrix kernel(const Matrix& m);

// Block-diagonal sum.
Matrix direct_sum(const Matrix& a, const Matrix& b);

}  // namespace quivkit
