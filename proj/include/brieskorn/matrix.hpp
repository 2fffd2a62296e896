#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "brieskorn/rational.hpp"

namespace brieskorn {

/// Dense row-major rational matrix.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  /// Throws StructuralError on ragged input.
  explicit RationalMatrix(const std::vector<std::vector<Rational>>& rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zero(std::size_t n) { return RationalMatrix(n, n); }
  /// Ne_i = e_{i+1}: ones on the first subdiagonal.
  static RationalMatrix shift(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
  friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

  RationalMatrix transpose() const;
  RationalMatrix power(unsigned k) const;
  bool is_zero() const;
  bool is_lower_unitriangular() const;
  bool is_strictly_lower() const;
  /// Rank by exact Gaussian elimination.
  std::size_t rank() const;
  /// Inverse of a unit lower-triangular matrix by forward substitution.
  RationalMatrix unitriangular_inverse() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank of the matrix whose columns are `vectors`.
std::size_t rank_of_columns(const std::vector<std::vector<Rational>>& vectors, std::size_t dim);

}  // namespace brieskorn
