#include "brieskorn/matrix.hpp"

#include <utility>

#include "brieskorn/errors.hpp"

namespace brieskorn {

RationalMatrix::RationalMatrix(const std::vector<std::vector<Rational>>& rows)
    : rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw StructuralError("ragged matrix rows");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::shift(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
  return m;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols_ != b.rows_) throw StructuralError("matrix product shape mismatch");
  RationalMatrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix sum shape mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
  return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw StructuralError("matrix difference shape mismatch");
  RationalMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
  return out;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

RationalMatrix RationalMatrix::power(unsigned k) const {
  if (!square()) throw StructuralError("power of a non-square matrix");
  RationalMatrix out = identity(rows_);
  for (unsigned i = 0; i < k; ++i) out = out * *this;
  return out;
}

bool RationalMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool RationalMatrix::is_lower_unitriangular() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool RationalMatrix::is_strictly_lower() const {
  if (!square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (sgn((*this)(i, j)) != 0) return false;
  return true;
}

std::size_t RationalMatrix::rank() const {
  RationalMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t pivot = rank;
    while (pivot < rows_ && sgn(m(pivot, c)) == 0) ++pivot;
    if (pivot == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m(pivot, j), m(rank, j));
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(rank, c);
      for (std::size_t j = c; j < cols_; ++j) m(i, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

RationalMatrix RationalMatrix::unitriangular_inverse() const {
  if (!is_lower_unitriangular()) throw DomainError("matrix is not unit lower-triangular");
  const std::size_t n = rows_;
  RationalMatrix inv = identity(n);
  // Solve A X = I column by column; X is again unit lower-triangular.
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t i = c + 1; i < n; ++i) {
      Rational acc = 0;
      for (std::size_t k = c; k < i; ++k) acc += (*this)(i, k) * inv(k, c);
      inv(i, c) = -acc;
    }
  return inv;
}

std::string RationalMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? "; " : "";
    for (std::size_t j = 0; j < cols_; ++j) out += (j ? " " : "") + brieskorn::to_string((*this)(i, j));
  }
  return out + "]";
}

std::size_t rank_of_columns(const std::vector<std::vector<Rational>>& vectors, std::size_t dim) {
  RationalMatrix m(dim, vectors.size());
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != dim) throw StructuralError("vector dimension mismatch");
    for (std::size_t i = 0; i < dim; ++i) m(i, j) = vectors[j][i];
  }
  return m.rank();
}

}  // namespace brieskorn
