#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gusvd/field.hpp"

namespace gusvd {

/// Dense matrix over GF(q^2), row-major, immutable once built.
///
/// Zero-dimensional shapes (0 x n, m x 0) are ordinary values: they are the
/// empty maps needed for the R[0]/R'[0] pencil blocks.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries);

  static Matrix identity(FieldPtr field, std::size_t n);
  static Matrix generate(FieldPtr field, std::size_t rows, std::size_t cols,
                         const std::function<Elem(std::size_t, std::size_t)>& fn);
  static Matrix from_codes(FieldPtr field, std::size_t rows, std::size_t cols,
                           const std::vector<std::uint32_t>& codes);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }
  const FieldPtr& field_ptr() const { return field_; }
  const Field& field() const { return *field_; }

  Elem operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Elem> entries() const { return data_; }
  std::vector<std::uint32_t> codes() const;

  bool is_zero() const;
  bool over_subfield() const;

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Elem> data_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix scale(Elem c, const Matrix& a);
Matrix transpose(const Matrix& a);
// Entrywise Frobenius x -> x^q.
Matrix conj(const Matrix& a);
Matrix power(const Matrix& a, std::size_t k);

Matrix block_diag(const std::vector<Matrix>& blocks, const FieldPtr& field);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& cols);
Matrix column(const Matrix& a, std::size_t j);
Matrix submatrix(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols);

}  // namespace gusvd
