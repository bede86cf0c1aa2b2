#include "gusvd/matrix.hpp"

#include <algorithm>
#include <string>

#include "gusvd/errors.hpp"

namespace gusvd {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw ValidationError("matrices are over different fields");
}

}  // namespace

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, Field::zero()) {}

Matrix::Matrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw ValidationError("matrix entry count " + std::to_string(data_.size()) + " does not match " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  }
  for (auto x : data_) {
    if (x.code >= field_->order()) throw ValidationError("matrix entry outside the field");
  }
}

Matrix Matrix::identity(FieldPtr field, std::size_t n) {
  std::vector<Elem> d(n * n, Field::zero());
  for (std::size_t i = 0; i < n; ++i) d[i * n + i] = Field::one();
  return Matrix(std::move(field), n, n, std::move(d));
}

Matrix Matrix::generate(FieldPtr field, std::size_t rows, std::size_t cols,
                        const std::function<Elem(std::size_t, std::size_t)>& fn) {
  std::vector<Elem> d;
  d.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) d.push_back(fn(i, j));
  }
  return Matrix(std::move(field), rows, cols, std::move(d));
}

Matrix Matrix::from_codes(FieldPtr field, std::size_t rows, std::size_t cols,
                          const std::vector<std::uint32_t>& codes) {
  std::vector<Elem> d;
  d.reserve(codes.size());
  for (auto c : codes) d.push_back(field->from_code(c));
  return Matrix(std::move(field), rows, cols, std::move(d));
}

std::vector<std::uint32_t> Matrix::codes() const {
  std::vector<std::uint32_t> out;
  out.reserve(data_.size());
  for (auto x : data_) out.push_back(x.code);
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem x) { return x.code == 0; });
}

bool Matrix::over_subfield() const {
  return std::all_of(data_.begin(), data_.end(), [&](Elem x) { return field_->in_subfield(x); });
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field() == b.field() && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("matrix sum: shape mismatch");
  const Field& f = a.field();
  return Matrix::generate(a.field_ptr(), a.rows(), a.cols(),
                          [&](std::size_t i, std::size_t j) { return f.add(a(i, j), b(i, j)); });
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ValidationError("matrix difference: shape mismatch");
  const Field& f = a.field();
  return Matrix::generate(a.field_ptr(), a.rows(), a.cols(),
                          [&](std::size_t i, std::size_t j) { return f.sub(a(i, j), b(i, j)); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.rows()) {
    throw ValidationError("matrix product: inner dimensions " + std::to_string(a.cols()) + " and " +
                          std::to_string(b.rows()) + " differ");
  }
  const Field& f = a.field();
  std::vector<Elem> d(a.rows() * b.cols(), Field::zero());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Elem x = a(i, k);
      if (x.code == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        auto& t = d[i * b.cols() + j];
        t = f.add(t, f.mul(x, b(k, j)));
      }
    }
  }
  return Matrix(a.field_ptr(), a.rows(), b.cols(), std::move(d));
}

Matrix scale(Elem c, const Matrix& a) {
  const Field& f = a.field();
  return Matrix::generate(a.field_ptr(), a.rows(), a.cols(),
                          [&](std::size_t i, std::size_t j) { return f.mul(c, a(i, j)); });
}

Matrix transpose(const Matrix& a) {
  return Matrix::generate(a.field_ptr(), a.cols(), a.rows(), [&](std::size_t i, std::size_t j) { return a(j, i); });
}

Matrix conj(const Matrix& a) {
  const Field& f = a.field();
  return Matrix::generate(a.field_ptr(), a.rows(), a.cols(),
                          [&](std::size_t i, std::size_t j) { return f.conj(a(i, j)); });
}

Matrix power(const Matrix& a, std::size_t k) {
  if (!a.square()) throw ValidationError("matrix power of a non-square matrix");
  Matrix r = Matrix::identity(a.field_ptr(), a.rows());
  Matrix b = a;
  for (; k; k >>= 1) {
    if (k & 1) r = r * b;
    if (k > 1) b = b * b;
  }
  return r;
}

Matrix block_diag(const std::vector<Matrix>& blocks, const FieldPtr& field) {
  std::size_t rows = 0, cols = 0;
  for (const auto& b : blocks) {
    rows += b.rows();
    cols += b.cols();
  }
  std::vector<Elem> d(rows * cols, Field::zero());
  std::size_t r0 = 0, c0 = 0;
  for (const auto& b : blocks) {
    if (!(b.field() == *field)) throw ValidationError("block_diag: block over a different field");
    for (std::size_t i = 0; i < b.rows(); ++i) {
      for (std::size_t j = 0; j < b.cols(); ++j) d[(r0 + i) * cols + c0 + j] = b(i, j);
    }
    r0 += b.rows();
    c0 += b.cols();
  }
  return Matrix(field, rows, cols, std::move(d));
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.rows() != b.rows()) throw ValidationError("hstack: row counts differ");
  return Matrix::generate(a.field_ptr(), a.rows(), a.cols() + b.cols(), [&](std::size_t i, std::size_t j) {
    return j < a.cols() ? a(i, j) : b(i, j - a.cols());
  });
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  if (a.cols() != b.cols()) throw ValidationError("vstack: column counts differ");
  return Matrix::generate(a.field_ptr(), a.rows() + b.rows(), a.cols(), [&](std::size_t i, std::size_t j) {
    return i < a.rows() ? a(i, j) : b(i - a.rows(), j);
  });
}

Matrix select_columns(const Matrix& a, const std::vector<std::size_t>& cols) {
  return Matrix::generate(a.field_ptr(), a.rows(), cols.size(),
                          [&](std::size_t i, std::size_t j) { return a(i, cols[j]); });
}

Matrix column(const Matrix& a, std::size_t j) { return select_columns(a, {j}); }

Matrix submatrix(const Matrix& a, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  if (r0 + rows > a.rows() || c0 + cols > a.cols()) throw ValidationError("submatrix out of range");
  return Matrix::generate(a.field_ptr(), rows, cols,
                          [&](std::size_t i, std::size_t j) { return a(r0 + i, c0 + j); });
}

}  // namespace gusvd
