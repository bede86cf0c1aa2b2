#include "gusvd/linalg.hpp"

#include <string>

#include "gusvd/errors.hpp"

namespace gusvd {

RowEchelon rref(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Elem> a(m.entries().begin(), m.entries().end());
  auto at = [&](std::size_t i, std::size_t j) -> Elem& { return a[i * cols + j]; };
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && at(piv, c).code == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
    }
    const Elem s = f.inv(at(r, c));
    for (std::size_t j = c; j < cols; ++j) at(r, j) = f.mul(s, at(r, j));
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const Elem k = at(i, c);
      if (k.code == 0) continue;
      for (std::size_t j = c; j < cols; ++j) at(i, j) = f.sub(at(i, j), f.mul(k, at(r, j)));
    }
    pivots.push_back(c);
    ++r;
  }
  return {Matrix(m.field_ptr(), rows, cols, std::move(a)), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  const Field& f = m.field();
  auto [red, pivots] = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    if (!is_pivot[j]) free.push_back(j);
  }
  std::vector<Elem> d(m.cols() * free.size(), Field::zero());
  for (std::size_t k = 0; k < free.size(); ++k) {
    d[free[k] * free.size() + k] = Field::one();
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      d[pivots[r] * free.size() + k] = f.neg(red(r, free[k]));
    }
  }
  return Matrix(m.field_ptr(), m.cols(), free.size(), std::move(d));
}

Matrix image_basis(const Matrix& m) { return select_columns(m, rref(m).pivots); }

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw ValidationError("solve: row counts differ");
  auto [red, pivots] = rref(hstack(a, b));
  for (auto c : pivots) {
    if (c >= a.cols()) return std::nullopt;
  }
  std::vector<Elem> x(a.cols() * b.cols(), Field::zero());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    for (std::size_t j = 0; j < b.cols(); ++j) x[pivots[r] * b.cols() + j] = red(r, a.cols() + j);
  }
  return Matrix(a.field_ptr(), a.cols(), b.cols(), std::move(x));
}

Matrix inverse(const Matrix& m) {
  if (!m.square()) throw ValidationError("inverse of a non-square matrix");
  if (rank(m) != m.rows()) throw DomainError("inverse of a singular matrix");
  return *solve(m, Matrix::identity(m.field_ptr(), m.rows()));
}

bool invertible(const Matrix& m) { return m.square() && rank(m) == m.rows(); }

std::vector<std::size_t> matrix_power_ranks(const Matrix& m, std::size_t upto) {
  if (!m.square()) throw ValidationError("matrix_power_ranks needs a square matrix");
  std::vector<std::size_t> out;
  Matrix p = Matrix::identity(m.field_ptr(), m.rows());
  for (std::size_t k = 0; k <= upto; ++k) {
    out.push_back(rank(p));
    if (k < upto) p = p * m;
  }
  return out;
}

bool is_nilpotent(const Matrix& n) {
  if (!n.square()) return false;
  return power(n, n.rows()).is_zero();
}

Partition nilpotent_jordan_type(const Matrix& n) {
  if (!n.square()) throw PreconditionError("nilpotent_jordan_type needs a square matrix");
  const std::size_t dim = n.rows();
  auto r = matrix_power_ranks(n, dim + 1);
  if (r[dim] != 0) {
    std::size_t k = 0;
    while (r[k] != r[k + 1]) ++k;
    throw PreconditionError("matrix is not nilpotent: rank of power " + std::to_string(k) +
                            " is stationary at " + std::to_string(r[k]));
  }
  std::vector<int> parts;
  for (std::size_t s = dim; s >= 1; --s) {
    const long long blocks = static_cast<long long>(r[s - 1]) - 2 * static_cast<long long>(r[s]) +
                             static_cast<long long>(r[s + 1]);
    for (long long b = 0; b < blocks; ++b) parts.push_back(static_cast<int>(s));
  }
  return Partition(std::move(parts));
}

std::vector<Poly> invariant_factors(const Matrix& m) {
  if (!m.square()) throw ValidationError("invariant_factors needs a square matrix");
  const FieldPtr& fp = m.field_ptr();
  const Field& f = *fp;
  const std::size_t n = m.rows();
  std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = Poly(fp, {f.neg(m(i, j))});
      if (i == j) a[i][j] = a[i][j] + poly_x(fp);
    }
  }
  auto row_sub = [&](std::size_t dst, std::size_t src, const Poly& k) {
    for (std::size_t j = 0; j < n; ++j) a[dst][j] = a[dst][j] - k * a[src][j];
  };
  auto col_sub = [&](std::size_t dst, std::size_t src, const Poly& k) {
    for (std::size_t i = 0; i < n; ++i) a[i][dst] = a[i][dst] - k * a[i][src];
  };

  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = k; i < n; ++i) {
        for (std::size_t j = k; j < n; ++j) {
          if (a[i][j].is_zero()) continue;
          if (bi == n || a[i][j].degree() < a[bi][bj].degree()) {
            bi = i;
            bj = j;
          }
        }
      }
      if (bi == n) throw InvariantViolation("characteristic matrix lost rank during Smith reduction");
      std::swap(a[k], a[bi]);
      for (std::size_t i = 0; i < n; ++i) std::swap(a[i][k], a[i][bj]);

      bool clean = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (a[i][k].is_zero()) continue;
        auto [q, r] = divmod(a[i][k], a[k][k]);
        row_sub(i, k, q);
        if (!r.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a[k][j].is_zero()) continue;
        auto [q, r] = divmod(a[k][j], a[k][k]);
        col_sub(j, k, q);
        if (!r.is_zero()) clean = false;
      }
      if (!clean) continue;

      std::size_t bad = n;
      for (std::size_t i = k + 1; i < n && bad == n; ++i) {
        for (std::size_t j = k + 1; j < n; ++j) {
          if (!(a[i][j] % a[k][k]).is_zero()) {
            bad = i;
            break;
          }
        }
      }
      if (bad == n) break;
      for (std::size_t j = 0; j < n; ++j) a[k][j] = a[k][j] + a[bad][j];
    }
  }
  std::vector<Poly> out;
  for (std::size_t k = 0; k < n; ++k) {
    Poly d = monic(a[k][k]);
    if (d.degree() >= 1) out.push_back(std::move(d));
  }
  return out;
}

Matrix companion(const Poly& f) {
  if (f.degree() < 1 || !f.is_monic()) throw ValidationError("companion needs a monic polynomial of degree >= 1");
  const auto d = static_cast<std::size_t>(f.degree());
  const Field& fl = *f.field;
  return Matrix::generate(f.field, d, d, [&](std::size_t i, std::size_t j) {
    if (j == d - 1) return fl.neg(f.c[i]);
    return i == j + 1 ? Field::one() : Field::zero();
  });
}

Matrix restrict_to(const Matrix& m, const Matrix& basis) {
  auto x = solve(basis, m * basis);
  if (!x) throw InvariantViolation("restrict_to: subspace is not invariant");
  return *x;
}

}  // namespace gusvd
