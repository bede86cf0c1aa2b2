#include "gusvd/hermitian.hpp"

#include "gusvd/errors.hpp"
#include "gusvd/linalg.hpp"
#include "gusvd/prime_solve.hpp"

namespace gusvd {

Matrix conj_transpose(const Matrix& a) {
  const Field& f = a.field();
  return Matrix::generate(a.field_ptr(), a.cols(), a.rows(),
                          [&](std::size_t i, std::size_t j) { return f.conj(a(j, i)); });
}

bool is_hermitian(const Matrix& a) { return a.square() && conj_transpose(a) == a; }

HermitianForm::HermitianForm(Matrix gram, bool allow_degenerate) : gram_(std::move(gram)) {
  if (!is_hermitian(gram_)) throw ValidationError("Gram matrix is not Hermitian");
  nondegenerate_ = invertible(gram_);
  if (!nondegenerate_ && !allow_degenerate) throw PreconditionError("Hermitian form is degenerate");
}

HermitianForm HermitianForm::standard(const FieldPtr& field, std::size_t n) {
  return HermitianForm(Matrix::identity(field, n));
}

Matrix adjoint(const Matrix& a, const HermitianForm& form_v, const HermitianForm& form_w) {
  if (!form_v.nondegenerate() || !form_w.nondegenerate()) throw PreconditionError("adjoint needs nondegenerate forms");
  if (a.cols() != form_v.dimension() || a.rows() != form_w.dimension()) {
    throw ValidationError("adjoint: matrix shape does not match the forms");
  }
  return inverse(form_v.gram()) * conj_transpose(a) * form_w.gram();
}

Matrix orthonormalize(const HermitianForm& form) {
  if (!form.nondegenerate()) throw PreconditionError("orthonormalize needs a nondegenerate form");
  const Matrix& g = form.gram();
  const FieldPtr& fp = g.field_ptr();
  const Field& f = *fp;
  const std::size_t n = g.rows();

  Matrix u = Matrix::identity(fp, n);
  Matrix x(fp, n, 0);
  while (u.cols() > 0) {
    const std::size_t k = u.cols();
    const Matrix gu = conj_transpose(u) * g * u;
    std::vector<Elem> y(k, Field::zero());
    bool found = false;
    for (std::size_t i = 0; i < k && !found; ++i) {
      if (gu(i, i).code != 0) {
        y[i] = Field::one();
        found = true;
      }
    }
    // every basis vector isotropic: use b_i + l b_j, whose length is trace(l c)
    for (std::size_t i = 0; i < k && !found; ++i) {
      for (std::size_t j = i + 1; j < k && !found; ++j) {
        const Elem c = gu(i, j);
        if (c.code == 0) continue;
        for (std::uint32_t code = 1; code < f.order(); ++code) {
          if (f.trace(f.mul(Elem{code}, c)).code != 0) {
            y[i] = Field::one();
            y[j] = Elem{code};
            found = true;
            break;
          }
        }
      }
    }
    if (!found) throw InvariantViolation("orthonormalize: no anisotropic vector in a nondegenerate subspace");
    const Matrix yv(fp, k, 1, y);
    const Elem len = (conj_transpose(yv) * gu * yv)(0, 0);
    const Matrix w = scale(f.solve_norm(f.inv(len)), u * yv);
    x = hstack(x, w);
    u = u * kernel_basis(conj_transpose(w) * g * u);
  }
  return x;
}

Matrix factor_gram(const HermitianForm& form) {
  const Matrix& g = form.gram();
  const FieldPtr& fp = g.field_ptr();
  const std::size_t n = g.rows();
  const Matrix rad = kernel_basis(g);
  const std::size_t r = n - rad.cols();

  // complement of the radical spanned by standard basis vectors
  std::vector<std::size_t> picked;
  Matrix span = rad;
  const Matrix id = Matrix::identity(fp, n);
  for (std::size_t j = 0; j < n && picked.size() < r; ++j) {
    Matrix trial = hstack(span, column(id, j));
    if (rank(trial) == trial.cols()) {
      span = std::move(trial);
      picked.push_back(j);
    }
  }
  const Matrix u = select_columns(id, picked);
  const Matrix y = orthonormalize(HermitianForm(conj_transpose(u) * g * u));
  const Matrix p = hstack(u * y, rad);
  return submatrix(inverse(p), 0, 0, r, n);
}

Matrix hermitian_similar_to(const Matrix& b, std::uint64_t seed) {
  if (!b.square()) throw ValidationError("hermitian_similar_to needs a square matrix");
  if (!b.over_subfield()) throw ValidationError("hermitian_similar_to needs a matrix over GF(q)");
  const FieldPtr& fp = b.field_ptr();
  const std::size_t n = b.rows();
  if (n == 0) return b;

  const Matrix bt = transpose(b);
  const std::vector<Shape> shapes{{n, n}};
  auto basis = prime_field_kernel(fp, shapes, [&](const MatrixTuple& x) {
    const Matrix& s = x[0];
    return MatrixTuple{s - transpose(s), s - conj(s), s * b - bt * s};
  });
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const Matrix s = random_combination(fp, shapes, basis, rng)[0];
    if (!invertible(s)) continue;
    const Matrix y = factor_gram(HermitianForm(s));
    return y * b * inverse(y);
  }
  throw InvariantViolation("hermitian_similar_to: no invertible symmetric intertwiner found");
}

bool gu_conjugacy_test(const Matrix& h1, const Matrix& h2) {
  if (!is_hermitian(h1) || !is_hermitian(h2)) throw ValidationError("gu_conjugacy_test needs Hermitian matrices");
  if (h1.rows() != h2.rows()) throw ValidationError("gu_conjugacy_test: sizes differ");
  return invariant_factors(h1) == invariant_factors(h2);
}

Matrix random_matrix(const FieldPtr& field, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, field->order() - 1);
  return Matrix::generate(field, rows, cols, [&](std::size_t, std::size_t) { return Elem{dist(rng)}; });
}

Matrix random_invertible(const FieldPtr& field, std::size_t n, std::mt19937_64& rng) {
  for (;;) {
    Matrix m = random_matrix(field, n, n, rng);
    if (invertible(m)) return m;
  }
}

Matrix random_unitary(const FieldPtr& field, std::size_t n, std::mt19937_64& rng) {
  const Matrix p = random_invertible(field, n, rng);
  return p * orthonormalize(HermitianForm(conj_transpose(p) * p));
}

}  // namespace gusvd
