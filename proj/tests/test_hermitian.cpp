#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gusvd/errors.hpp"
#include "gusvd/hermitian.hpp"
#include "gusvd/linalg.hpp"
#include "support.hpp"

using namespace gusvd;
using gusvd::testing::mat;
using gusvd::testing::part;
using gusvd::testing::poly;

namespace {

Matrix random_hermitian(const FieldPtr& f, std::size_t n, std::mt19937_64& rng) {
  const Matrix x = random_matrix(f, n, n, rng);
  return x + conj_transpose(x);
}

}  // namespace

TEST_CASE("conjugate transpose") {
  const auto f4 = make_field(2, 1);
  CHECK(conj_transpose(mat(f4, 1, 1, {2})) == mat(f4, 1, 1, {3}));
  CHECK(conj_transpose(Matrix::identity(f4, 3)) == Matrix::identity(f4, 3));
  CHECK(conj_transpose(mat(f4, 2, 2, {0, 1, 0, 0})) == mat(f4, 2, 2, {0, 0, 1, 0}));
  CHECK(conj_transpose(Matrix(f4, 2, 0)).rows() == 0);
}

TEST_CASE("adjoint") {
  const auto f9 = make_field(3, 1);
  const auto id = HermitianForm::standard(f9, 3);
  std::mt19937_64 rng(1);
  const Matrix a = random_matrix(f9, 3, 3, rng);
  CHECK(adjoint(a, id, id) == conj_transpose(a));

  // 1x1 with gram_w = (c): adjoint of (a) is conj(a) c.
  const HermitianForm gv(mat(f9, 1, 1, {1}));
  const HermitianForm gw(mat(f9, 1, 1, {2}));
  CHECK(adjoint(mat(f9, 1, 1, {3}), gv, gw) == mat(f9, 1, 1, {f9->mul(f9->conj(Elem{3}), Elem{2}).code}));

  // (Av)* Gw w = v* Gv (A# w) for random vectors and nonstandard forms.
  for (int i = 0; i < 20; ++i) {
    const Matrix pv = random_invertible(f9, 2, rng), pw = random_invertible(f9, 3, rng);
    const HermitianForm fv(conj_transpose(pv) * pv), fw(conj_transpose(pw) * pw);
    const Matrix b = random_matrix(f9, 3, 2, rng);
    const Matrix bs = adjoint(b, fv, fw);
    const Matrix v = random_matrix(f9, 2, 1, rng), w = random_matrix(f9, 3, 1, rng);
    CHECK(conj_transpose(b * v) * fw.gram() * w == conj_transpose(v) * fv.gram() * (bs * w));
  }
}

TEST_CASE("forms reject non-Hermitian grams") {
  const auto f4 = make_field(2, 1);
  CHECK_THROWS_AS(HermitianForm(mat(f4, 2, 2, {1, 0, 0, 2})), ValidationError);
  CHECK_THROWS_AS(HermitianForm(Matrix(f4, 2, 2)), PreconditionError);
  CHECK(HermitianForm(Matrix(f4, 2, 2), true).dimension() == 2);
  CHECK_THROWS_AS(gu_conjugacy_test(mat(f4, 2, 2, {1, 0, 0, 2}), Matrix::identity(f4, 2)), ValidationError);
}

TEST_CASE("orthonormalize examples") {
  const auto f4 = make_field(2, 1);
  CHECK(orthonormalize(HermitianForm::standard(f4, 3)) == Matrix::identity(f4, 3));
  const auto f9 = make_field(3, 1);
  const Matrix x = orthonormalize(HermitianForm(mat(f9, 1, 1, {2})));
  CHECK(conj_transpose(x) * mat(f9, 1, 1, {2}) * x == Matrix::identity(f9, 1));
  // Hyperbolic plane: every standard basis vector is isotropic.
  const Matrix h = mat(f4, 2, 2, {0, 1, 1, 0});
  const Matrix y = orthonormalize(HermitianForm(h));
  CHECK(conj_transpose(y) * h * y == Matrix::identity(f4, 2));
}

TEST_CASE("factor_gram examples") {
  const auto f4 = make_field(2, 1);
  CHECK(factor_gram(HermitianForm::standard(f4, 2)) == Matrix::identity(f4, 2));
  const Matrix x = factor_gram(HermitianForm(mat(f4, 2, 2, {1, 0, 0, 0}), true));
  CHECK(x == mat(f4, 1, 2, {1, 0}));
}

TEST_CASE("orthonormalize and factor_gram on random forms") {
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const auto f = make_field(p, e);
    std::mt19937_64 rng(p * 10 + e);
    for (std::size_t n = 1; n <= 5; ++n) {
      for (int i = 0; i < 8; ++i) {
        const Matrix g = random_hermitian(f, n, rng);
        const Matrix x = factor_gram(HermitianForm(g, true));
        CHECK(x.rows() == rank(g));
        CHECK(conj_transpose(x) * x == g);
        if (invertible(g)) {
          const Matrix o = orthonormalize(HermitianForm(g));
          CHECK(conj_transpose(o) * g * o == Matrix::identity(f, n));
        }
      }
    }
  }
}

TEST_CASE("hermitian_similar_to examples") {
  const auto f9 = make_field(3, 1);
  const Matrix b = mat(f9, 2, 2, {1, 0, 0, 2});
  const Matrix h = hermitian_similar_to(b);
  CHECK(is_hermitian(h));
  CHECK(invariant_factors(h) == invariant_factors(b));

  const auto f4 = make_field(2, 1);
  const Matrix n2 = hermitian_similar_to(mat(f4, 2, 2, {0, 1, 0, 0}));
  CHECK(is_hermitian(n2));
  CHECK(rank(n2) == 1);
  CHECK(nilpotent_jordan_type(n2) == part({2}));
  CHECK(hermitian_similar_to(Matrix::identity(f4, 3)) == Matrix::identity(f4, 3));
  CHECK_THROWS_AS(hermitian_similar_to(mat(f4, 1, 1, {2})), ValidationError);
}

TEST_CASE("hermitian_similar_to on random matrices over GF(q)") {
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto f = make_field(p, e);
    const auto sub = f->subfield_elements();
    std::mt19937_64 rng(p + e);
    std::uniform_int_distribution<std::size_t> d(0, sub.size() - 1);
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int i = 0; i < 5; ++i) {
        const Matrix b = Matrix::generate(f, n, n, [&](std::size_t, std::size_t) { return sub[d(rng)]; });
        const Matrix h = hermitian_similar_to(b, i);
        CHECK(is_hermitian(h));
        CHECK(invariant_factors(h) == invariant_factors(b));
      }
    }
  }
}

TEST_CASE("GU conjugacy of Hermitian matrices") {
  const auto f4 = make_field(2, 1);
  const Matrix h = hermitian_similar_to(mat(f4, 2, 2, {0, 1, 0, 0}), 1);
  CHECK(gu_conjugacy_test(h, h));
  const Matrix h2 = hermitian_similar_to(mat(f4, 2, 2, {0, 1, 0, 0}), 99);
  CHECK(gu_conjugacy_test(h, h2));
  CHECK_FALSE(gu_conjugacy_test(h, Matrix(f4, 2, 2)));
}

TEST_CASE("random unitary matrices are unitary") {
  const auto f = make_field(3, 1);
  std::mt19937_64 rng(4);
  for (std::size_t n = 0; n <= 4; ++n) {
    const Matrix u = random_unitary(f, n, rng);
    CHECK(conj_transpose(u) * u == Matrix::identity(f, n));
  }
}
