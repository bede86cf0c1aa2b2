#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gusvd/errors.hpp"
#include "gusvd/hermitian.hpp"
#include "gusvd/linalg.hpp"
#include "gusvd/orbit_invariant.hpp"
#include "support.hpp"

using namespace gusvd;
using gusvd::testing::mat;
using gusvd::testing::part;
using gusvd::testing::poly;

TEST_CASE("Fitting split") {
  const auto f4 = make_field(2, 1);
  auto inv = fitting_split(Matrix::identity(f4, 2));
  CHECK(inv.v0.cols() == 2);
  CHECK(inv.v1.cols() == 0);
  auto nil = fitting_split(mat(f4, 2, 2, {1, 2, 0, 0}));
  CHECK(nil.v0.cols() == 0);
  CHECK(nil.v1.cols() == 2);
  // [[1,w],[0,0]] has A*A square-zero; next to a unit it leaves one invertible direction.
  auto mixed = fitting_split(mat(f4, 3, 3, {1, 2, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(mixed.v0.cols() == 1);
  CHECK(mixed.w0.cols() == 1);
  CHECK(mixed.v1.cols() == 2);
  CHECK(mixed.w1.cols() == 2);
  // A shift is not nilpotent for the pencil: A*A is a rank-one idempotent.
  auto shift = fitting_split(mat(f4, 3, 3, {0, 1, 0, 0, 0, 0, 0, 0, 1}));
  CHECK(shift.v0.cols() == 2);
  CHECK(shift.v1.cols() == 1);
}

TEST_CASE("orbit invariant examples") {
  const auto f4 = make_field(2, 1);
  auto z = orbit_invariant(Matrix(f4, 2, 2));
  CHECK(z.inv_factors.empty());
  CHECK(z.r_rows.empty());
  CHECK(z.rp_rows == part({1, 1}));
  CHECK(z.j_pairs.empty());
  CHECK(z.column_slack() == 2);

  auto id = orbit_invariant(Matrix::identity(f4, 2));
  const Poly xm1 = poly(f4, {1, 1});
  CHECK(id.inv_factors == std::vector<Poly>{xm1, xm1});
  CHECK(id.rp_rows.empty());

  // AA* = 0 but A*A is a nonzero square-zero matrix: R(1) + R'(0).
  auto sq = orbit_invariant(mat(f4, 2, 2, {1, 2, 0, 0}));
  CHECK(sq.inv_factors.empty());
  CHECK(sq.r_rows == part({1}));
  CHECK(sq.rp_rows == part({1}));
  CHECK(sq.j_pairs.empty());

  auto j = orbit_invariant(j_pair_block(f4, 1));
  CHECK(j.inv_factors.empty());
  CHECK(j.r_rows.empty());
  CHECK(j.rp_rows.empty());
  CHECK(j.j_pairs == part({1}));

  auto r = orbit_invariant(mat(f4, 1, 2, {1, 2}));
  CHECK(r.r_rows == part({1}));
  CHECK(r.column_slack() == 0);
}

TEST_CASE("same_orbit") {
  const auto f4 = make_field(2, 1);
  const Matrix a = mat(f4, 2, 2, {1, 2, 0, 0});
  CHECK_FALSE(same_orbit(a, Matrix(f4, 2, 2)));
  CHECK(same_orbit(a, a));
  std::mt19937_64 rng(8);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto f = make_field(p, e);
    for (int i = 0; i < 15; ++i) {
      const Matrix b = random_matrix(f, 3, 4, rng);
      const Matrix u = random_unitary(f, 3, rng), v = random_unitary(f, 4, rng);
      CHECK(same_orbit(b, u * b * conj_transpose(v)));
    }
  }
}

TEST_CASE("invariants satisfy the row equation and column bound") {
  std::mt19937_64 rng(12);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}}) {
    const auto f = make_field(p, e);
    for (std::size_t m = 0; m <= 4; ++m) {
      for (std::size_t n = 0; n <= 4; ++n) {
        for (int i = 0; i < 4; ++i) {
          const Matrix a = random_matrix(f, m, n, rng);
          const auto inv = orbit_invariant(a);
          CHECK_NOTHROW(inv.validate(*f));
          CHECK(inv.m == m);
          CHECK(inv.n == n);
        }
      }
    }
  }
}

TEST_CASE("realize examples") {
  const auto f4 = make_field(2, 1);
  OrbitInvariant z;
  z.m = z.n = 2;
  z.rp_rows = part({1, 1});
  CHECK(realize(z, f4) == Matrix(f4, 2, 2));

  OrbitInvariant r;
  r.m = 1;
  r.n = 2;
  r.r_rows = part({1});
  const Matrix a = realize(r, f4);
  CHECK(a.rows() == 1);
  CHECK(a.cols() == 2);
  CHECK((a * conj_transpose(a)).is_zero());
  CHECK(nilpotent_jordan_type(conj_transpose(a) * a) == part({2}));

  OrbitInvariant j;
  j.m = j.n = 4;
  j.j_pairs = part({2});
  auto [alpha, beta] = jordan_pair(realize(j, f4));
  CHECK(alpha == part({2, 2}));
  CHECK(beta == part({2, 2}));
}

TEST_CASE("realize rejects malformed invariants") {
  const auto f4 = make_field(2, 1);
  OrbitInvariant bad;
  bad.m = 2;
  bad.n = 2;
  bad.rp_rows = part({1});
  CHECK_THROWS_AS(realize(bad, f4), ValidationError);
  OrbitInvariant wide;
  wide.m = 1;
  wide.n = 1;
  wide.r_rows = part({1});  // R(1) needs two columns
  CHECK_THROWS_AS(realize(wide, f4), ValidationError);
  OrbitInvariant notsub;
  notsub.m = notsub.n = 1;
  notsub.inv_factors = {poly(f4, {2, 1})};  // x + w is not over GF(2)
  CHECK_THROWS_AS(realize(notsub, f4), ValidationError);
}

TEST_CASE("realize is a section of orbit_invariant on random matrices") {
  std::mt19937_64 rng(21);
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}}) {
    const auto f = make_field(p, e);
    for (std::size_t m = 1; m <= 4; ++m) {
      for (std::size_t n = 1; n <= 4; ++n) {
        for (int i = 0; i < 3; ++i) {
          const auto inv = orbit_invariant(random_matrix(f, m, n, rng));
          CHECK(orbit_invariant(realize(inv, f, i)) == inv);
        }
      }
    }
  }
}

TEST_CASE("special blocks") {
  const auto f9 = make_field(3, 1);
  for (std::size_t d = 1; d <= 4; ++d) {
    const Matrix b = r_block(f9, d);
    CHECK(b.rows() == d);
    CHECK(b.cols() == d + 1);
    CHECK(nilpotent_jordan_type(b * conj_transpose(b)) == part({static_cast<int>(d)}));
    CHECK(nilpotent_jordan_type(conj_transpose(b) * b) == part({static_cast<int>(d + 1)}));
    const Matrix jp = j_pair_block(f9, d);
    auto [alpha, beta] = jordan_pair(jp);
    CHECK(alpha == part({static_cast<int>(d), static_cast<int>(d)}));
    CHECK(beta == alpha);
  }
}

TEST_CASE("jordan_pair examples") {
  const auto f4 = make_field(2, 1);
  auto [a0, b0] = jordan_pair(Matrix(f4, 2, 3));
  CHECK(a0 == part({1, 1}));
  CHECK(b0 == part({1, 1, 1}));
  auto [a1, b1] = jordan_pair(mat(f4, 1, 2, {1, 2}));
  CHECK(a1 == part({1}));
  CHECK(b1 == part({2}));
  CHECK_THROWS_AS(jordan_pair(Matrix::identity(f4, 2)), PreconditionError);
}
