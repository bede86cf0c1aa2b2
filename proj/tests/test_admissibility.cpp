#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gusvd/admissibility.hpp"
#include "gusvd/errors.hpp"
#include "gusvd/hermitian.hpp"
#include "gusvd/linalg.hpp"
#include "gusvd/orbit_invariant.hpp"
#include "support.hpp"

using namespace gusvd;
using gusvd::testing::mat;
using gusvd::testing::part;
using gusvd::testing::poly;

TEST_CASE("gamma decomposition") {
  auto g = gamma_decomposition(part({4, 3, 3, 1}), part({4, 3, 2, 1}));
  CHECK(g.gamma == part({4, 3, 1}));
  REQUIRE(g.components.size() == 2);
  CHECK(g.components[0].parts == std::vector<int>{4, 3});
  CHECK_FALSE(g.components[0].contains_one);
  CHECK(g.components[1].parts == std::vector<int>{1});
  CHECK(g.components[1].contains_one);
  CHECK(gamma_decomposition(part({}), part({})).components.empty());
}

TEST_CASE("Flanders condition") {
  CHECK(flanders_admissible(part({2}), part({1})));
  CHECK_FALSE(flanders_admissible(part({3}), part({1})));
  CHECK(flanders_admissible(part({2, 1}), part({2, 1})));
  CHECK(flanders_admissible(part({1}), part({})));
  CHECK(flanders_admissible(part({1, 1, 1}), part({1})));
  CHECK_FALSE(flanders_admissible(part({2, 2}), part({})));
}

TEST_CASE("star admissibility") {
  for (int d = 2; d <= 6; ++d) CHECK_FALSE(star_admissible(part({d}), part({d})));
  CHECK(star_admissible(part({2, 2}), part({2, 2})));
  CHECK(star_admissible(part({1}), part({1})));
  CHECK(star_admissible(part({1}), part({2})));
  CHECK(star_admissible(part({2, 1, 1}), part({2, 2, 1})));
  CHECK(star_admissible(part({3, 2}), part({3, 2})));
  CHECK_FALSE(star_admissible(part({3, 1}), part({3, 1})));
  CHECK(star_admissible(part({3, 2, 1}), part({3, 2, 1})));
  CHECK(transpose_admissible(part({2, 2}), part({2, 2})));
}

TEST_CASE("star admissibility is symmetric") {
  for (int a = 0; a <= 5; ++a) {
    for (int b = 0; b <= 5; ++b) {
      for (const auto& al : partitions_of(a)) {
        for (const auto& be : partitions_of(b)) CHECK(star_admissible(al, be) == star_admissible(be, al));
      }
    }
  }
}

TEST_CASE("star witnesses") {
  const auto f4 = make_field(2, 1);
  const Matrix a = star_witness(part({1}), part({2}), f4);
  CHECK(a.rows() == 1);
  CHECK(a.cols() == 2);
  CHECK(jordan_pair(a) == std::pair{part({1}), part({2})});

  for (auto [al, be] : {std::pair{part({2, 2}), part({2, 2})}, {part({2, 1, 1}), part({2, 2, 1})},
                        {part({3, 1}), part({2, 2})}, {part({}), part({1, 1})}}) {
    REQUIRE(star_admissible(al, be));
    const Matrix w = star_witness(al, be, f4);
    CHECK(jordan_pair(w) == std::pair{al, be});
  }
  CHECK_THROWS_AS(star_witness(part({2}), part({2}), f4), DomainError);
  CHECK_THROWS_AS(star_labels(part({3}), part({1})), DomainError);
}

TEST_CASE("star witnesses for every admissible pair up to size 4") {
  const auto f9 = make_field(3, 1);
  int built = 0;
  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      for (const auto& al : partitions_of(m)) {
        for (const auto& be : partitions_of(n)) {
          if (!star_admissible(al, be)) continue;
          const Matrix w = star_witness(al, be, f9);
          CHECK(w.rows() == static_cast<std::size_t>(m));
          CHECK(w.cols() == static_cast<std::size_t>(n));
          CHECK(jordan_pair(w) == std::pair{al, be});
          ++built;
        }
      }
    }
  }
  CHECK(built > 20);
}

TEST_CASE("Flanders witnesses") {
  const auto f4 = make_field(2, 1);
  auto [a, b] = flanders_witness(part({3}), part({3}), f4);
  CHECK(a == Matrix::identity(f4, 3));
  CHECK(nilpotent_jordan_type(a * b) == part({3}));
  CHECK(nilpotent_jordan_type(b * a) == part({3}));

  auto [a2, b2] = flanders_witness(part({2}), part({1}), f4);
  CHECK(nilpotent_jordan_type(a2 * b2) == part({2}));
  CHECK(nilpotent_jordan_type(b2 * a2) == part({1}));

  for (int m = 0; m <= 4; ++m) {
    for (int n = 0; n <= 4; ++n) {
      for (const auto& l : partitions_of(m)) {
        for (const auto& u : partitions_of(n)) {
          if (!flanders_admissible(l, u)) continue;
          auto [x, y] = flanders_witness(l, u, f4);
          CHECK(nilpotent_jordan_type(x * y) == l);
          CHECK(nilpotent_jordan_type(y * x) == u);
        }
      }
    }
  }
  CHECK_THROWS_AS(flanders_witness(part({3}), part({1}), f4), DomainError);
}

TEST_CASE("invertible witnesses") {
  const auto f4 = make_field(2, 1);
  CHECK(conj_transpose(invertible_witness(Matrix::identity(f4, 2))) * invertible_witness(Matrix::identity(f4, 2)) ==
        Matrix::identity(f4, 2));
  const Matrix c = companion(poly(f4, {1, 1, 1}));
  const Matrix t = invertible_witness(c);
  CHECK(invariant_factors(conj_transpose(t) * t) == invariant_factors(c));

  const auto f9 = make_field(3, 1);
  const Matrix d = mat(f9, 2, 2, {1, 0, 0, 2});
  const Matrix t2 = invertible_witness(d);
  CHECK(invariant_factors(conj_transpose(t2) * t2) == invariant_factors(d));

  CHECK_THROWS_AS(invertible_witness(Matrix(f9, 2, 2)), DomainError);
  CHECK_THROWS_AS(invertible_witness(mat(f9, 1, 1, {3})), ValidationError);
}
