#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "gusvd/counting.hpp"
#include "gusvd/errors.hpp"
#include "gusvd/partition.hpp"

using namespace gusvd;

TEST_CASE("partition counts") {
  CHECK(partition_count(0) == 1);
  CHECK(partition_count(4) == 5);
  CHECK(partition_count(10) == 42);
  CHECK(partition_count(100) == 190569292ULL);
  for (int n = 0; n <= 15; ++n) CHECK(partition_count(n) == partitions_of(n).size());
}

TEST_CASE("conjugacy classes of GL_n(q)") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9}) CHECK(k_gl(1, q) == q - 1);
  CHECK(k_gl(0, 2) == 1);
  CHECK(k_gl(2, 2) == 3);
  CHECK(k_gl(3, 2) == 6);
  CHECK(k_gl(2, 3) == 8);
  // k(GL_2(q)) = q^2 - 1 and k(GL_3(q)) = q^3 - q.
  for (std::uint64_t q : {2, 3, 4, 5, 7}) {
    CHECK(k_gl(2, q) == q * q - 1);
    CHECK(k_gl(3, q) == q * q * q - q);
  }
  CHECK_THROWS_AS(k_gl(2, 6), ValidationError);
}

TEST_CASE("class counts match the generating function") {
  // sum_n k(GL_n(q)) t^n = prod_{r>=1} (1 - t^r) / (1 - q t^r)
  for (std::uint64_t q : {2, 3, 4}) {
    const int top = 8;
    std::vector<long double> series(top + 1, 0);
    series[0] = 1;
    for (int r = 1; r <= top; ++r) {
      std::vector<long double> next(top + 1, 0);
      // multiply by (1 - t^r) * sum_k q^k t^{rk}
      std::vector<long double> geo(top + 1, 0);
      long double qk = 1;
      for (int k = 0; r * k <= top; ++k, qk *= q) geo[r * k] = qk;
      for (int i = 0; i <= top; ++i) {
        for (int j = 0; i + j <= top; ++j) next[i + j] += series[i] * geo[j];
      }
      series.assign(top + 1, 0);
      for (int i = 0; i <= top; ++i) {
        series[i] += next[i];
        if (i + r <= top) series[i + r] -= next[i];
      }
    }
    for (int n = 0; n <= top; ++n) CHECK(static_cast<long double>(k_gl(n, q)) == doctest::Approx(series[n]));
  }
}

TEST_CASE("irreducible counts") {
  CHECK(irreducible_count(1, 2) == 2);
  CHECK(irreducible_count(2, 2) == 1);
  CHECK(irreducible_count(3, 2) == 2);
  CHECK(irreducible_count(4, 2) == 3);
  CHECK(irreducible_count(2, 3) == 3);
}

TEST_CASE("nilpotent orbit counts") {
  CHECK(f_nilpotent(0, 0) == 1);
  CHECK(f_nilpotent(1, 1) == 1);
  CHECK(f_nilpotent(1, 2) == 2);
  CHECK(f_nilpotent(2, 2) == 4);
  CHECK(f_nilpotent(2, 3) == 5);
  for (int n = 4; n <= 8; ++n) CHECK(f_nilpotent(2, n) == 6);
  for (int m = 0; m <= 8; ++m) {
    for (int n = 2 * m; n <= 2 * m + 4; ++n) CHECK(f_nilpotent(m, n) == f_nilpotent_closed_form(m));
  }
  // f is weakly increasing in n.
  for (int m = 0; m <= 5; ++m) {
    for (int n = 0; n < 2 * m; ++n) CHECK(f_nilpotent(m, n) <= f_nilpotent(m, n + 1));
  }
}

TEST_CASE("total orbit counts") {
  CHECK(total_orbits(1, 1, 2) == 2);
  CHECK(total_orbits(1, 2, 2) == 3);
  CHECK(total_orbits(2, 2, 2) == 8);
  CHECK(total_orbits(2, 3, 2) == 10);
  CHECK(total_orbits(1, 1, 3) == 3);
  CHECK(total_orbits(2, 2, 3) == 14);
  for (std::uint64_t q : {2, 3, 4, 5, 7}) CHECK(total_orbits(2, 3, q) == q * q + 2 * q + 2);
  CHECK(total_orbits(0, 5, 3) == 1);
}

TEST_CASE("memoized tables are independent") {
  CountTable t;
  CHECK(t.partition_count(12) == 77);
  CHECK(t.f_nilpotent(3, 6) == f_nilpotent_closed_form(3));
  CHECK(t.k_gl(4, 2) == k_gl(4, 2));
}
