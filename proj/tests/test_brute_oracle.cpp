#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gusvd/admissibility.hpp"
#include "gusvd/brute_oracle.hpp"
#include "gusvd/counting.hpp"
#include "gusvd/errors.hpp"
#include "gusvd/hermitian.hpp"

using namespace gusvd;

TEST_CASE("unitary group orders") {
  CHECK(unitary_group_order(0, 2) == 1);
  CHECK(unitary_group_order(1, 2) == 3);
  CHECK(unitary_group_order(2, 2) == 18);
  CHECK(unitary_group_order(3, 2) == 648);
  CHECK(unitary_group_order(2, 3) == 96);
}

TEST_CASE("literal unitary groups") {
  auto g1 = enumerate_unitary(1, 2);
  CHECK(g1.elements.size() == 3);
  auto g2 = enumerate_unitary(2, 2);
  CHECK(g2.elements.size() == 18);
  auto g3 = enumerate_unitary(3, 2);
  CHECK(g3.elements.size() == 648);
  for (const auto& u : g3.elements) CHECK(conj_transpose(u) * u == Matrix::identity(g3.field, 3));
  CHECK(enumerate_unitary(2, 3).elements.size() == 96);
  CHECK_THROWS_AS(enumerate_unitary(4, 3), ResourceError);
  CHECK_THROWS_AS(enumerate_unitary(2, 6), ValidationError);
}

TEST_CASE("matrix indexing round-trips") {
  const auto f9 = make_field(3, 1);
  for (std::uint64_t i : {0ULL, 1ULL, 80ULL, 6560ULL}) CHECK(matrix_index(matrix_at(f9, 2, 2, i)) == i);
}

TEST_CASE("orbit partitions") {
  auto r = orbit_partition(1, 1, 2);
  CHECK(r.orbits.size() == 2);
  CHECK(r.orbits[0].size == 1);
  CHECK(r.orbits[1].size == 3);
  CHECK(orbit_partition(1, 2, 2).orbits.size() == 3);
  auto r22 = orbit_partition(2, 2, 2);
  CHECK(r22.orbits.size() == 8);
  std::uint64_t total = 0;
  for (const auto& o : r22.orbits) total += o.size;
  CHECK(total == 256);
  CHECK(nilpotent_orbit_count(r22) == 4);
  CHECK_THROWS_AS(orbit_partition(3, 3, 3), ResourceError);
}

TEST_CASE("count verification") {
  for (auto [m, n, q] : {std::tuple{1, 1, 2}, {1, 2, 2}, {2, 2, 2}, {1, 1, 3}}) {
    auto rep = verify_counts(m, n, q);
    CHECK(rep.pass);
    CHECK(rep.oracle_count == total_orbits(m, n, q));
  }
  auto r = verify_counts(2, 2, 2);
  REQUIRE(r.strata.size() == 3);
  CHECK(r.strata[0].oracle == 4);
  CHECK(r.strata[1].oracle == 1);
  CHECK(r.strata[2].oracle == 3);
}

TEST_CASE("invariant completeness") {
  for (auto [m, n, q] : {std::tuple{1, 2, 2}, {2, 2, 2}, {2, 1, 3}}) {
    auto rep = verify_invariant_completeness(m, n, q);
    CHECK(rep.pass);
    CHECK(rep.orbit_count == rep.distinct_invariants);
  }
}

TEST_CASE("realized Jordan pairs are the admissible ones") {
  auto got = realized_jordan_pairs(2, 2, 2);
  std::set<std::pair<Partition, Partition>> want;
  for (const auto& a : partitions_of(2)) {
    for (const auto& b : partitions_of(2)) {
      if (star_admissible(a, b)) want.emplace(a, b);
    }
  }
  CHECK(got == want);
}
