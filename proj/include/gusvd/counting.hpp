#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>

namespace gusvd {

/// Memoized orbit-counting functions. All queries are thread-safe.
class CountTable {
 public:
  // p(d), the number of partitions of d (Euler's pentagonal recurrence).
  std::uint64_t partition_count(int d);
  // k(GL_n(q)), by summing over class types: assignments of partitions to
  // monic irreducibles other than x with degree-weighted total n.
  std::uint64_t k_gl(int n, std::uint64_t q);
  // Number of nilpotent GU_m x GU_n orbits on m x n matrices, by enumerating
  // the (R, R', J-pair) row partitions that fit in n columns.
  std::uint64_t f_nilpotent(int m, int n);

 private:
  std::mutex mu_;
  std::map<int, std::uint64_t> p_;
  std::map<std::pair<int, std::uint64_t>, std::uint64_t> kgl_;
  std::map<std::pair<int, int>, std::uint64_t> f_;
};

CountTable& default_count_table();

std::uint64_t partition_count(int d);
std::uint64_t k_gl(int n, std::uint64_t q);
std::uint64_t f_nilpotent(int m, int n);
// sum over m1 + m2 + 2 m3 = m of p(m1) p(m2) p(m3); equals f_nilpotent(m, n) for n >= 2m.
std::uint64_t f_nilpotent_closed_form(int m);
// sum_{i=0}^{min(m,n)} f(m-i, n-i) k(GL_i(q)).
std::uint64_t total_orbits(int m, int n, std::uint64_t q);

// Number of monic irreducible polynomials of degree d over GF(q).
std::uint64_t irreducible_count(int d, std::uint64_t q);

}  // namespace gusvd
