#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "gusvd/matrix.hpp"
#include "gusvd/orbit_invariant.hpp"
#include "gusvd/partition.hpp"

namespace gusvd {

// Enumeration limits of the brute-force engine.
inline constexpr std::uint64_t kMaxGroupOrder = 400000;
inline constexpr std::uint64_t kMaxMatrixSpace = 1ULL << 24;

struct GroupElementSet {
  std::size_t n = 0;
  FieldPtr field;
  std::vector<Matrix> elements;
  std::vector<Matrix> generators;
};

// |GU_n(q)| = q^{n(n-1)/2} prod_{i=1..n} (q^i - (-1)^i).
std::uint64_t unitary_group_order(std::size_t n, std::uint64_t q);

// All of GU_n(q) for the standard form, built column by column, plus a small
// generating set found by seeded random search.
GroupElementSet enumerate_unitary(std::size_t n, std::uint64_t q, std::uint64_t seed = 1);

struct OrbitRecord {
  std::uint64_t representative_index = 0;  // smallest member
  Matrix representative;
  std::uint64_t size = 0;
  std::size_t invertible_dim = 0;  // rank of (A*A)^n
  OrbitInvariant invariant;
};

struct OrbitPartitionReport {
  std::size_t m = 0, n = 0;
  std::uint64_t q = 0;
  std::uint64_t group_order = 0;    // |GU_m| * |GU_n|
  std::uint64_t space_size = 0;     // q^{2mn}
  std::vector<OrbitRecord> orbits;  // sorted by representative_index
  std::vector<std::uint32_t> orbit_of;
};

// Base-q^2 positional index of a matrix (row-major, entry (0,0) least significant).
std::uint64_t matrix_index(const Matrix& a);
Matrix matrix_at(const FieldPtr& field, std::size_t m, std::size_t n, std::uint64_t index);

// Literal orbits of A -> X A Y* under GU_m(q) x GU_n(q), via union-find
// over the whole matrix space with generator moves.
OrbitPartitionReport orbit_partition(std::size_t m, std::size_t n, std::uint64_t q);

struct StratumCount {
  std::size_t invertible_dim = 0;
  std::uint64_t oracle = 0, formula = 0;
};

struct CountReport {
  bool pass = false;
  std::uint64_t oracle_count = 0, formula_count = 0;
  std::vector<StratumCount> strata;
  std::string message;
};

CountReport verify_counts(std::size_t m, std::size_t n, std::uint64_t q);
CountReport verify_counts(const OrbitPartitionReport& report);

struct CompletenessReport {
  bool pass = false;
  std::size_t orbit_count = 0, distinct_invariants = 0;
  std::vector<std::string> failures;
  std::vector<std::uint32_t> counterexample;  // element codes, row-major
};

CompletenessReport verify_invariant_completeness(std::size_t m, std::size_t n, std::uint64_t q);
CompletenessReport verify_invariant_completeness(const OrbitPartitionReport& report);

// Orbits whose members have A*A nilpotent.
std::uint64_t nilpotent_orbit_count(const OrbitPartitionReport& report);

// Every (Jordan type of AA*, Jordan type of A*A) over m x n matrices with AA* nilpotent.
std::set<std::pair<Partition, Partition>> realized_jordan_pairs(std::size_t m, std::size_t n, std::uint64_t q);

}  // namespace gusvd
