#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "gusvd/hermitian.hpp"
#include "gusvd/matrix.hpp"
#include "gusvd/partition.hpp"
#include "gusvd/polynomial.hpp"

namespace gusvd {

/// Complete GU_m(q) x GU_n(q) orbit invariant of an m x n matrix A.
///
/// inv_factors is the similarity class of A^#A on its invertible part, with
/// coefficients in GF(q). The nilpotent part is recorded by rows: r_rows holds
/// d for each R(d) block (d >= 1), rp_rows holds r for each Rp(r-1) block (so
/// a zero row is a part 1) and j_pairs holds d for each J(d) + Jp(d) pair.
/// Zero columns are implicit and take up all column slack.
struct OrbitInvariant {
  std::size_t m = 0, n = 0;
  std::vector<Poly> inv_factors;
  Partition r_rows, rp_rows, j_pairs;

  std::size_t invertible_dim() const;
  // Number of zero columns (R(0) blocks) implied by the column count.
  long long column_slack() const;
  // Throws ValidationError if the row equation, column bound, subfield or
  // divisibility conditions fail.
  void validate(const Field& field) const;

  friend bool operator==(const OrbitInvariant& a, const OrbitInvariant& b) {
    return a.m == b.m && a.n == b.n && a.inv_factors == b.inv_factors && a.r_rows == b.r_rows &&
           a.rp_rows == b.rp_rows && a.j_pairs == b.j_pairs;
  }
};

struct FittingSplit {
  Matrix v0, v1, w0, w1;  // bases as columns
};

FittingSplit fitting_split(const Matrix& a, const HermitianForm& form_v, const HermitianForm& form_w);
FittingSplit fitting_split(const Matrix& a);

OrbitInvariant orbit_invariant(const Matrix& a, const HermitianForm& form_v, const HermitianForm& form_w);
OrbitInvariant orbit_invariant(const Matrix& a);

bool same_orbit(const Matrix& a1, const Matrix& a2);

// An m x n matrix (standard forms) whose invariant is inv.
Matrix realize(const OrbitInvariant& inv, const FieldPtr& field, std::uint64_t seed = 0);

// d x (d+1) matrix B with BB* and B*B single nilpotent Jordan blocks.
Matrix r_block(const FieldPtr& field, std::size_t d, std::uint64_t seed = 0);
// 2d x 2d matrix whose (A, A*) pencil is J(d) + Jp(d).
Matrix j_pair_block(const FieldPtr& field, std::size_t d, std::uint64_t seed = 0);

// (Jordan type of AA*, Jordan type of A*A); requires A*A nilpotent.
std::pair<Partition, Partition> jordan_pair(const Matrix& a);

}  // namespace gusvd
