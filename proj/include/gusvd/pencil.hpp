#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gusvd/matrix.hpp"
#include "gusvd/polynomial.hpp"

namespace gusvd {

// Representations of the quiver with S : V1 -> V2 and T : V2 -> V1.

enum class BlockKind { kInv, kJ, kJp, kR, kRp };

/// One indecomposable summand.
///
///   Inv(f)  S = I, T = companion(f), f a power of an irreducible other than x
///   J(d)    S = I, T = nilpotent Jordan block of size d
///   Jp(d)   T = I, S = nilpotent Jordan block of size d
///   R(d)    dim V1 = d+1, dim V2 = d; S e_i = f_i (i > 0), S e_0 = 0, T f_i = e_{i-1}
///   Rp(d)   R(d) with the roles of S and T exchanged
///
/// R(0) is a zero column of S and Rp(0) a zero row.
struct IndecomposableLabel {
  BlockKind kind = BlockKind::kJ;
  int d = 1;
  Poly f;

  static IndecomposableLabel inv(Poly f);
  static IndecomposableLabel j(int d) { return {BlockKind::kJ, d, {}}; }
  static IndecomposableLabel jp(int d) { return {BlockKind::kJp, d, {}}; }
  static IndecomposableLabel r(int d) { return {BlockKind::kR, d, {}}; }
  static IndecomposableLabel rp(int d) { return {BlockKind::kRp, d, {}}; }

  std::size_t dim_v1() const;
  std::size_t dim_v2() const;
  std::string str() const;

  friend bool operator==(const IndecomposableLabel& a, const IndecomposableLabel& b) {
    return a.kind == b.kind && a.d == b.d && a.f == b.f;
  }
  friend bool operator<(const IndecomposableLabel& a, const IndecomposableLabel& b);
};

// S has shape dim V2 x dim V1, T has shape dim V1 x dim V2.
struct PencilPair {
  Matrix s;
  Matrix t;

  PencilPair(Matrix s, Matrix t);
  std::size_t dim_v1() const { return s.cols(); }
  std::size_t dim_v2() const { return s.rows(); }
};

// a_k = rank((TS)^k), b_k = rank((ST)^k), c_k = rank(S (TS)^k),
// d_k = rank(T (ST)^k); each sequence stops at its first repeated value.
struct RankWordProfile {
  std::vector<std::size_t> a, b, c, d;
};

// Multiplicity of each nilpotent indecomposable, indexed by d.
struct NilpotentCounts {
  std::vector<long long> j, jp, r, rp;
};

PencilPair build_indecomposable(const IndecomposableLabel& label, const FieldPtr& field);
PencilPair direct_sum(const std::vector<IndecomposableLabel>& labels, const FieldPtr& field);
RankWordProfile rank_word_profile(const PencilPair& pair);

// Solves the second-difference system of the profile, largest block first.
NilpotentCounts nilpotent_counts(const RankWordProfile& profile);

// Sorted multiset of indecomposables whose direct sum is equivalent to pair.
std::vector<IndecomposableLabel> decompose(const PencilPair& pair);
bool pairs_equivalent(const PencilPair& p1, const PencilPair& p2);

// Single nilpotent Jordan block: ones on the superdiagonal.
Matrix jordan_block(const FieldPtr& field, std::size_t d);

}  // namespace gusvd
