#include "gusvd/admissibility.hpp"

#include <algorithm>
#include <cstdlib>

#include "gusvd/errors.hpp"
#include "gusvd/hermitian.hpp"
#include "gusvd/linalg.hpp"
#include "gusvd/orbit_invariant.hpp"

namespace gusvd {

GammaDecomposition gamma_decomposition(const Partition& alpha, const Partition& beta) {
  std::vector<int> g;
  const std::size_t len = std::max(alpha.length(), beta.length());
  for (std::size_t i = 0; i < len; ++i) {
    if (alpha[i] == beta[i] && alpha[i] > 0) g.push_back(alpha[i]);
  }
  GammaDecomposition out;
  out.gamma = Partition(g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (i == 0 || g[i - 1] - g[i] > 1) out.components.emplace_back();
    auto& run = out.components.back();
    run.parts.push_back(g[i]);
    if (g[i] == 1) run.contains_one = true;
  }
  return out;
}

bool flanders_admissible(const Partition& lambda, const Partition& mu) {
  const std::size_t len = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < len; ++i) {
    if (std::abs(lambda[i] - mu[i]) > 1) return false;
  }
  return true;
}

bool star_admissible(const Partition& alpha, const Partition& beta) {
  if (!flanders_admissible(alpha, beta)) return false;
  for (const auto& run : gamma_decomposition(alpha, beta).components) {
    if (!run.contains_one && run.length() % 2 != 0) return false;
  }
  return true;
}

bool transpose_admissible(const Partition& alpha, const Partition& beta) { return star_admissible(alpha, beta); }

namespace {

// multiset of parts, largest first
using Parts = std::vector<int>;

bool take(Parts& p, int v) {
  auto it = std::find(p.begin(), p.end(), v);
  if (it == p.end()) return false;
  p.erase(it);
  return true;
}

// Peels alpha (AA* side) and beta (A*A side). Each label adds parts:
//   R(d): alpha d (if d >= 1), beta d+1;   Rp(d): alpha d+1, beta d (if d >= 1);
//   J(d) + Jp(d): alpha {d, d}, beta {d, d}.
bool peel(Parts alpha, Parts beta, std::vector<IndecomposableLabel>& out) {
  if (alpha.empty() && beta.empty()) return true;
  const int a1 = alpha.empty() ? 0 : alpha.front();
  const int b1 = beta.empty() ? 0 : beta.front();
  const std::size_t mark = out.size();
  auto attempt = [&](Parts a, Parts b, std::vector<IndecomposableLabel> labels) {
    out.insert(out.end(), labels.begin(), labels.end());
    if (peel(std::move(a), std::move(b), out)) return true;
    out.resize(mark);
    return false;
  };

  if (a1 == b1 + 1) {
    Parts a = alpha, b = beta;
    take(a, a1);
    if (b1 > 0) take(b, b1);
    return attempt(std::move(a), std::move(b), {IndecomposableLabel::rp(b1)});
  }
  if (b1 == a1 + 1) {
    Parts a = alpha, b = beta;
    if (a1 > 0) take(a, a1);
    take(b, b1);
    return attempt(std::move(a), std::move(b), {IndecomposableLabel::r(a1)});
  }
  if (a1 != b1) return false;
  if (a1 == 1) {
    Parts a = alpha, b = beta;
    take(a, 1);
    take(b, 1);
    return attempt(std::move(a), std::move(b), {IndecomposableLabel::rp(0), IndecomposableLabel::r(0)});
  }
  const int d = a1;
  {
    Parts a = alpha, b = beta;
    if (take(a, d) && take(a, d) && take(b, d) && take(b, d)) {
      if (attempt(std::move(a), std::move(b), {IndecomposableLabel::j(d), IndecomposableLabel::jp(d)})) return true;
    }
  }
  {
    Parts a = alpha, b = beta;
    if (take(a, d) && take(a, d - 1) && take(b, d) && take(b, d - 1)) {
      if (attempt(std::move(a), std::move(b), {IndecomposableLabel::r(d - 1), IndecomposableLabel::rp(d - 1)})) {
        return true;
      }
    }
  }
  return false;
}

}  // namespace

std::vector<IndecomposableLabel> star_labels(const Partition& alpha, const Partition& beta) {
  std::vector<IndecomposableLabel> out;
  if (!peel(alpha.parts(), beta.parts(), out)) {
    throw DomainError("partitions " + alpha.str() + ", " + beta.str() + " are not realizable by A*A, AA*");
  }
  std::sort(out.begin(), out.end());
  return out;
}

Matrix star_witness(const Partition& alpha, const Partition& beta, const FieldPtr& field, std::uint64_t seed) {
  if (!star_admissible(alpha, beta)) {
    throw DomainError("star_witness: " + alpha.str() + ", " + beta.str() + " is not an admissible pair");
  }
  OrbitInvariant inv;
  inv.m = static_cast<std::size_t>(alpha.size());
  inv.n = static_cast<std::size_t>(beta.size());
  std::vector<int> r, rp, j;
  for (const auto& l : star_labels(alpha, beta)) {
    switch (l.kind) {
      case BlockKind::kR:
        if (l.d >= 1) r.push_back(l.d);
        break;
      case BlockKind::kRp: rp.push_back(l.d + 1); break;
      case BlockKind::kJ: j.push_back(l.d); break;
      default: break;
    }
  }
  inv.r_rows = Partition::from_unsorted(r);
  inv.rp_rows = Partition::from_unsorted(rp);
  inv.j_pairs = Partition::from_unsorted(j);
  Matrix a = realize(inv, field, seed);
  if (jordan_pair(a) != std::make_pair(alpha, beta)) {
    throw InvariantViolation("star_witness: constructed matrix has the wrong Jordan pair");
  }
  return a;
}

std::pair<Matrix, Matrix> flanders_witness(const Partition& lambda, const Partition& mu, const FieldPtr& field) {
  if (!flanders_admissible(lambda, mu)) {
    throw DomainError("flanders_witness: " + lambda.str() + ", " + mu.str() + " is not an admissible pair");
  }
  // A = S : V1 -> V2 with dim V2 = |lambda|; AB = ST has type lambda, BA = TS type mu
  std::vector<IndecomposableLabel> labels;
  const std::size_t len = std::max(lambda.length(), mu.length());
  for (std::size_t i = 0; i < len; ++i) {
    const int l = lambda[i], u = mu[i];
    if (l == u) {
      labels.push_back(IndecomposableLabel::j(l));
    } else if (l == u + 1) {
      labels.push_back(IndecomposableLabel::rp(u));
    } else {
      labels.push_back(IndecomposableLabel::r(l));
    }
  }
  const PencilPair p = direct_sum(labels, field);
  if (nilpotent_jordan_type(p.s * p.t) != lambda || nilpotent_jordan_type(p.t * p.s) != mu) {
    throw InvariantViolation("flanders_witness: constructed pair has the wrong Jordan types");
  }
  return {p.s, p.t};
}

Matrix invertible_witness(const Matrix& b, std::uint64_t seed) {
  if (!b.square() || !b.over_subfield()) throw ValidationError("invertible_witness needs a square matrix over GF(q)");
  if (!invertible(b)) throw DomainError("invertible_witness: matrix is singular");
  const Matrix h = hermitian_similar_to(b, seed);
  Matrix t = factor_gram(HermitianForm(h));
  if (invariant_factors(conj_transpose(t) * t) != invariant_factors(b)) {
    throw InvariantViolation("invertible_witness: T*T is not similar to the input");
  }
  return t;
}

}  // namespace gusvd
