#include "gusvd/pencil.hpp"

#include <algorithm>
#include <tuple>

#include "gusvd/errors.hpp"
#include "gusvd/linalg.hpp"

namespace gusvd {

IndecomposableLabel IndecomposableLabel::inv(Poly f) {
  if (f.degree() < 1 || !f.is_monic()) throw ValidationError("Inv label needs a monic polynomial of positive degree");
  if (f.c[0].code == 0) throw ValidationError("Inv label polynomial vanishes at 0; x-powers are J/Jp blocks");
  const int d = f.degree();
  return {BlockKind::kInv, d, std::move(f)};
}

std::size_t IndecomposableLabel::dim_v1() const {
  return static_cast<std::size_t>(kind == BlockKind::kR ? d + 1 : d);
}

std::size_t IndecomposableLabel::dim_v2() const {
  return static_cast<std::size_t>(kind == BlockKind::kRp ? d + 1 : d);
}

std::string IndecomposableLabel::str() const {
  switch (kind) {
    case BlockKind::kInv: {
      std::string s = "I[";
      for (std::size_t i = 0; i < f.c.size(); ++i) s += (i ? "," : "") + std::to_string(f.c[i].code);
      return s + "]";
    }
    case BlockKind::kJ: return "J[" + std::to_string(d) + "]";
    case BlockKind::kJp: return "J'[" + std::to_string(d) + "]";
    case BlockKind::kR: return "R[" + std::to_string(d) + "]";
    case BlockKind::kRp: return "R'[" + std::to_string(d) + "]";
  }
  return {};
}

bool operator<(const IndecomposableLabel& a, const IndecomposableLabel& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (a.d != b.d) return a.d < b.d;
  return a.f < b.f;
}

PencilPair::PencilPair(Matrix s_, Matrix t_) : s(std::move(s_)), t(std::move(t_)) {
  if (s.rows() != t.cols() || s.cols() != t.rows()) {
    throw ValidationError("pencil pair: S must be dim V2 x dim V1 and T dim V1 x dim V2");
  }
  if (!(s.field() == t.field())) throw ValidationError("pencil pair: S and T over different fields");
}

Matrix jordan_block(const FieldPtr& field, std::size_t d) {
  return Matrix::generate(field, d, d,
                          [](std::size_t i, std::size_t j) { return j == i + 1 ? Field::one() : Field::zero(); });
}

PencilPair build_indecomposable(const IndecomposableLabel& label, const FieldPtr& field) {
  const int d = label.d;
  if (d < 0 || (d == 0 && (label.kind == BlockKind::kJ || label.kind == BlockKind::kJp))) {
    throw ValidationError("label " + label.str() + " has an invalid size");
  }
  const auto n = static_cast<std::size_t>(d);
  switch (label.kind) {
    case BlockKind::kInv:
      if (label.f.degree() < 1 || label.f.c[0].code == 0) throw ValidationError("Inv label with f(0) = 0");
      return {Matrix::identity(field, n), companion(label.f)};
    case BlockKind::kJ:
      return {Matrix::identity(field, n), jordan_block(field, n)};
    case BlockKind::kJp:
      return {jordan_block(field, n), Matrix::identity(field, n)};
    case BlockKind::kR:
    case BlockKind::kRp: {
      // [0 | I_d] and [I_d ; 0]
      Matrix shift = Matrix::generate(field, n, n + 1, [](std::size_t i, std::size_t j) {
        return j == i + 1 ? Field::one() : Field::zero();
      });
      Matrix embed = Matrix::generate(field, n + 1, n, [](std::size_t i, std::size_t j) {
        return i == j ? Field::one() : Field::zero();
      });
      if (label.kind == BlockKind::kR) return {std::move(shift), std::move(embed)};
      return {std::move(embed), std::move(shift)};
    }
  }
  throw ValidationError("unknown label kind");
}

PencilPair direct_sum(const std::vector<IndecomposableLabel>& labels, const FieldPtr& field) {
  std::vector<Matrix> ss, ts;
  for (const auto& l : labels) {
    auto p = build_indecomposable(l, field);
    ss.push_back(std::move(p.s));
    ts.push_back(std::move(p.t));
  }
  return {block_diag(ss, field), block_diag(ts, field)};
}

namespace {

void truncate_stationary(std::vector<std::size_t>& seq) {
  for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
    if (seq[k] == seq[k + 1]) {
      seq.resize(k + 1);
      return;
    }
  }
}

long long at(const std::vector<std::size_t>& seq, long long k) {
  const auto i = static_cast<std::size_t>(k);
  return static_cast<long long>(i < seq.size() ? seq[i] : seq.back());
}

long long second_difference(const std::vector<std::size_t>& seq, long long s) {
  return at(seq, s - 1) - 2 * at(seq, s) + at(seq, s + 1);
}

}  // namespace

RankWordProfile rank_word_profile(const PencilPair& pair) {
  const Matrix ts = pair.t * pair.s;
  const Matrix st = pair.s * pair.t;
  const std::size_t len = pair.dim_v1() + pair.dim_v2() + 2;
  RankWordProfile p;
  Matrix pts = Matrix::identity(pair.s.field_ptr(), pair.dim_v1());
  Matrix pst = Matrix::identity(pair.s.field_ptr(), pair.dim_v2());
  for (std::size_t k = 0; k < len; ++k) {
    p.a.push_back(rank(pts));
    p.b.push_back(rank(pst));
    p.c.push_back(rank(pair.s * pts));
    p.d.push_back(rank(pair.t * pst));
    pts = pts * ts;
    pst = pst * st;
  }
  truncate_stationary(p.a);
  truncate_stationary(p.b);
  truncate_stationary(p.c);
  truncate_stationary(p.d);
  return p;
}

// Contribution of each indecomposable to the second differences at s >= 1:
//   D2 a_s = j_s + jp_s + r_{s-1} + rp_s
//   D2 b_s = j_s + jp_s + r_s + rp_{s-1}
//   D2 c_s = j_s + jp_{s+1} + r_s + rp_s
//   D2 d_s = j_{s+1} + jp_s + r_s + rp_s
// Invertible blocks only add constants and drop out.
NilpotentCounts nilpotent_counts(const RankWordProfile& p) {
  const long long top = static_cast<long long>(
      std::max({p.a.size(), p.b.size(), p.c.size(), p.d.size()}) + 2);
  const auto size = static_cast<std::size_t>(top + 2);
  NilpotentCounts n{std::vector<long long>(size, 0), std::vector<long long>(size, 0),
                    std::vector<long long>(size, 0), std::vector<long long>(size, 0)};
  for (long long s = top; s >= 1; --s) {
    const auto i = static_cast<std::size_t>(s);
    n.j[i] = second_difference(p.c, s) - n.jp[i + 1] - n.r[i] - n.rp[i];
    n.jp[i] = second_difference(p.d, s) - n.j[i + 1] - n.r[i] - n.rp[i];
    n.r[i - 1] = second_difference(p.a, s) - n.j[i] - n.jp[i] - n.rp[i];
    n.rp[i - 1] = second_difference(p.b, s) - n.j[i] - n.jp[i] - n.r[i];
    if (n.j[i] < 0 || n.jp[i] < 0 || n.r[i - 1] < 0 || n.rp[i - 1] < 0) {
      throw InvariantViolation("rank-word profile yields a negative multiplicity at size " + std::to_string(s));
    }
  }
  return n;
}

std::vector<IndecomposableLabel> decompose(const PencilPair& pair) {
  const FieldPtr& field = pair.s.field_ptr();
  const auto counts = nilpotent_counts(rank_word_profile(pair));
  std::vector<IndecomposableLabel> out;
  for (std::size_t d = 0; d < counts.j.size(); ++d) {
    const int di = static_cast<int>(d);
    for (long long k = 0; k < counts.j[d]; ++k) out.push_back(IndecomposableLabel::j(di));
    for (long long k = 0; k < counts.jp[d]; ++k) out.push_back(IndecomposableLabel::jp(di));
    for (long long k = 0; k < counts.r[d]; ++k) out.push_back(IndecomposableLabel::r(di));
    for (long long k = 0; k < counts.rp[d]; ++k) out.push_back(IndecomposableLabel::rp(di));
  }

  // invertible part: the non-x primary components of TS
  for (const auto& f : invariant_factors(pair.t * pair.s)) {
    Poly g = f;
    while (g.degree() >= 1 && g.c[0].code == 0) g = Poly(field, std::vector<Elem>(g.c.begin() + 1, g.c.end()));
    for (auto& [irr, mult] : factor(g)) out.push_back(IndecomposableLabel::inv(pow(irr, static_cast<unsigned>(mult))));
  }

  std::size_t v1 = 0, v2 = 0;
  for (const auto& l : out) {
    v1 += l.dim_v1();
    v2 += l.dim_v2();
  }
  if (v1 != pair.dim_v1() || v2 != pair.dim_v2()) {
    throw InvariantViolation("decomposition dimension vector does not match the pair");
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool pairs_equivalent(const PencilPair& p1, const PencilPair& p2) {
  if (!(p1.s.field() == p2.s.field())) throw ValidationError("pairs over different fields");
  if (p1.dim_v1() != p2.dim_v1() || p1.dim_v2() != p2.dim_v2()) return false;
  return decompose(p1) == decompose(p2);
}

}  // namespace gusvd
