#include "gusvd/orbit_invariant.hpp"

#include <random>
#include <string>

#include "gusvd/errors.hpp"
#include "gusvd/linalg.hpp"
#include "gusvd/pencil.hpp"
#include "gusvd/prime_solve.hpp"

namespace gusvd {

std::size_t OrbitInvariant::invertible_dim() const {
  std::size_t k = 0;
  for (const auto& f : inv_factors) k += static_cast<std::size_t>(f.degree());
  return k;
}

long long OrbitInvariant::column_slack() const {
  const long long used = static_cast<long long>(invertible_dim()) + r_rows.size() +
                         static_cast<long long>(r_rows.length()) + rp_rows.size() -
                         static_cast<long long>(rp_rows.length()) + 2LL * j_pairs.size();
  return static_cast<long long>(n) - used;
}

void OrbitInvariant::validate(const Field& field) const {
  const long long rows = static_cast<long long>(invertible_dim()) + r_rows.size() + rp_rows.size() + 2LL * j_pairs.size();
  if (rows != static_cast<long long>(m)) {
    throw ValidationError("orbit invariant: blocks account for " + std::to_string(rows) + " rows, expected m = " +
                          std::to_string(m));
  }
  if (column_slack() < 0) throw ValidationError("orbit invariant: blocks need more than n columns");
  for (std::size_t i = 0; i < inv_factors.size(); ++i) {
    const Poly& f = inv_factors[i];
    if (!f.field || !(*f.field == field)) throw ValidationError("orbit invariant: factor over the wrong field");
    if (f.degree() < 1 || !f.is_monic()) throw ValidationError("orbit invariant: factors must be monic, nonconstant");
    if (f.c[0].code == 0) throw ValidationError("orbit invariant: factors must have nonzero constant term");
    if (!in_subfield(f)) throw ValidationError("orbit invariant: factor coefficients must lie in GF(q)");
    if (i > 0 && !(f % inv_factors[i - 1]).is_zero()) {
      throw ValidationError("orbit invariant: factors must form a divisibility chain");
    }
  }
}

FittingSplit fitting_split(const Matrix& a, const HermitianForm& form_v, const HermitianForm& form_w) {
  const Matrix adj = adjoint(a, form_v, form_w);
  const Matrix big = power(adj * a, a.cols());
  Matrix v0 = image_basis(big);
  Matrix v1 = kernel_basis(big);
  Matrix w0 = a * v0;
  Matrix w1 = kernel_basis(conj_transpose(w0) * form_w.gram());
  return {std::move(v0), std::move(v1), std::move(w0), std::move(w1)};
}

FittingSplit fitting_split(const Matrix& a) {
  return fitting_split(a, HermitianForm::standard(a.field_ptr(), a.cols()),
                       HermitianForm::standard(a.field_ptr(), a.rows()));
}

OrbitInvariant orbit_invariant(const Matrix& a, const HermitianForm& form_v, const HermitianForm& form_w) {
  const Matrix adj = adjoint(a, form_v, form_w);
  OrbitInvariant inv;
  inv.m = a.rows();
  inv.n = a.cols();

  const auto split = fitting_split(a, form_v, form_w);
  for (auto& f : invariant_factors(restrict_to(adj * a, split.v0))) {
    if (!in_subfield(f)) throw InvariantViolation("invariant factor of A^#A not defined over GF(q)");
    inv.inv_factors.push_back(std::move(f));
  }

  const auto counts = nilpotent_counts(rank_word_profile(PencilPair(a, adj)));
  std::vector<int> r, rp, j;
  for (std::size_t d = 0; d < counts.j.size(); ++d) {
    if (counts.j[d] != counts.jp[d]) {
      throw InvariantViolation("J and J' blocks of size " + std::to_string(d) + " do not pair");
    }
    const int di = static_cast<int>(d);
    for (long long k = 0; k < counts.j[d]; ++k) j.push_back(di);
    if (d >= 1) {
      for (long long k = 0; k < counts.r[d]; ++k) r.push_back(di);
    }
    for (long long k = 0; k < counts.rp[d]; ++k) rp.push_back(di + 1);
  }
  inv.r_rows = Partition::from_unsorted(std::move(r));
  inv.rp_rows = Partition::from_unsorted(std::move(rp));
  inv.j_pairs = Partition::from_unsorted(std::move(j));
  inv.validate(a.field());
  return inv;
}

OrbitInvariant orbit_invariant(const Matrix& a) {
  return orbit_invariant(a, HermitianForm::standard(a.field_ptr(), a.cols()),
                         HermitianForm::standard(a.field_ptr(), a.rows()));
}

bool same_orbit(const Matrix& a1, const Matrix& a2) {
  if (a1.rows() != a2.rows() || a1.cols() != a2.cols()) throw ValidationError("same_orbit: shapes differ");
  if (!(a1.field() == a2.field())) throw ValidationError("same_orbit: fields differ");
  return orbit_invariant(a1) == orbit_invariant(a2);
}

Matrix r_block(const FieldPtr& field, std::size_t d, std::uint64_t seed) {
  const Matrix h = hermitian_similar_to(jordan_block(field, d), seed);
  std::mt19937_64 rng(seed ^ 0x5bd1e995ULL);
  for (;;) {
    const Matrix v = random_matrix(field, d, 1, rng);
    const Matrix g = h - v * conj_transpose(v);
    if (!invertible(g)) continue;
    const Matrix a = conj_transpose(factor_gram(HermitianForm(g)));
    return hstack(a, v);
  }
}

Matrix j_pair_block(const FieldPtr& field, std::size_t d, std::uint64_t seed) {
  const Matrix id = Matrix::identity(field, d);
  const Matrix nil = jordan_block(field, d);
  const Matrix s = block_diag({id, nil}, field);
  const Matrix t = block_diag({nil, id}, field);
  const Matrix s_star = conj_transpose(s);
  const std::vector<Shape> shapes{{2 * d, 2 * d}, {2 * d, 2 * d}};
  // Hermitian G1, G2 making T the adjoint of S: G1 T = S* G2
  auto basis = prime_field_kernel(field, shapes, [&](const MatrixTuple& x) {
    return MatrixTuple{x[0] - conj_transpose(x[0]), x[1] - conj_transpose(x[1]), x[0] * t - s_star * x[1]};
  });
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    auto g = random_combination(field, shapes, basis, rng);
    if (!invertible(g[0]) || !invertible(g[1])) continue;
    const Matrix x1 = factor_gram(HermitianForm(g[0]));
    const Matrix x2 = factor_gram(HermitianForm(g[1]));
    return x2 * s * inverse(x1);
  }
  throw InvariantViolation("j_pair_block: no nondegenerate Hermitian pair found");
}

Matrix realize(const OrbitInvariant& inv, const FieldPtr& field, std::uint64_t seed) {
  inv.validate(*field);
  std::vector<Matrix> blocks;
  if (!inv.inv_factors.empty()) {
    std::vector<Matrix> comps;
    for (const auto& f : inv.inv_factors) comps.push_back(companion(f));
    const Matrix h = hermitian_similar_to(block_diag(comps, field), seed);
    blocks.push_back(factor_gram(HermitianForm(h)));
  }
  for (int d : inv.r_rows.parts()) blocks.push_back(r_block(field, static_cast<std::size_t>(d), seed));
  for (int r : inv.rp_rows.parts()) {
    if (r == 1) {
      blocks.emplace_back(field, 1, 0);
    } else {
      blocks.push_back(conj_transpose(r_block(field, static_cast<std::size_t>(r - 1), seed)));
    }
  }
  for (int d : inv.j_pairs.parts()) blocks.push_back(j_pair_block(field, static_cast<std::size_t>(d), seed));
  for (long long k = 0; k < inv.column_slack(); ++k) blocks.emplace_back(field, 0, 1);
  Matrix a = block_diag(blocks, field);
  if (a.rows() != inv.m || a.cols() != inv.n) throw InvariantViolation("realize: assembled matrix has the wrong shape");
  return a;
}

std::pair<Partition, Partition> jordan_pair(const Matrix& a) {
  const Matrix as = conj_transpose(a);
  const Matrix left = as * a;
  if (!is_nilpotent(left)) {
    throw PreconditionError("jordan_pair: A*A is not nilpotent; split off the invertible part with fitting_split");
  }
  return {nilpotent_jordan_type(a * as), nilpotent_jordan_type(left)};
}

}  // namespace gusvd
