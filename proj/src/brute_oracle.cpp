#include "gusvd/brute_oracle.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "gusvd/counting.hpp"
#include "gusvd/errors.hpp"
#include "gusvd/hermitian.hpp"
#include "gusvd/linalg.hpp"

namespace gusvd {

namespace {

FieldPtr field_for(std::uint64_t q) {
  auto [p, e] = prime_power_split(q);
  if (p == 0) throw ValidationError("q = " + std::to_string(q) + " is not a prime power");
  return make_field(p, e);
}

std::uint64_t ipow(std::uint64_t b, std::uint64_t k, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    if (r > cap / b) return cap + 1;
    r *= b;
  }
  return r;
}

using Codes = std::vector<std::uint32_t>;

// out = a (r x k) * b (k x c), raw element codes
void mul_codes(const Field& f, const Codes& a, const Codes& b, std::size_t r, std::size_t k, std::size_t c,
               Codes& out) {
  out.assign(r * c, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t t = 0; t < k; ++t) {
      const Elem x{a[i * k + t]};
      if (x.code == 0) continue;
      for (std::size_t j = 0; j < c; ++j) {
        out[i * c + j] = f.add(Elem{out[i * c + j]}, f.mul(x, Elem{b[t * c + j]})).code;
      }
    }
  }
}

std::vector<Matrix> generating_set(const std::vector<Matrix>& elements, std::uint64_t seed) {
  if (elements.size() <= 1) return {};
  const Field& f = elements[0].field();
  const std::size_t n = elements[0].rows();
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, elements.size() - 1);
  std::vector<Matrix> gens;
  for (;;) {
    gens.push_back(elements[pick(rng)]);
    if (gens.size() < 2) continue;
    std::set<Codes> seen;
    std::vector<Codes> frontier{Matrix::identity(elements[0].field_ptr(), n).codes()};
    seen.insert(frontier[0]);
    Codes tmp;
    while (!frontier.empty()) {
      std::vector<Codes> next;
      for (const auto& x : frontier) {
        for (const auto& g : gens) {
          mul_codes(f, g.codes(), x, n, n, n, tmp);
          if (seen.insert(tmp).second) next.push_back(tmp);
        }
      }
      frontier = std::move(next);
    }
    if (seen.size() == elements.size()) return gens;
  }
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }
  std::uint32_t find(std::uint32_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (a < b) std::swap(a, b);
    parent_[a] = b;  // root is always the smallest member
  }

 private:
  std::vector<std::uint32_t> parent_;
};

}  // namespace

std::uint64_t unitary_group_order(std::size_t n, std::uint64_t q) {
  unsigned __int128 r = 1;
  for (std::size_t i = 0; i < n * (n - (n ? 1 : 0)) / 2; ++i) r *= q;
  __int128 qi = 1;
  for (std::size_t i = 1; i <= n; ++i) {
    qi *= static_cast<__int128>(q);
    r *= static_cast<unsigned __int128>(qi - ((i % 2) ? -1 : 1));
  }
  if (r > UINT64_MAX) throw ResourceError("unitary group order overflows");
  return static_cast<std::uint64_t>(r);
}

std::uint64_t matrix_index(const Matrix& a) {
  std::uint64_t idx = 0, base = 1;
  for (auto x : a.entries()) {
    idx += x.code * base;
    base *= a.field().order();
  }
  return idx;
}

Matrix matrix_at(const FieldPtr& field, std::size_t m, std::size_t n, std::uint64_t index) {
  std::vector<Elem> d(m * n);
  for (auto& x : d) {
    x = Elem{static_cast<std::uint32_t>(index % field->order())};
    index /= field->order();
  }
  return Matrix(field, m, n, std::move(d));
}

GroupElementSet enumerate_unitary(std::size_t n, std::uint64_t q, std::uint64_t seed) {
  const FieldPtr field = field_for(q);
  const Field& f = *field;
  const std::uint64_t order = unitary_group_order(n, q);
  const std::uint64_t vectors = ipow(f.order(), n, kMaxMatrixSpace);
  if (order > kMaxGroupOrder || vectors > kMaxMatrixSpace) {
    throw ResourceError("GU_" + std::to_string(n) + "(" + std::to_string(q) + ") exceeds the enumeration budget");
  }
  GroupElementSet out;
  out.n = n;
  out.field = field;

  auto inner = [&](const Codes& u, const Codes& v) {
    Elem s = Field::zero();
    for (std::size_t i = 0; i < u.size(); ++i) s = f.add(s, f.mul(f.conj(Elem{u[i]}), Elem{v[i]}));
    return s;
  };
  std::vector<Codes> units;
  for (std::uint64_t idx = 0; idx < vectors; ++idx) {
    Codes v(n);
    std::uint64_t t = idx;
    for (auto& x : v) {
      x = static_cast<std::uint32_t>(t % f.order());
      t /= f.order();
    }
    if (inner(v, v) == Field::one()) units.push_back(std::move(v));
  }

  std::vector<const Codes*> cols;
  std::function<void()> extend = [&] {
    if (cols.size() == n) {
      out.elements.push_back(Matrix::generate(field, n, n, [&](std::size_t i, std::size_t j) {
        return Elem{(*cols[j])[i]};
      }));
      return;
    }
    for (const auto& v : units) {
      bool ok = true;
      for (const auto* c : cols) {
        if (inner(*c, v).code != 0) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      cols.push_back(&v);
      extend();
      cols.pop_back();
    }
  };
  extend();
  if (out.elements.size() != order) {
    throw InvariantViolation("enumerated " + std::to_string(out.elements.size()) + " unitary matrices, expected " +
                             std::to_string(order));
  }
  out.generators = generating_set(out.elements, seed);
  return out;
}

OrbitPartitionReport orbit_partition(std::size_t m, std::size_t n, std::uint64_t q) {
  const FieldPtr field = field_for(q);
  const Field& f = *field;
  const std::uint64_t space = ipow(f.order(), m * n, kMaxMatrixSpace);
  if (space > kMaxMatrixSpace) {
    throw ResourceError("matrix space of " + std::to_string(m) + "x" + std::to_string(n) + " over GF(" +
                        std::to_string(q) + "^2) exceeds the enumeration budget");
  }
  const auto left = enumerate_unitary(m, q);
  const auto right = enumerate_unitary(n, q);

  OrbitPartitionReport rep;
  rep.m = m;
  rep.n = n;
  rep.q = q;
  rep.group_order = left.elements.size() * right.elements.size();
  rep.space_size = space;

  std::vector<Codes> lg, rg;
  for (const auto& g : left.generators) lg.push_back(g.codes());
  for (const auto& h : right.generators) rg.push_back(conj_transpose(h).codes());

  UnionFind uf(space);
  Codes a(m * n), tmp;
  auto encode = [&](const Codes& c) {
    std::uint64_t idx = 0, base = 1;
    for (auto x : c) {
      idx += x * base;
      base *= f.order();
    }
    return static_cast<std::uint32_t>(idx);
  };
  for (std::uint64_t x = 0; x < space; ++x) {
    std::uint64_t t = x;
    for (auto& v : a) {
      v = static_cast<std::uint32_t>(t % f.order());
      t /= f.order();
    }
    for (const auto& g : lg) {
      mul_codes(f, g, a, m, m, n, tmp);
      uf.unite(static_cast<std::uint32_t>(x), encode(tmp));
    }
    for (const auto& h : rg) {
      mul_codes(f, a, h, m, n, n, tmp);
      uf.unite(static_cast<std::uint32_t>(x), encode(tmp));
    }
  }

  rep.orbit_of.resize(space);
  std::map<std::uint32_t, std::uint32_t> id_of_root;
  for (std::uint64_t x = 0; x < space; ++x) {
    const std::uint32_t r = uf.find(static_cast<std::uint32_t>(x));
    auto [it, fresh] = id_of_root.emplace(r, static_cast<std::uint32_t>(rep.orbits.size()));
    if (fresh) {
      OrbitRecord rec;
      rec.representative_index = x;
      rec.representative = matrix_at(field, m, n, x);
      rep.orbits.push_back(std::move(rec));
    }
    rep.orbit_of[x] = it->second;
    rep.orbits[it->second].size++;
  }
  for (auto& rec : rep.orbits) {
    const Matrix& a0 = rec.representative;
    rec.invertible_dim = rank(power(conj_transpose(a0) * a0, n));
    rec.invariant = orbit_invariant(a0);
  }
  return rep;
}

CountReport verify_counts(const OrbitPartitionReport& report) {
  CountReport out;
  const int m = static_cast<int>(report.m), n = static_cast<int>(report.n);
  out.oracle_count = report.orbits.size();
  out.formula_count = total_orbits(m, n, report.q);
  bool ok = out.oracle_count == out.formula_count;
  std::uint64_t covered = 0;
  for (const auto& rec : report.orbits) {
    covered += rec.size;
    if (report.group_order % rec.size != 0) {
      ok = false;
      out.message += "orbit of " + std::to_string(rec.representative_index) + " has size " +
                     std::to_string(rec.size) + " not dividing the group order; ";
    }
  }
  if (covered != report.space_size) {
    ok = false;
    out.message += "orbit sizes do not sum to the matrix space; ";
  }
  for (int i = 0; i <= std::min(m, n); ++i) {
    StratumCount s;
    s.invertible_dim = static_cast<std::size_t>(i);
    s.formula = f_nilpotent(m - i, n - i) * k_gl(i, report.q);
    for (const auto& rec : report.orbits) {
      if (rec.invertible_dim == s.invertible_dim) ++s.oracle;
    }
    if (s.oracle != s.formula) {
      ok = false;
      out.message += "stratum i=" + std::to_string(i) + ": oracle " + std::to_string(s.oracle) + " vs formula " +
                     std::to_string(s.formula) + "; ";
    }
    out.strata.push_back(s);
  }
  out.pass = ok;
  if (ok) out.message = "ok";
  return out;
}

CountReport verify_counts(std::size_t m, std::size_t n, std::uint64_t q) {
  return verify_counts(orbit_partition(m, n, q));
}

CompletenessReport verify_invariant_completeness(const OrbitPartitionReport& report) {
  CompletenessReport out;
  out.orbit_count = report.orbits.size();
  const FieldPtr field = report.orbits.empty() ? field_for(report.q) : report.orbits[0].representative.field_ptr();
  auto fail = [&](const std::string& why, const Matrix& a) {
    if (out.failures.empty()) out.counterexample = a.codes();
    out.failures.push_back(why);
  };

  for (std::uint64_t x = 0; x < report.space_size; ++x) {
    const auto& rec = report.orbits[report.orbit_of[x]];
    const Matrix a = matrix_at(field, report.m, report.n, x);
    if (rank(a) != rank(rec.representative)) {
      fail("member " + std::to_string(x) + " differs in rank from its orbit representative", a);
      continue;
    }
    if (!(orbit_invariant(a) == rec.invariant)) {
      fail("member " + std::to_string(x) + " has a different invariant than its orbit representative", a);
    }
  }

  std::size_t distinct = 0;
  for (std::size_t i = 0; i < report.orbits.size(); ++i) {
    bool fresh = true;
    for (std::size_t j = 0; j < i; ++j) {
      if (report.orbits[i].invariant == report.orbits[j].invariant) {
        fresh = false;
        fail("orbits " + std::to_string(j) + " and " + std::to_string(i) + " share an invariant",
             report.orbits[i].representative);
      }
    }
    if (fresh) ++distinct;
  }
  out.distinct_invariants = distinct;

  for (std::size_t i = 0; i < report.orbits.size(); ++i) {
    const Matrix r = realize(report.orbits[i].invariant, field);
    if (report.orbit_of[matrix_index(r)] != i) fail("realize() of orbit " + std::to_string(i) + " lands elsewhere", r);
  }
  out.pass = out.failures.empty();
  return out;
}

CompletenessReport verify_invariant_completeness(std::size_t m, std::size_t n, std::uint64_t q) {
  return verify_invariant_completeness(orbit_partition(m, n, q));
}

std::uint64_t nilpotent_orbit_count(const OrbitPartitionReport& report) {
  return static_cast<std::uint64_t>(std::count_if(report.orbits.begin(), report.orbits.end(),
                                                  [](const OrbitRecord& r) { return r.invertible_dim == 0; }));
}

std::set<std::pair<Partition, Partition>> realized_jordan_pairs(std::size_t m, std::size_t n, std::uint64_t q) {
  const FieldPtr field = field_for(q);
  const std::uint64_t space = ipow(field->order(), m * n, kMaxMatrixSpace);
  if (space > kMaxMatrixSpace) throw ResourceError("matrix space exceeds the enumeration budget");
  std::set<std::pair<Partition, Partition>> out;
  for (std::uint64_t x = 0; x < space; ++x) {
    const Matrix a = matrix_at(field, m, n, x);
    const Matrix as = conj_transpose(a);
    const Matrix right = a * as;
    if (!is_nilpotent(right)) continue;
    out.emplace(nilpotent_jordan_type(right), nilpotent_jordan_type(as * a));
  }
  return out;
}

}  // namespace gusvd
