#include "gusvd/polynomial.hpp"

#include <algorithm>
#include <random>

#include "gusvd/errors.hpp"

namespace gusvd {

namespace {

void trim(std::vector<Elem>& c) {
  while (!c.empty() && c.back().code == 0) c.pop_back();
}

const FieldPtr& pick_field(const Poly& a, const Poly& b) {
  if (a.field && b.field && !(*a.field == *b.field)) throw ValidationError("polynomials over different fields");
  return a.field ? a.field : b.field;
}

}  // namespace

Poly::Poly(FieldPtr f, std::vector<Elem> coeffs) : field(std::move(f)), c(std::move(coeffs)) { trim(c); }

std::vector<std::uint32_t> Poly::codes() const {
  std::vector<std::uint32_t> out;
  for (auto x : c) out.push_back(x.code);
  return out;
}

bool operator<(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.c.size(); i-- > 0;) {
    if (a.c[i] != b.c[i]) return a.c[i] < b.c[i];
  }
  return false;
}

Poly poly_const(const FieldPtr& f, Elem a) { return Poly(f, {a}); }
Poly poly_x(const FieldPtr& f) { return Poly(f, {Field::zero(), Field::one()}); }
Poly poly_linear(const FieldPtr& f, Elem a) { return Poly(f, {f->neg(a), Field::one()}); }

Poly operator+(const Poly& a, const Poly& b) {
  const FieldPtr& f = pick_field(a, b);
  std::vector<Elem> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f->add(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  const FieldPtr& f = pick_field(a, b);
  std::vector<Elem> r(std::max(a.c.size(), b.c.size()));
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f->sub(a.coeff(i), b.coeff(i));
  return Poly(f, std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  const FieldPtr& f = pick_field(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(f, {});
  std::vector<Elem> r(a.c.size() + b.c.size() - 1, Field::zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].code == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] = f->add(r[i + j], f->mul(a.c[i], b.c[j]));
  }
  return Poly(f, std::move(r));
}

Poly scale(Elem k, const Poly& a) {
  std::vector<Elem> r(a.c.size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field->mul(k, a.c[i]);
  return Poly(a.field, std::move(r));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  const FieldPtr& f = pick_field(a, b);
  if (b.is_zero()) throw DivisionByZero();
  std::vector<Elem> r = a.c;
  const std::size_t db = b.c.size() - 1;
  if (r.size() <= db) return {Poly(f, {}), a};
  std::vector<Elem> q(r.size() - db, Field::zero());
  const Elem lead_inv = f->inv(b.lead());
  while (r.size() > db) {
    const Elem k = f->mul(r.back(), lead_inv);
    const std::size_t shift = r.size() - 1 - db;
    q[shift] = k;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] = f->sub(r[shift + i], f->mul(k, b.c[i]));
    trim(r);
  }
  return {Poly(f, std::move(q)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

Poly monic(const Poly& a) {
  if (a.is_zero()) return a;
  return scale(a.field->inv(a.lead()), a);
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

Poly pow(const Poly& a, unsigned k) {
  Poly r = poly_const(a.field, Field::one());
  for (unsigned i = 0; i < k; ++i) r = r * a;
  return r;
}

Poly powmod(Poly a, std::uint64_t k, const Poly& m) {
  Poly r = poly_const(m.field, Field::one()) % m;
  a = a % m;
  for (; k; k >>= 1) {
    if (k & 1) r = (r * a) % m;
    if (k > 1) a = (a * a) % m;
  }
  return r;
}

Poly derivative(const Poly& a) {
  if (a.c.size() <= 1) return Poly(a.field, {});
  std::vector<Elem> r(a.c.size() - 1);
  for (std::size_t i = 1; i < a.c.size(); ++i) r[i - 1] = a.field->mul(a.field->from_int(static_cast<long long>(i)), a.c[i]);
  return Poly(a.field, std::move(r));
}

Elem eval(const Poly& a, Elem x) {
  Elem r = Field::zero();
  for (std::size_t i = a.c.size(); i-- > 0;) r = a.field->add(a.field->mul(r, x), a.c[i]);
  return r;
}

bool in_subfield(const Poly& a) {
  return std::all_of(a.c.begin(), a.c.end(), [&](Elem x) { return a.field->in_subfield(x); });
}

namespace {

Poly pth_root(const Poly& a) {
  const Field& f = *a.field;
  const std::uint32_t p = f.p();
  std::vector<Elem> r;
  for (std::size_t i = 0; i < a.c.size(); i += p) r.push_back(f.pow(a.c[i], f.order() / p));
  return Poly(a.field, std::move(r));
}

void squarefree(const Poly& f, int mult, std::vector<std::pair<Poly, int>>& out) {
  if (f.degree() < 1) return;
  const Poly one = poly_const(f.field, Field::one());
  Poly d = derivative(f);
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * static_cast<int>(f.field->p()), out);
    return;
  }
  Poly c = gcd(f, d);
  Poly w = f / c;
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = w / y;
    if (fac.degree() > 0) out.emplace_back(monic(fac), i * mult);
    ++i;
    w = y;
    c = c / y;
  }
  if (c.degree() > 0) squarefree(pth_root(c), mult * static_cast<int>(f.field->p()), out);
}

void equal_degree(const Poly& g, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (g.degree() == d) {
    out.push_back(monic(g));
    return;
  }
  const Field& f = *g.field;
  const std::uint64_t qq = f.order();
  std::uniform_int_distribution<std::uint32_t> dist(0, f.order() - 1);
  for (;;) {
    std::vector<Elem> rc(static_cast<std::size_t>(g.degree()));
    for (auto& x : rc) x = Elem{dist(rng)};
    Poly a(g.field, std::move(rc));
    if (a.degree() < 1) continue;
    Poly b;
    if (f.p() == 2) {
      // absolute trace to GF(2) of a, viewed in GF(qq^d)
      const std::uint32_t bits = [&] {
        std::uint32_t k = 0;
        for (std::uint64_t t = qq; t > 1; t >>= 1) ++k;
        return k;
      }();
      Poly t = a % g, acc = a % g;
      for (std::uint32_t i = 1; i < bits * static_cast<std::uint32_t>(d); ++i) {
        t = (t * t) % g;
        acc = acc + t;
      }
      b = acc;
    } else {
      Poly frob = a % g, prod = a % g;
      for (int i = 1; i < d; ++i) {
        frob = powmod(frob, qq, g);
        prod = (prod * frob) % g;
      }
      b = powmod(prod, (qq - 1) / 2, g) - poly_const(g.field, Field::one());
    }
    Poly h = gcd(g, b);
    if (h.degree() > 0 && h.degree() < g.degree()) {
      equal_degree(h, d, rng, out);
      equal_degree(g / h, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<Poly, int>> factor(const Poly& f) {
  if (f.degree() < 1) return {};
  std::vector<std::pair<Poly, int>> sqf;
  squarefree(monic(f), 1, sqf);
  std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
  std::vector<std::pair<Poly, int>> out;
  for (auto& [g0, mult] : sqf) {
    Poly g = g0;
    const Poly x = poly_x(g.field);
    Poly h = x % g;
    for (int i = 1; g.degree() >= 2 * i; ++i) {
      h = powmod(h, g.field->order(), g);
      Poly d = gcd(g, h - x);
      if (d.degree() > 0) {
        std::vector<Poly> parts;
        equal_degree(d, i, rng, parts);
        for (auto& p : parts) out.emplace_back(std::move(p), mult);
        g = g / d;
        h = h % g;
      }
    }
    if (g.degree() > 0) out.emplace_back(monic(g), mult);
  }
  // a factor can appear from several squarefree layers only in characteristic p
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<std::pair<Poly, int>> merged;
  for (auto& pr : out) {
    if (!merged.empty() && merged.back().first == pr.first) {
      merged.back().second += pr.second;
    } else {
      merged.push_back(std::move(pr));
    }
  }
  return merged;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  auto fs = factor(f);
  return fs.size() == 1 && fs[0].second == 1;
}

}  // namespace gusvd
