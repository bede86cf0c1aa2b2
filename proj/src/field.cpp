#include "gusvd/field.hpp"

#include <map>
#include <mutex>
#include <string>

#include "gusvd/errors.hpp"

namespace gusvd {

namespace {

using ModPoly = std::vector<std::uint32_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t k = p - 2; k; k >>= 1) {
    if (k & 1) r = r * b % p;
    b = b * b % p;
  }
  return static_cast<std::uint32_t>(r);
}

ModPoly rem(ModPoly a, const ModPoly& f, std::uint32_t p) {
  trim(a);
  const std::size_t df = f.size() - 1;
  const std::uint32_t lead_inv = inv_mod(f.back(), p);
  while (a.size() > df) {
    const std::uint64_t c = std::uint64_t(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - df;
    for (std::size_t i = 0; i <= df; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i]) % p);
    }
    trim(a);
  }
  return a;
}

ModPoly mulmod(const ModPoly& a, const ModPoly& b, const ModPoly& f, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t(a[i]) * b[j]) % p);
    }
  }
  return rem(std::move(r), f, p);
}

ModPoly powmod(ModPoly a, std::uint64_t k, const ModPoly& f, std::uint32_t p) {
  ModPoly r{1};
  r = rem(r, f, p);
  a = rem(a, f, p);
  for (; k; k >>= 1) {
    if (k & 1) r = mulmod(r, a, f, p);
    a = mulmod(a, a, f, p);
  }
  return r;
}

ModPoly gcd(ModPoly a, ModPoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    ModPoly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

// x^(p^k) mod f
ModPoly frobenius_x(const ModPoly& f, std::uint32_t p, std::uint32_t k) {
  ModPoly h{0, 1};
  h = rem(h, f, p);
  for (std::uint32_t i = 0; i < k; ++i) h = powmod(h, p, f, p);
  return h;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t q) {
  if (q < 2) return {0, 0};
  auto ps = prime_factors(q);
  if (ps.size() != 1) return {0, 0};
  std::uint32_t e = 0;
  for (std::uint64_t t = q; t > 1; t /= ps[0]) ++e;
  return {static_cast<std::uint32_t>(ps[0]), e};
}

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  if (f.size() < 2 || f.back() != 1) return false;
  const auto n = static_cast<std::uint32_t>(f.size() - 1);
  if (n == 1) return true;
  ModPoly x{0, 1};
  ModPoly xr = rem(x, f, p);
  auto minus_x = [&](ModPoly h) {
    h.resize(std::max<std::size_t>(h.size(), 2), 0);
    h[1] = (h[1] + p - 1) % p;
    trim(h);
    return h;
  };
  if (!minus_x(frobenius_x(f, p, n)).empty()) return false;
  for (auto r : prime_factors(n)) {
    auto g = gcd(f, minus_x(frobenius_x(f, p, n / static_cast<std::uint32_t>(r))), p);
    if (g.size() != 1) return false;
  }
  return true;
}

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
  if (!is_prime(p)) throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
  if (e == 0) throw ValidationError("field exponent e must be positive");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q * q > kMaxFieldOrder) {
      throw ValidationError("GF(q^2) with q = " + std::to_string(p) + "^" + std::to_string(e) +
                            " exceeds the supported order 2^16");
    }
  }
  q_ = static_cast<std::uint32_t>(q);
  order_ = q_ * q_;
  const std::uint32_t deg = 2 * e;

  pow_p_.resize(deg + 1);
  pow_p_[0] = 1;
  for (std::uint32_t i = 1; i <= deg; ++i) pow_p_[i] = pow_p_[i - 1] * p;

  // smallest code among the low coefficients = lexicographically smallest
  // when compared from the top coefficient down
  for (std::uint32_t low = 0; low < order_; ++low) {
    ModPoly f(deg + 1);
    for (std::uint32_t i = 0; i < deg; ++i) f[i] = (low / pow_p_[i]) % p;
    f[deg] = 1;
    if (is_irreducible_mod_p(f, p)) {
      modulus_ = std::move(f);
      break;
    }
  }
  if (modulus_.empty()) throw InvariantViolation("no irreducible modulus found");

  neg_.resize(order_);
  for (std::uint32_t a = 0; a < order_; ++a) {
    std::uint32_t r = 0;
    for (std::uint32_t i = 0; i < deg; ++i) {
      const std::uint32_t d = (a / pow_p_[i]) % p;
      r += ((p - d) % p) * pow_p_[i];
    }
    neg_[a] = r;
  }

  auto to_poly = [&](std::uint32_t code) {
    ModPoly c(deg);
    for (std::uint32_t i = 0; i < deg; ++i) c[i] = (code / pow_p_[i]) % p;
    trim(c);
    return c;
  };
  auto to_code = [&](const ModPoly& c) {
    std::uint32_t r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) r += c[i] * pow_p_[i];
    return r;
  };

  const std::uint64_t group = order_ - 1;
  const auto ps = prime_factors(group);
  for (std::uint32_t c = 1; c < order_; ++c) {
    const ModPoly g = to_poly(c);
    bool full = true;
    for (auto r : ps) {
      if (powmod(g, group / r, modulus_, p) == ModPoly{1}) {
        full = false;
        break;
      }
    }
    if (full) {
      generator_ = Elem{c};
      break;
    }
  }

  exp_.resize(group);
  log_.assign(order_, 0);
  ModPoly cur{1};
  const ModPoly g = to_poly(generator_.code);
  for (std::uint64_t k = 0; k < group; ++k) {
    const std::uint32_t code = to_code(cur);
    exp_[k] = code;
    log_[code] = static_cast<std::uint32_t>(k);
    cur = mulmod(cur, g, modulus_, p);
  }
}

Elem Field::from_int(long long v) const {
  long long r = v % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Elem{static_cast<std::uint32_t>(r)};
}

Elem Field::from_code(std::uint32_t code) const {
  if (code >= order_) {
    throw ValidationError("element code " + std::to_string(code) + " out of range for a field of order " +
                          std::to_string(order_));
  }
  return Elem{code};
}

std::vector<std::uint32_t> Field::coeffs(Elem a) const {
  std::vector<std::uint32_t> c(degree());
  for (std::uint32_t i = 0; i < degree(); ++i) c[i] = (a.code / pow_p_[i]) % p_;
  return c;
}

Elem Field::from_coeffs(const std::vector<std::uint32_t>& c) const {
  if (c.size() != degree()) throw ValidationError("coefficient vector has the wrong length");
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < degree(); ++i) {
    if (c[i] >= p_) throw ValidationError("coefficient out of range");
    r += c[i] * pow_p_[i];
  }
  return Elem{r};
}

Elem Field::add(Elem a, Elem b) const {
  if (p_ == 2) return Elem{a.code ^ b.code};
  if (a.code == 0) return b;
  if (b.code == 0) return a;
  std::uint32_t r = 0;
  for (std::uint32_t i = 0; i < 2 * e_; ++i) {
    const std::uint32_t d = (a.code / pow_p_[i] + b.code / pow_p_[i]) % p_;
    r += d * pow_p_[i];
  }
  return Elem{r};
}

Elem Field::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem Field::mul(Elem a, Elem b) const {
  if (a.code == 0 || b.code == 0) return zero();
  const std::uint32_t s = log_[a.code] + log_[b.code];
  const std::uint32_t n = order_ - 1;
  return Elem{exp_[s >= n ? s - n : s]};
}

Elem Field::inv(Elem a) const {
  if (a.code == 0) throw DivisionByZero();
  const std::uint32_t l = log_[a.code];
  return Elem{exp_[l == 0 ? 0 : order_ - 1 - l]};
}

Elem Field::pow(Elem a, long long k) const {
  if (a.code == 0) {
    if (k == 0) return one();
    if (k < 0) throw DivisionByZero();
    return zero();
  }
  const long long n = order_ - 1;
  long long r = (static_cast<long long>(log_[a.code]) * (k % n)) % n;
  if (r < 0) r += n;
  return Elem{exp_[static_cast<std::size_t>(r)]};
}

Elem Field::conj(Elem a) const {
  if (a.code == 0) return a;
  const std::uint64_t n = order_ - 1;
  return Elem{exp_[static_cast<std::size_t>(std::uint64_t(log_[a.code]) * q_ % n)]};
}

Elem Field::solve_norm(Elem a) const {
  if (a.code == 0) throw DomainError("solve_norm: zero has no norm preimage among units");
  if (!in_subfield(a)) throw DomainError("solve_norm: argument is not in the subfield GF(q)");
  const std::uint32_t l = log_[a.code];
  return Elem{exp_[l / (q_ + 1)]};
}

std::uint32_t Field::log(Elem a) const {
  if (a.code == 0) throw DivisionByZero();
  return log_[a.code];
}

Elem Field::exp(long long k) const {
  const long long n = order_ - 1;
  long long r = k % n;
  if (r < 0) r += n;
  return Elem{exp_[static_cast<std::size_t>(r)]};
}

std::vector<Elem> Field::subfield_elements() const {
  std::vector<Elem> out{zero()};
  for (std::uint32_t k = 0; k < order_ - 1; k += q_ + 1) out.push_back(Elem{exp_[k]});
  return out;
}

FieldPtr make_field(std::uint32_t p, std::uint32_t e) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto key = std::make_pair(p, e);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  auto f = std::make_shared<const Field>(p, e);
  cache.emplace(key, f);
  return f;
}

}  // namespace gusvd
