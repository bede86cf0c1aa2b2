#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <vector>

namespace gusvd {

// An element of GF(q^2), stored as its base-p positional code
// sum coeffs[i] * p^i over the polynomial basis 1, x, ..., x^(2e-1).
struct Elem {
  std::uint32_t code = 0;
  friend constexpr auto operator<=>(const Elem&, const Elem&) = default;
};

inline constexpr std::uint32_t kMaxFieldOrder = 1u << 16;

/// GF(q^2) with q = p^e, modelled as GF(p)[x]/(modulus).
///
/// The modulus is the lexicographically smallest monic irreducible of degree
/// 2e (coefficients compared from the top degree down) and the generator is
/// the element of full multiplicative order with the smallest code, so two
/// fields built from the same (p, e) are identical. Instances are immutable
/// and shared; obtain them through make_field().
class Field {
 public:
  Field(std::uint32_t p, std::uint32_t e);

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  // q^2, the number of elements.
  std::uint32_t order() const { return order_; }
  std::uint32_t degree() const { return 2 * e_; }

  // Coefficients low-first, length degree()+1, last entry 1.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }
  Elem generator() const { return generator_; }

  static constexpr Elem zero() { return Elem{0}; }
  static constexpr Elem one() { return Elem{1}; }
  Elem from_int(long long v) const;
  Elem from_code(std::uint32_t code) const;
  std::vector<std::uint32_t> coeffs(Elem a) const;
  Elem from_coeffs(const std::vector<std::uint32_t>& c) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const { return Elem{neg_[a.code]}; }
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, long long k) const;

  // a -> a^q, the generator of Gal(GF(q^2)/GF(q)).
  Elem conj(Elem a) const;
  // a^(q+1), lands in GF(q).
  Elem norm(Elem a) const { return mul(a, conj(a)); }
  // a + a^q, lands in GF(q).
  Elem trace(Elem a) const { return add(a, conj(a)); }
  bool in_subfield(Elem a) const { return conj(a) == a; }
  // Some x with x^(q+1) = a, for a a nonzero element of GF(q).
  Elem solve_norm(Elem a) const;

  // Discrete logarithm to base generator(); a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(long long k) const;

  std::vector<Elem> subfield_elements() const;

  bool operator==(const Field& o) const { return p_ == o.p_ && e_ == o.e_; }

 private:
  std::uint32_t p_, e_, q_, order_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> pow_p_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
  Elem generator_;
};

using FieldPtr = std::shared_ptr<const Field>;

// Shared, cached field for (p, e). Throws ValidationError if p is not prime,
// e is zero, or p^(2e) exceeds kMaxFieldOrder.
FieldPtr make_field(std::uint32_t p, std::uint32_t e);

bool is_prime(std::uint64_t n);

// Irreducibility of a monic polynomial over GF(p), coefficients low-first.
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& f, std::uint32_t p);

// (p, e) with p^e = q, or nullopt-like {0,0} if q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_split(std::uint64_t q);

}  // namespace gusvd
