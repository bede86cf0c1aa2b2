#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gusvd/field.hpp"

namespace gusvd {

// Univariate polynomial over GF(q^2), coefficients low-first with no
// trailing zeros (the zero polynomial has no coefficients).
struct Poly {
  FieldPtr field;
  std::vector<Elem> c;

  Poly() = default;
  Poly(FieldPtr f, std::vector<Elem> coeffs);

  int degree() const { return static_cast<int>(c.size()) - 1; }
  bool is_zero() const { return c.empty(); }
  bool is_monic() const { return !c.empty() && c.back() == Field::one(); }
  Elem lead() const { return c.empty() ? Field::zero() : c.back(); }
  Elem coeff(std::size_t i) const { return i < c.size() ? c[i] : Field::zero(); }
  std::vector<std::uint32_t> codes() const;

  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  // Orders by degree, then by coefficient codes from the top down.
  friend bool operator<(const Poly& a, const Poly& b);
};

Poly poly_const(const FieldPtr& f, Elem a);
Poly poly_x(const FieldPtr& f);
// x - a
Poly poly_linear(const FieldPtr& f, Elem a);

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(Elem k, const Poly& a);
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
Poly operator/(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly gcd(Poly a, Poly b);
Poly pow(const Poly& a, unsigned k);
Poly powmod(Poly a, std::uint64_t k, const Poly& m);
Poly derivative(const Poly& a);
Elem eval(const Poly& a, Elem x);

// Every coefficient lies in GF(q).
bool in_subfield(const Poly& a);

// Monic irreducible factorization with multiplicities, sorted canonically.
std::vector<std::pair<Poly, int>> factor(const Poly& f);
bool is_irreducible(const Poly& f);

}  // namespace gusvd
