#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "toporing/field.hpp"
#include "toporing/rng.hpp"

namespace toporing {

/// Dense univariate polynomial over a FiniteField, coefficients stored from x^0 upward and
/// kept trimmed (the zero polynomial has no coefficients).
class Poly {
 public:
  Poly() = default;
  Poly(FiniteField field, std::vector<Elem> coeffs);

  static Poly zero(const FiniteField& f) { return Poly(f, {}); }
  static Poly constant(const FiniteField& f, Elem c) { return Poly(f, {c}); }
  static Poly x(const FiniteField& f) { return Poly(f, {0, 1}); }
  /// Product of (x - r) over the given roots.
  static Poly from_roots(const FiniteField& f, const std::vector<Elem>& roots);

  const FiniteField& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  Elem eval(Elem x) const;

  Poly monic() const;
  Poly derivative() const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  /// Quotient and remainder; throws std::domain_error when dividing by zero.
  std::pair<Poly, Poly> divmod(const Poly& d) const;
  Poly mod(const Poly& m) const { return divmod(m).second; }
  Poly powmod(std::uint64_t e, const Poly& m) const;

  std::string to_string() const;

 private:
  void trim();
  FiniteField field_;
  std::vector<Elem> c_;
};

Poly gcd(Poly a, Poly b);

/// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct ExtendedGcd {
  Poly g, s, t;
};
ExtendedGcd extended_gcd(const Poly& a, const Poly& b);

struct PolyFactor {
  Poly factor;  // monic irreducible
  int multiplicity;
};

/**
 * Factorisation into monic irreducibles over the coefficient field: square-free decomposition,
 * distinct-degree splitting and Cantor-Zassenhaus equal-degree splitting. The leading coefficient
 * is returned separately. Throws std::invalid_argument for the zero polynomial.
 */
struct Factorization {
  FiniteField field;
  Elem unit = 1;
  std::vector<PolyFactor> factors;  // sorted by (degree, coefficients)
};
Factorization factor_poly(const Poly& f, std::uint64_t seed = 1);

/// Rabin's irreducibility test over the coefficient field.
bool is_irreducible(const Poly& f);

/// Multiplies the factorisation back out (unit included).
Poly expand(const Factorization& fac);

}  // namespace toporing
