#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace toporing {

/// Element of a finite field, encoded as the integer sum c_0 + c_1 p + ... + c_{d-1} p^{d-1}
/// where c_i are the coefficients of the polynomial representative in the defining modulus.
using Elem = std::uint32_t;

/**
 * A finite field F_q, q = p^d, as F_p[t]/(f) for a monic irreducible f of degree d.
 *
 * The object is a cheap handle onto shared immutable tables; copies compare equal iff the
 * characteristic and defining polynomial agree. Orders up to 2^16 are supported.
 */
class FiniteField {
 public:
  FiniteField();  // F_2

  static FiniteField prime(std::uint32_t p);
  /// `modulus` holds the coefficients of f from t^0 up to t^d; it must be monic and irreducible.
  static FiniteField extension(std::uint32_t p, std::vector<std::uint32_t> modulus);
  /// F_{p^d} with the lexicographically smallest monic irreducible modulus.
  static FiniteField of_order(std::uint32_t p, std::uint32_t d);

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return d_; }
  std::uint32_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(std::int64_t k) const;

  Elem add(Elem a, Elem b) const {
    if (d_ == 1) {
      const std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    if (p_ == 2) return a ^ b;
    return add_slow(a, b);
  }
  Elem neg(Elem a) const {
    if (d_ == 1) return a == 0 ? 0 : p_ - a;
    if (p_ == 2) return a;
    return neg_slow(a);
  }
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    if (d_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
    return mul_slow(a, b);
  }
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;

  /// Coordinates of `a` over the prime field (length d).
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  /// Matrix (d x d over F_p, row convention) of multiplication by `a` on F_p-coordinates.
  std::vector<std::uint32_t> prime_mult_matrix(Elem a) const;

  bool operator==(const FiniteField& other) const;
  bool operator!=(const FiniteField& other) const { return !(*this == other); }

  std::string describe() const;

 private:
  struct Tables;
  FiniteField(std::uint32_t p, std::uint32_t d, std::uint32_t q, std::shared_ptr<const Tables> tables);
  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;

  std::uint32_t p_ = 2;
  std::uint32_t d_ = 1;
  std::uint32_t q_ = 2;
  std::shared_ptr<const Tables> tables_;
};

bool is_prime(std::uint64_t n);

/// Irreducibility of a monic polynomial over the prime field F_p (coefficients low to high).
bool is_irreducible_over_prime(std::uint32_t p, const std::vector<std::uint32_t>& poly);

}  // namespace toporing
