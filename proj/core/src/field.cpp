#include "toporing/field.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toporing {

namespace {

using PrimePoly = std::vector<std::uint32_t>;

void trim(PrimePoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1, r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

PrimePoly poly_mod(PrimePoly a, const PrimePoly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint32_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * m[i] % p) % p);
    }
    trim(a);
  }
  return a;
}

PrimePoly poly_mulmod(const PrimePoly& a, const PrimePoly& b, const PrimePoly& m, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PrimePoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    }
  }
  return poly_mod(r, m, p);
}

PrimePoly poly_gcd(PrimePoly a, PrimePoly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PrimePoly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t k = 2; k * k <= n; ++k) {
    if (n % k == 0) return false;
  }
  return true;
}

bool is_irreducible_over_prime(std::uint32_t p, const std::vector<std::uint32_t>& poly) {
  PrimePoly f = poly;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t d = f.size() - 1;
  // Rabin: x^{p^d} = x mod f and gcd(x^{p^{d/r}} - x, f) = 1 for every prime r | d.
  auto frob_power = [&](std::size_t k) {
    PrimePoly x_pk = poly_mod({0, 1}, f, p);
    for (std::size_t i = 0; i < k; ++i) {
      PrimePoly acc{1};
      PrimePoly base = x_pk;
      std::uint64_t e = p;
      while (e > 0) {
        if (e & 1U) acc = poly_mulmod(acc, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1U;
      }
      x_pk = acc;
    }
    return x_pk;
  };
  auto minus_x = [&](PrimePoly a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    trim(a);
    return a;
  };
  if (!minus_x(frob_power(d)).empty()) return false;
  for (std::size_t r = 2; r <= d; ++r) {
    if (d % r != 0 || !is_prime(r)) continue;
    const PrimePoly g = poly_gcd(minus_x(frob_power(d / r)), f, p);
    if (g.size() != 1) return false;
  }
  return true;
}

struct FiniteField::Tables {
  std::vector<std::uint32_t> modulus;
  std::vector<Elem> exp;           // exp[i] = g^i, length 2(q-1)
  std::vector<std::uint32_t> log;  // log[a] for a != 0
  std::vector<Elem> neg;
  std::vector<std::uint32_t> pow_p;  // p^i
};

FiniteField::FiniteField(std::uint32_t p, std::uint32_t d, std::uint32_t q, std::shared_ptr<const Tables> tables)
    : p_(p), d_(d), q_(q), tables_(std::move(tables)) {}

FiniteField::FiniteField() {
  static const FiniteField f2 = prime(2);
  *this = f2;
}

FiniteField FiniteField::prime(std::uint32_t p) {
  if (!is_prime(p) || p > 65521) throw std::invalid_argument("field characteristic must be a prime below 2^16");
  auto t = std::make_shared<Tables>();
  t->modulus = {0, 1};
  t->pow_p = {1};
  return FiniteField(p, 1, p, std::move(t));
}

FiniteField FiniteField::extension(std::uint32_t p, std::vector<std::uint32_t> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic must be prime");
  trim(modulus);
  if (modulus.size() < 2) throw std::invalid_argument("field modulus must have degree >= 1");
  for (auto c : modulus) {
    if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
  }
  if (modulus.back() != 1) throw std::invalid_argument("field modulus must be monic");
  const std::uint32_t d = static_cast<std::uint32_t>(modulus.size() - 1);
  if (d == 1) {
    if (modulus[0] != 0) throw std::invalid_argument("degree-one modulus must be t");
    return prime(p);
  }
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < d; ++i) {
    q *= p;
    if (q > 65536) throw std::invalid_argument("field order above 2^16 is not supported");
  }
  if (!is_irreducible_over_prime(p, modulus)) throw std::invalid_argument("field modulus is not irreducible");

  const auto order_q = static_cast<std::uint32_t>(q);
  auto t = std::make_shared<Tables>();
  t->modulus = modulus;
  t->pow_p.resize(d);
  t->pow_p[0] = 1;
  for (std::uint32_t i = 1; i < d; ++i) t->pow_p[i] = t->pow_p[i - 1] * p;

  auto to_poly = [&](Elem a) {
    PrimePoly r(d, 0);
    for (std::uint32_t i = 0; i < d; ++i) {
      r[i] = a % p;
      a /= p;
    }
    return r;
  };
  auto from_poly = [&](const PrimePoly& r) {
    Elem a = 0;
    for (std::size_t i = r.size(); i-- > 0;) a = a * p + r[i];
    return a;
  };
  t->neg.resize(order_q);
  for (Elem a = 0; a < order_q; ++a) {
    PrimePoly r = to_poly(a);
    for (auto& c : r) c = (p - c) % p;
    t->neg[a] = from_poly(r);
  }
  // Find a primitive element by brute force over candidates.
  const std::uint32_t order = order_q - 1;
  for (Elem g = 1; g < order_q; ++g) {
    std::vector<Elem> exp(order);
    PrimePoly cur{1};
    bool ok = true;
    for (std::uint32_t i = 0; i < order; ++i) {
      const Elem v = from_poly([&] {
        PrimePoly c = cur;
        c.resize(d, 0);
        return c;
      }());
      if (v == 1 && i > 0) {
        ok = false;
        break;
      }
      exp[i] = v;
      cur = poly_mulmod(cur, to_poly(g), modulus, p);
    }
    if (!ok) continue;
    t->exp.resize(2 * static_cast<std::size_t>(order));
    t->log.assign(order_q, 0);
    for (std::uint32_t i = 0; i < order; ++i) {
      t->exp[i] = exp[i];
      t->exp[i + order] = exp[i];
      t->log[exp[i]] = i;
    }
    return FiniteField(p, d, order_q, std::move(t));
  }
  throw std::logic_error("no primitive element found for an irreducible modulus");
}

FiniteField FiniteField::of_order(std::uint32_t p, std::uint32_t d) {
  if (d == 0) throw std::invalid_argument("field degree must be >= 1");
  if (d == 1) return prime(p);
  std::vector<std::uint32_t> poly(d + 1, 0);
  poly[d] = 1;
  // Enumerate the lower coefficients in lexicographic order of their integer encoding.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < d; ++i) count *= p;
  for (std::uint64_t code = 0; code < count; ++code) {
    std::uint64_t c = code;
    for (std::uint32_t i = 0; i < d; ++i) {
      poly[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    if (is_irreducible_over_prime(p, poly)) return extension(p, poly);
  }
  throw std::logic_error("no irreducible polynomial found");
}

const std::vector<std::uint32_t>& FiniteField::modulus() const { return tables_->modulus; }

Elem FiniteField::from_int(std::int64_t k) const {
  std::int64_t r = k % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

Elem FiniteField::add_slow(Elem a, Elem b) const {
  Elem r = 0;
  for (std::uint32_t i = 0; i < d_; ++i) {
    const std::uint32_t s = (a % p_ + b % p_) % p_;
    r += s * tables_->pow_p[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem FiniteField::neg_slow(Elem a) const { return tables_->neg[a]; }

Elem FiniteField::mul_slow(Elem a, Elem b) const {
  return tables_->exp[tables_->log[a] + tables_->log[b]];
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero in a finite field");
  if (d_ == 1) return inv_mod(a, p_);
  const std::uint32_t order = q_ - 1;
  return tables_->exp[(order - tables_->log[a]) % order];
}

Elem FiniteField::pow(Elem a, std::uint64_t e) const {
  Elem result = one();
  Elem base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

std::vector<std::uint32_t> FiniteField::digits(Elem a) const {
  std::vector<std::uint32_t> r(d_);
  for (std::uint32_t i = 0; i < d_; ++i) {
    r[i] = a % p_;
    a /= p_;
  }
  return r;
}

Elem FiniteField::from_digits(std::span<const std::uint32_t> digits) const {
  Elem a = 0;
  for (std::size_t i = digits.size(); i-- > 0;) a = a * p_ + digits[i] % p_;
  return a;
}

std::vector<std::uint32_t> FiniteField::prime_mult_matrix(Elem a) const {
  // Row i is the coordinate vector of t^i * a.
  std::vector<std::uint32_t> m(static_cast<std::size_t>(d_) * d_);
  for (std::uint32_t i = 0; i < d_; ++i) {
    const Elem basis = d_ == 1 ? 1 : tables_->pow_p[i];
    const auto row = digits(mul(basis, a));
    std::copy(row.begin(), row.end(), m.begin() + static_cast<std::ptrdiff_t>(i) * d_);
  }
  return m;
}

bool FiniteField::operator==(const FiniteField& other) const {
  return p_ == other.p_ && d_ == other.d_ && (d_ == 1 || tables_->modulus == other.tables_->modulus);
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "F_" << q_;
  if (d_ > 1) {
    os << " = F_" << p_ << "[t]/(";
    bool first = true;
    for (std::size_t i = tables_->modulus.size(); i-- > 0;) {
      const auto c = tables_->modulus[i];
      if (c == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (c != 1 || i == 0) os << c;
      if (i >= 1) os << "t";
      if (i >= 2) os << "^" << i;
    }
    os << ")";
  }
  return os.str();
}

}  // namespace toporing
