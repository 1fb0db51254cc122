#include "toporing/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace toporing {

Poly::Poly(FiniteField field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
  trim();
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly Poly::from_roots(const FiniteField& f, const std::vector<Elem>& roots) {
  Poly r = constant(f, f.one());
  for (Elem root : roots) r = r * Poly(f, {f.neg(root), f.one()});
  return r;
}

Elem Poly::eval(Elem x) const {
  Elem acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
  return acc;
}

Poly Poly::monic() const {
  if (c_.empty()) return *this;
  const Elem inv = field_.inv(c_.back());
  std::vector<Elem> r(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) r[i] = field_.mul(c_[i], inv);
  return Poly(field_, std::move(r));
}

Poly Poly::derivative() const {
  if (c_.size() <= 1) return zero(field_);
  std::vector<Elem> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = field_.mul(c_[i], field_.from_int(static_cast<std::int64_t>(i)));
  return Poly(field_, std::move(r));
}

Poly operator+(const Poly& a, const Poly& b) {
  std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field_.add(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(r));
}

Poly operator-(const Poly& a, const Poly& b) {
  std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.field_.sub(a.coeff(i), b.coeff(i));
  return Poly(a.field_, std::move(r));
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.c_.empty() || b.c_.empty()) return Poly::zero(a.field_);
  const FiniteField& f = a.field_;
  std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a.c_[i], b.c_[j]));
  }
  return Poly(f, std::move(r));
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  const FiniteField& f = field_;
  std::vector<Elem> rem = c_;
  if (rem.size() < d.c_.size()) return {zero(f), *this};
  std::vector<Elem> quo(rem.size() - d.c_.size() + 1, 0);
  const Elem lead_inv = f.inv(d.c_.back());
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Elem c = f.mul(rem[k + d.c_.size() - 1], lead_inv);
    quo[k] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] = f.sub(rem[k + j], f.mul(c, d.c_[j]));
  }
  return {Poly(f, std::move(quo)), Poly(f, std::move(rem))};
}

Poly Poly::powmod(std::uint64_t e, const Poly& m) const {
  Poly result = constant(field_, field_.one()).mod(m);
  Poly base = mod(m);
  while (e > 0) {
    if (e & 1U) result = (result * base).mod(m);
    base = (base * base).mod(m);
    e >>= 1U;
  }
  return result;
}

std::string Poly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (c_[i] != 1 || i == 0) os << c_[i];
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const Poly& a, const Poly& b) {
  const FiniteField& f = a.field();
  Poly r0 = a, r1 = b;
  Poly s0 = Poly::constant(f, f.one()), s1 = Poly::zero(f);
  Poly t0 = Poly::zero(f), t1 = Poly::constant(f, f.one());
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const Elem inv = f.inv(r0.lead());
  const Poly c = Poly::constant(f, inv);
  return {r0 * c, s0 * c, t0 * c};
}

namespace {

Poly exact_div(const Poly& a, const Poly& b) {
  auto [q, r] = a.divmod(b);
  if (!r.is_zero()) throw std::logic_error("inexact polynomial division");
  return q;
}

// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const FiniteField& F = f.field();
  const std::uint32_t p = F.characteristic();
  const std::uint64_t root_exp = F.order() / p;  // a -> a^{q/p} inverts Frobenius
  std::vector<Elem> r;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) r.push_back(F.pow(f.coeffs()[i], root_exp));
  return Poly(F, std::move(r));
}

void squarefree(const Poly& f, int mult, std::vector<PolyFactor>& out) {
  const FiniteField& F = f.field();
  if (f.degree() <= 0) return;
  Poly c = gcd(f, f.derivative());
  Poly w = exact_div(f, c);
  int i = 1;
  while (w.degree() > 0) {
    Poly y = gcd(w, c);
    Poly fac = exact_div(w, y);
    if (fac.degree() > 0) out.push_back({fac.monic(), i * mult});
    w = y;
    c = exact_div(c, y);
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c.monic()), mult * static_cast<int>(F.characteristic()), out);
}

// a^q mod m
Poly frobenius(const Poly& a, std::uint64_t q, const Poly& m) { return a.powmod(q, m); }

void equal_degree(const Poly& g, int degree, Rng& rng, std::vector<Poly>& out) {
  if (g.degree() == degree) {
    out.push_back(g.monic());
    return;
  }
  const FiniteField& F = g.field();
  const std::uint64_t q = F.order();
  for (int attempt = 0; attempt < 4096; ++attempt) {
    std::vector<Elem> coeffs(static_cast<std::size_t>(g.degree()));
    for (auto& c : coeffs) c = static_cast<Elem>(rng.below(q));
    Poly a(F, std::move(coeffs));
    if (a.degree() <= 0) continue;
    Poly b;
    if (q % 2 == 1) {
      // a^{(q^degree - 1)/2} = (a^{1 + q + ... + q^{degree-1}})^{(q-1)/2}
      Poly norm = a.mod(g);
      Poly frob = norm;
      for (int k = 1; k < degree; ++k) {
        frob = frobenius(frob, q, g);
        norm = (norm * frob).mod(g);
      }
      b = norm.powmod((q - 1) / 2, g) - Poly::constant(F, F.one());
    } else {
      // absolute trace to F_2: sum of a^{2^j}, j < log2(q) * degree
      std::uint64_t k = 0;
      for (std::uint64_t t = q; t > 1; t >>= 1U) ++k;
      Poly term = a.mod(g);
      b = term;
      for (std::uint64_t j = 1; j < k * static_cast<std::uint64_t>(degree); ++j) {
        term = (term * term).mod(g);
        b = b + term;
      }
    }
    Poly d = gcd(g, b);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      equal_degree(d, degree, rng, out);
      equal_degree(exact_div(g, d), degree, rng, out);
      return;
    }
  }
  throw std::runtime_error("equal-degree factorisation did not split");
}

bool factor_less(const PolyFactor& a, const PolyFactor& b) {
  if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
  const auto& ca = a.factor.coeffs();
  const auto& cb = b.factor.coeffs();
  for (std::size_t i = ca.size(); i-- > 0;) {
    if (ca[i] != cb[i]) return ca[i] < cb[i];
  }
  return a.multiplicity < b.multiplicity;
}

}  // namespace

Factorization factor_poly(const Poly& f, std::uint64_t seed) {
  if (f.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  const FiniteField& F = f.field();
  Factorization result;
  result.field = F;
  result.unit = f.lead();
  const Poly m = f.monic();
  std::vector<PolyFactor> sqf;
  squarefree(m, 1, sqf);
  Rng rng(seed);
  const std::uint64_t q = F.order();
  for (const auto& [part, mult] : sqf) {
    Poly rest = part;
    Poly h = Poly::x(F).mod(rest);
    int degree = 1;
    while (rest.degree() >= 2 * degree) {
      h = frobenius(h, q, rest);
      Poly g = gcd(rest, h - Poly::x(F));
      if (g.degree() > 0) {
        std::vector<Poly> pieces;
        equal_degree(g, degree, rng, pieces);
        for (auto& piece : pieces) result.factors.push_back({std::move(piece), mult});
        rest = exact_div(rest, g);
        h = h.mod(rest);
      }
      ++degree;
    }
    if (rest.degree() > 0) result.factors.push_back({rest.monic(), mult});
  }
  // Merge equal factors arising from different square-free layers.
  std::sort(result.factors.begin(), result.factors.end(), factor_less);
  std::vector<PolyFactor> merged;
  for (auto& pf : result.factors) {
    if (!merged.empty() && merged.back().factor == pf.factor) {
      merged.back().multiplicity += pf.multiplicity;
    } else {
      merged.push_back(std::move(pf));
    }
  }
  result.factors = std::move(merged);
  return result;
}

bool is_irreducible(const Poly& f) {
  if (f.degree() < 1) return false;
  const FiniteField& F = f.field();
  const Poly m = f.monic();
  const int d = m.degree();
  const std::uint64_t q = F.order();
  auto frob_iter = [&](int k) {
    Poly h = Poly::x(F).mod(m);
    for (int i = 0; i < k; ++i) h = frobenius(h, q, m);
    return h;
  };
  if (!(frob_iter(d) - Poly::x(F)).mod(m).is_zero()) return false;
  for (int r = 2; r <= d; ++r) {
    if (d % r != 0 || !is_prime(static_cast<std::uint64_t>(r))) continue;
    if (gcd(m, frob_iter(d / r) - Poly::x(F)).degree() != 0) return false;
  }
  return true;
}

Poly expand(const Factorization& fac) {
  const FiniteField& F = fac.field;
  Poly r = Poly::constant(F, fac.unit);
  for (const auto& [factor, mult] : fac.factors) {
    for (int i = 0; i < mult; ++i) r = r * factor;
  }
  return r;
}

}  // namespace toporing
