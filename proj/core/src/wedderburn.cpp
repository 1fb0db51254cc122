#include "toporing/wedderburn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "toporing/constructions.hpp"
#include "toporing/radical.hpp"

namespace toporing {

Vec eval_poly(const StructureAlgebra& a, const Poly& g, const Vec& x, const Vec& unit) {
  Vec acc(a.dim(), 0);
  for (std::size_t i = g.coeffs().size(); i-- > 0;) {
    acc = a.mul(acc, x);
    vec_axpy(a.field(), g.coeffs()[i], unit, acc);
  }
  return acc;
}

Poly minimal_polynomial(const StructureAlgebra& a, const Vec& x, const Vec& unit) {
  const FiniteField& f = a.field();
  const std::vector<Elem> c = minimal_polynomial_coeffs(a, x, unit);
  std::vector<Elem> coeffs(c.size() + 1);
  for (std::size_t i = 0; i < c.size(); ++i) coeffs[i] = f.neg(c[i]);
  coeffs.back() = 1;
  return Poly(f, coeffs);
}

std::vector<Vec> primary_idempotents(const StructureAlgebra& a, const Vec& x, const Vec& unit, std::uint64_t seed) {
  const Poly m = minimal_polynomial(a, x, unit);
  const Factorization fac = factor_poly(m, seed);
  std::vector<Vec> out;
  if (fac.factors.size() <= 1) {
    out.push_back(unit);
    return out;
  }
  const FiniteField& f = a.field();
  for (const PolyFactor& pf : fac.factors) {
    Poly primary = Poly::constant(f, 1);
    for (int k = 0; k < pf.multiplicity; ++k) primary = primary * pf.factor;
    const Poly cofactor = m.divmod(primary).first;
    // t * cofactor = 1 mod primary
    const ExtendedGcd eg = extended_gcd(cofactor, primary);
    if (eg.g.degree() != 0) throw std::logic_error("primary factors are not coprime");
    const Poly eps = (eg.s * cofactor).mod(m);
    out.push_back(eval_poly(a, eps, x, unit));
  }
  return out;
}

Vec random_in(const Subspace& s, Rng& rng) {
  Vec v(s.ambient(), 0);
  for (std::size_t i = 0; i < s.dim(); ++i) {
    vec_axpy(s.field(), static_cast<Elem>(rng.below(s.field().order())), s.basis().row(i), v);
  }
  return v;
}

Subspace sandwich(const StructureAlgebra& a, const Vec& x, const Vec& y) {
  std::vector<Vec> gens;
  gens.reserve(a.dim());
  for (std::size_t k = 0; k < a.dim(); ++k) gens.push_back(a.mul(a.mul(x, a.basis(k)), y));
  return Subspace::span(a.field(), a.dim(), gens);
}

namespace {

constexpr int kMaxAttempts = 400;

Subspace multiply_space(const StructureAlgebra& a, const Vec& e, const Subspace& s) {
  std::vector<Vec> gens;
  for (const Vec& v : s.basis_vecs()) gens.push_back(a.mul(e, v));
  return Subspace::span(a.field(), a.dim(), gens);
}

// Splits every idempotent in `idems` until is_primitive holds, using random elements drawn by
// `draw(e)` from the corner of e.
template <class Draw, class Primitive>
std::vector<Vec> refine(const StructureAlgebra& a, std::vector<Vec> idems, Rng& rng, Draw draw, Primitive is_primitive) {
  std::vector<Vec> done;
  int attempts = 0;
  while (!idems.empty()) {
    Vec e = std::move(idems.back());
    idems.pop_back();
    if (is_primitive(e)) {
      done.push_back(std::move(e));
      continue;
    }
    if (++attempts > kMaxAttempts) throw std::runtime_error("idempotent splitting exhausted its retries");
    const Vec x = draw(e);
    std::vector<Vec> parts = primary_idempotents(a, x, e, rng.next());
    if (parts.size() == 1) {
      idems.push_back(std::move(e));
      continue;
    }
    for (auto& p : parts) idems.push_back(std::move(p));
  }
  std::sort(done.begin(), done.end());
  return done;
}

}  // namespace

WedderburnDatum wedderburn(const StructureAlgebra& a, std::uint64_t seed) {
  if (radical(a).space.dim() != 0) throw std::invalid_argument("wedderburn requires a semisimple algebra");
  const FiniteField& f = a.field();
  const std::uint32_t q = f.order();
  Rng rng(seed);

  // Berlekamp subalgebra B = {z in Z : z^q = z}; dim B = number of simple components.
  const Subspace z = center(a);
  const std::vector<Vec> zb = z.basis_vecs();
  std::vector<Vec> frob;
  for (const Vec& v : zb) frob.push_back(a.sub(a.pow(v, q), v));
  const Matrix ker = left_kernel(Matrix::from_rows(f, a.dim(), frob));
  std::vector<Vec> bgens;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vec v(a.dim(), 0);
    for (std::size_t l = 0; l < zb.size(); ++l) vec_axpy(f, ker(r, l), zb[l], v);
    bgens.push_back(std::move(v));
  }
  const Subspace b = Subspace::span(f, a.dim(), bgens);

  const std::vector<Vec> central = refine(
      a, {a.one()}, rng, [&](const Vec& e) { return a.mul(e, random_in(b, rng)); },
      [&](const Vec& e) { return multiply_space(a, e, b).dim() == 1; });
  if (central.size() != b.dim()) throw std::logic_error("central idempotent count differs from dim B");

  WedderburnDatum out;
  out.algebra = a;
  out.seed = seed;
  for (const Vec& e : central) {
    WedderburnComponent comp;
    comp.central_idempotent = e;
    const Subspace ze = multiply_space(a, e, z);
    comp.degree = static_cast<std::uint32_t>(ze.dim());
    comp.residue_order = 1;
    for (std::uint32_t i = 0; i < comp.degree; ++i) comp.residue_order *= q;
    const std::size_t cdim = sandwich(a, e, e).dim();
    comp.n = static_cast<std::size_t>(std::lround(std::sqrt(static_cast<double>(cdim / comp.degree))));
    if (comp.n * comp.n * comp.degree != cdim) throw std::logic_error("component dimension is not n^2 d");

    for (int attempt = 0;; ++attempt) {
      if (attempt > kMaxAttempts) throw std::runtime_error("no generator of the component center found");
      const Vec theta = random_in(ze, rng);
      const Poly g = minimal_polynomial(a, theta, e);
      if (static_cast<std::uint32_t>(g.degree()) == comp.degree) {
        comp.theta = theta;
        comp.theta_minpoly = g;
        break;
      }
    }

    const std::vector<Vec> prim = refine(
        a, {e}, rng, [&](const Vec& fi) { return random_in(sandwich(a, fi, fi), rng); },
        [&](const Vec& fi) { return sandwich(a, fi, fi).dim() == comp.degree; });
    if (prim.size() != comp.n) throw std::logic_error("primitive idempotent count differs from n");

    const std::size_t n = comp.n;
    std::vector<Vec> col(n), row(n);  // E_i1 and E_1i
    col[0] = row[0] = prim[0];
    for (std::size_t i = 1; i < n; ++i) {
      const Subspace s_i1 = sandwich(a, prim[i], prim[0]);
      const Vec x = s_i1.basis().row_vec(0);
      const Subspace s_1i = sandwich(a, prim[0], prim[i]);
      // Solve y x = E_11 for y in e_1 A e_i.
      std::vector<Vec> prods;
      for (const Vec& y : s_1i.basis_vecs()) prods.push_back(a.mul(y, x));
      const Matrix lhs = Matrix::from_rows(f, a.dim(), prods).transpose();
      Matrix rhs(f, a.dim(), 1);
      for (std::size_t r = 0; r < a.dim(); ++r) rhs(r, 0) = prim[0][r];
      const SolveResult sol = rref_solve(lhs, rhs);
      if (sol.inconsistent[0]) throw std::logic_error("no matrix unit E_1i solves E_1i E_i1 = E_11");
      Vec y(a.dim(), 0);
      for (std::size_t l = 0; l < s_1i.dim(); ++l) vec_axpy(f, (*sol.solutions[0])[l], s_1i.basis().row(l), y);
      col[i] = x;
      row[i] = std::move(y);
    }
    comp.units.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) comp.units[i * n + j] = a.mul(col[i], row[j]);
    }
    out.components.push_back(std::move(comp));
  }
  std::sort(out.components.begin(), out.components.end(), [](const auto& x, const auto& y) {
    if (x.residue_order != y.residue_order) return x.residue_order < y.residue_order;
    if (x.n != y.n) return x.n < y.n;
    return x.central_idempotent < y.central_idempotent;
  });

  // Model algebra and the basis map theta^s E_ij.
  std::vector<StructureAlgebra> blocks;
  std::vector<Vec> images;
  for (const auto& comp : out.components) {
    blocks.push_back(matrix_ring(quotient_polynomial(comp.theta_minpoly), comp.n));
    std::vector<Vec> tpow{comp.central_idempotent};
    for (std::uint32_t s = 1; s < comp.degree; ++s) tpow.push_back(a.mul(tpow.back(), comp.theta));
    for (const Vec& u : comp.units) {
      for (const Vec& t : tpow) images.push_back(a.mul(t, u));
    }
  }
  out.model = product(blocks);
  out.iso = Matrix::from_rows(f, a.dim(), images);
  if (auto err = verify_wedderburn(out)) throw std::logic_error("wedderburn self-check failed: " + *err);
  return out;
}

FactorMultiset factor_multiset(const WedderburnDatum& w) {
  FactorMultiset out;
  for (const auto& c : w.components) out.emplace_back(c.residue_order, c.n);
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> verify_wedderburn(const WedderburnDatum& w) {
  const StructureAlgebra& a = w.algebra;
  Vec total(a.dim(), 0);
  for (std::size_t x = 0; x < w.components.size(); ++x) {
    const auto& c = w.components[x];
    const Vec& e = c.central_idempotent;
    if (a.mul(e, e) != e) return "central idempotent is not idempotent";
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (a.mul(e, a.basis(i)) != a.mul(a.basis(i), e)) return "component idempotent is not central";
    }
    for (std::size_t y = 0; y < w.components.size(); ++y) {
      if (y != x && !vec_is_zero(a.mul(e, w.components[y].central_idempotent))) return "central idempotents not orthogonal";
    }
    total = a.add(total, e);
    const std::size_t n = c.n;
    Vec diag(a.dim(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      diag = a.add(diag, c.units[i * n + i]);
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          for (std::size_t l = 0; l < n; ++l) {
            const Vec prod = a.mul(c.units[i * n + j], c.units[k * n + l]);
            const Vec expect = j == k ? c.units[i * n + l] : a.zero();
            if (prod != expect) return "matrix unit identity fails";
          }
        }
      }
    }
    if (diag != e) return "diagonal matrix units do not sum to the component idempotent";
    if (sandwich(a, e, e).dim() != n * n * c.degree) return "component dimension differs from n^2 d";
  }
  if (total != a.one()) return "central idempotents do not sum to 1";
  if (rank(w.iso) != a.dim()) return "reassembly map is not bijective";
  if (auto err = check_homomorphism(AlgebraMap{w.model, a, w.iso})) return "reassembly map: " + *err;
  return std::nullopt;
}

}  // namespace toporing
