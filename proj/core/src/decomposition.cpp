#include "toporing/decomposition.hpp"

#include <stdexcept>

#include "toporing/lifting.hpp"
#include "toporing/radical.hpp"

namespace toporing {

AlgebraStructure analyze_algebra(const StructureAlgebra& a, std::uint64_t seed) {
  Subspace rad = radical(a).space;
  Quotient q = quotient(a, rad);
  WedderburnDatum w = wedderburn(q.algebra, seed);
  std::vector<Vec> lifted;
  for (const auto& c : w.components) lifted.push_back(q.lift(c.central_idempotent));
  return AlgebraStructure{std::move(rad), std::move(q), std::move(w), std::move(lifted)};
}

namespace {

Subspace times_space(const FiniteModule& m, const Subspace& s, const Subspace& ideal) {
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < ideal.dim(); ++r) {
    const Matrix x = m.act_matrix(ideal.basis().row_vec(r));
    for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(x.apply(s.basis().row(i)));
  }
  return Subspace::span(m.field(), m.dim(), gens);
}

}  // namespace

std::size_t composition_length(const FiniteModule& m0, const AlgebraStructure& s) {
  const FiniteModule m = as_right(m0);
  std::size_t length = 0;
  Subspace layer = Subspace::whole(m.field(), m.dim());
  while (layer.dim() > 0) {
    const Subspace below = times_space(m, layer, s.radical);
    for (std::size_t x = 0; x < s.wedderburn.components.size(); ++x) {
      const auto& comp = s.wedderburn.components[x];
      const Matrix e = m.act_matrix(s.lifted_central[x]);
      std::vector<Vec> gens = below.basis_vecs();
      for (std::size_t i = 0; i < layer.dim(); ++i) gens.push_back(e.apply(layer.basis().row(i)));
      const std::size_t part = Subspace::span(m.field(), m.dim(), gens).dim() - below.dim();
      const std::size_t simple_dim = comp.n * comp.degree;
      if (part % simple_dim != 0) throw std::logic_error("layer dimension is not a multiple of the simple dimension");
      length += part / simple_dim;
    }
    layer = below;
  }
  return length;
}

std::size_t composition_length(const FiniteModule& m, std::uint64_t seed) {
  const FiniteModule r = as_right(m);
  return composition_length(r, analyze_algebra(r.algebra(), seed));
}

std::size_t loewy_length(const FiniteModule& m0) {
  const FiniteModule m = as_right(m0);
  const Subspace h = radical(m.algebra()).space;
  std::size_t k = 0;
  Subspace layer = Subspace::whole(m.field(), m.dim());
  while (layer.dim() > 0) {
    layer = times_space(m, layer, h);
    ++k;
  }
  return k;
}

namespace {

// Semisimple quotient of End(M) is a field.
struct LocalInfo {
  bool local = false;
  std::uint64_t residue_order = 0;
};

LocalInfo local_info(const FiniteModule& m, std::uint64_t seed) {
  if (m.dim() == 0) return {};
  const EndoAlgebra e = endo_algebra(m);
  const AlgebraStructure s = analyze_algebra(e.algebra, seed);
  const auto& comps = s.wedderburn.components;
  if (comps.size() != 1 || comps[0].n != 1) return {};
  return {true, comps[0].residue_order};
}

Matrix compose(const Matrix& f, const Matrix& g) { return f * g; }

}  // namespace

bool has_local_endomorphisms(const FiniteModule& m, std::uint64_t seed) { return local_info(m, seed).local; }

std::optional<Matrix> indecomposable_isomorphism(const FiniteModule& m, const FiniteModule& n) {
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return Matrix(m.field(), 0, 0);
  const std::vector<Matrix> mn = hom_space(m, n), nm = hom_space(n, m);
  if (mn.empty() || nm.empty()) return std::nullopt;
  const EndoAlgebra e = endo_algebra(m);
  const Subspace rad = radical(e.algebra).space;
  for (const Matrix& f : mn) {
    for (const Matrix& g : nm) {
      const auto c = e.coords(compose(f, g));
      if (!c) throw std::logic_error("composite is not an endomorphism");
      if (!rad.contains(*c)) {
        if (!inverse(f)) throw std::logic_error("hom with unit composite is not invertible; endomorphisms not local");
        return f;
      }
    }
  }
  return std::nullopt;
}

std::vector<Matrix> radical_homs(const FiniteModule& m, const FiniteModule& n) {
  const std::vector<Matrix> mn = hom_space(m, n), nm = hom_space(n, m);
  if (mn.empty()) return {};
  const EndoAlgebra e = endo_algebra(m);
  const Subspace rad = radical(e.algebra).space;
  const auto np = rad.non_pivots();
  // f -> (class of f g_b mod rad) for every b; rad(M, N) is the common kernel.
  const FiniteField& f = m.field();
  Matrix cond(f, mn.size(), nm.size() * np.size());
  for (std::size_t a = 0; a < mn.size(); ++a) {
    for (std::size_t b = 0; b < nm.size(); ++b) {
      const auto c = e.coords(compose(mn[a], nm[b]));
      const Vec red = rad.reduce(*c);
      for (std::size_t k = 0; k < np.size(); ++k) cond(a, b * np.size() + k) = red[np[k]];
    }
  }
  const Matrix ker = left_kernel(cond);
  std::vector<Vec> flat;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Matrix x(f, m.dim(), n.dim());
    for (std::size_t a = 0; a < mn.size(); ++a) {
      if (ker(r, a) != 0) x = x + mn[a].scaled(ker(r, a));
    }
    flat.push_back(x.flatten());
  }
  const Subspace s = Subspace::span(f, m.dim() * n.dim(), flat);
  std::vector<Matrix> out;
  for (std::size_t r = 0; r < s.dim(); ++r) out.push_back(Matrix::unflatten(f, m.dim(), n.dim(), s.basis().row_vec(r)));
  return out;
}

DecompositionCertificate decompose_indecomposable(const FiniteModule& m0, std::uint64_t seed) {
  const FiniteModule m = as_right(m0);
  DecompositionCertificate cert;
  cert.ambient = m;
  cert.seed = seed;
  if (m.dim() == 0) return cert;
  const FiniteField& f = m.field();
  const EndoAlgebra e = endo_algebra(m);
  const AlgebraStructure s = analyze_algebra(e.algebra, seed);
  std::vector<Vec> family;
  for (const auto& comp : s.wedderburn.components) {
    for (std::size_t i = 0; i < comp.n; ++i) family.push_back(s.top.lift(comp.units[i * comp.n + i]));
  }
  const IdempotentFamily lifted = lift_orthogonal_family(e.algebra, family, s.radical);
  Rng rng(seed);
  for (const Vec& idem : lifted.elements) {
    Summand sm;
    sm.idempotent = e.matrix(idem);
    const Subspace image = Subspace::of_rows(sm.idempotent);
    sm.injection = image.basis();
    Matrix proj(f, m.dim(), image.dim());
    for (std::size_t c = 0; c < m.dim(); ++c) {
      const auto co = image.coords(sm.idempotent.row(c));
      for (std::size_t j = 0; j < image.dim(); ++j) proj(c, j) = (*co)[j];
    }
    sm.projection = std::move(proj);
    sm.module = restrict_module(m, image);
    const LocalInfo li = local_info(sm.module, rng.next());
    if (!li.local) throw std::logic_error("summand from a primitive idempotent is not local");
    sm.residue_order = li.residue_order;
    std::size_t cls = cert.classes.size();
    for (std::size_t k = 0; k < cert.classes.size(); ++k) {
      const Summand& rep = cert.summands[cert.classes[k].front()];
      if (auto iso = indecomposable_isomorphism(rep.module, sm.module)) {
        cls = k;
        sm.class_iso = std::move(*iso);
        break;
      }
    }
    if (cls == cert.classes.size()) {
      cert.classes.emplace_back();
      sm.class_iso = Matrix::identity(f, sm.module.dim());
    }
    sm.iso_class = cls;
    cert.classes[cls].push_back(cert.summands.size());
    cert.summands.push_back(std::move(sm));
  }
  if (auto err = verify_decomposition(cert)) throw std::logic_error("decomposition self-check failed: " + *err);
  return cert;
}

std::optional<std::string> verify_decomposition(const DecompositionCertificate& c) {
  const FiniteModule& m = c.ambient;
  const FiniteField& f = m.field();
  Matrix total(f, m.dim(), m.dim());
  for (std::size_t i = 0; i < c.summands.size(); ++i) {
    const Summand& s = c.summands[i];
    if (!(s.injection * s.projection).is_identity()) return "injection then projection is not the identity";
    if (!(s.projection * s.injection == s.idempotent)) return "projection then injection differs from the idempotent";
    if (!(s.idempotent * s.idempotent == s.idempotent)) return "summand idempotent is not idempotent";
    for (std::size_t g = 0; g < m.algebra().dim(); ++g) {
      if (!(m.action(g) * s.idempotent == s.idempotent * m.action(g))) return "summand idempotent is not A-linear";
      if (!(s.injection * m.action(g) == s.module.action(g) * s.injection)) return "injection is not A-linear";
    }
    for (std::size_t j = 0; j < c.summands.size(); ++j) {
      if (j != i && !(s.idempotent * c.summands[j].idempotent).is_zero()) return "summand idempotents not orthogonal";
    }
    total = total + s.idempotent;
    const Summand& rep = c.summands[c.classes[s.iso_class].front()];
    if (!inverse(s.class_iso)) return "class isomorphism is not invertible";
    for (std::size_t g = 0; g < m.algebra().dim(); ++g) {
      if (!(rep.module.action(g) * s.class_iso == s.class_iso * s.module.action(g))) return "class isomorphism is not A-linear";
    }
  }
  if (!total.is_identity() && m.dim() > 0) return "summand idempotents do not sum to the identity";
  // Summands in different classes must be non-isomorphic.
  for (std::size_t k = 0; k < c.classes.size(); ++k) {
    for (std::size_t l = k + 1; l < c.classes.size(); ++l) {
      if (indecomposable_isomorphism(c.summands[c.classes[k].front()].module, c.summands[c.classes[l].front()].module)) {
        return "two isomorphism classes contain isomorphic summands";
      }
    }
  }
  return std::nullopt;
}

std::optional<Matrix> find_isomorphism(const FiniteModule& m, const FiniteModule& n, std::uint64_t seed) {
  if (m.dim() != n.dim()) return std::nullopt;
  if (m.dim() == 0) return Matrix(m.field(), 0, 0);
  const std::vector<Matrix> hom = hom_space(m, n);
  if (hom.empty()) return std::nullopt;
  const FiniteField& f = m.field();
  Rng rng(seed);
  auto combo = [&](const std::vector<Elem>& c) {
    Matrix x(f, m.dim(), n.dim());
    for (std::size_t i = 0; i < hom.size(); ++i) {
      if (c[i] != 0) x = x + hom[i].scaled(c[i]);
    }
    return x;
  };
  for (int t = 0; t < 64; ++t) {
    std::vector<Elem> c(hom.size());
    for (auto& x : c) x = static_cast<Elem>(rng.below(f.order()));
    Matrix x = combo(c);
    if (inverse(x)) return x;
  }
  std::size_t size = 1;
  for (std::size_t i = 0; i < hom.size() && size <= 4096; ++i) size *= f.order();
  if (size <= 4096) {
    for (std::size_t idx = 0; idx < size; ++idx) {
      std::vector<Elem> c(hom.size());
      std::size_t rest = idx;
      for (auto& x : c) {
        x = static_cast<Elem>(rest % f.order());
        rest /= f.order();
      }
      Matrix x = combo(c);
      if (inverse(x)) return x;
    }
    return std::nullopt;
  }
  const DecompositionCertificate dm = decompose_indecomposable(m, rng.next());
  const DecompositionCertificate dn = decompose_indecomposable(n, rng.next());
  if (dm.summands.size() != dn.summands.size()) return std::nullopt;
  std::vector<bool> used(dn.summands.size(), false);
  Matrix total(f, m.dim(), n.dim());
  for (const Summand& s : dm.summands) {
    bool matched = false;
    for (std::size_t j = 0; j < dn.summands.size() && !matched; ++j) {
      if (used[j]) continue;
      if (auto iso = indecomposable_isomorphism(s.module, dn.summands[j].module)) {
        used[j] = true;
        matched = true;
        total = total + s.projection * (*iso) * dn.summands[j].injection;
      }
    }
    if (!matched) return std::nullopt;
  }
  if (!inverse(total)) throw std::logic_error("assembled isomorphism is singular");
  return total;
}

}  // namespace toporing
