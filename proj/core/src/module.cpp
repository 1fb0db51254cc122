#include "toporing/module.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "toporing/radical.hpp"

namespace toporing {

FiniteModule::FiniteModule(StructureAlgebra a, Side side, std::size_t dim, std::vector<Matrix> action)
    : algebra_(std::move(a)), side_(side), dim_(dim), action_(std::move(action)) {
  if (action_.size() != algebra_.dim()) throw std::invalid_argument("module needs one action matrix per basis element");
  for (const Matrix& x : action_) {
    if (x.rows() != dim_ || x.cols() != dim_) throw std::invalid_argument("action matrix has the wrong shape");
  }
}

Matrix FiniteModule::act_matrix(const Vec& a) const {
  Matrix out(field(), dim_, dim_);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != 0) out = out + action_[i].scaled(a[i]);
  }
  return out;
}

std::optional<std::string> validate_module(const FiniteModule& m) {
  const StructureAlgebra& a = m.algebra();
  if (!m.act_matrix(a.one()).is_identity()) return "unit does not act as the identity";
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) {
      const Matrix lhs = m.act_matrix(a.mul(a.basis(i), a.basis(j)));
      const Matrix rhs = m.side() == Side::Right ? m.action(i) * m.action(j) : m.action(j) * m.action(i);
      if (!(lhs == rhs)) {
        return "action is not compatible with the product on basis pair (" + std::to_string(i) + ", " +
               std::to_string(j) + ")";
      }
    }
  }
  return std::nullopt;
}

FiniteModule as_right(const FiniteModule& m) {
  if (m.side() == Side::Right) return m;
  return FiniteModule(opposite(m.algebra()), Side::Right, m.dim(), m.action());
}

FiniteModule regular_module(const StructureAlgebra& a) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a.dim(); ++i) act.push_back(a.right_basis(i));
  return FiniteModule(a, Side::Right, a.dim(), std::move(act));
}

FiniteModule left_regular_module(const StructureAlgebra& a) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a.dim(); ++i) act.push_back(a.left_basis(i));
  return FiniteModule(a, Side::Left, a.dim(), std::move(act));
}

FiniteModule cyclic_quotient(const StructureAlgebra& a, const Subspace& right_ideal) {
  return quotient_module(regular_module(a), right_ideal).module;
}

FiniteModule direct_sum(const std::vector<FiniteModule>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct sum of no modules");
  const StructureAlgebra& a = parts.front().algebra();
  std::size_t dim = 0;
  for (const auto& p : parts) dim += p.dim();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    Matrix x(a.field(), dim, dim);
    std::size_t off = 0;
    for (const auto& p : parts) {
      x.set_block(off, off, p.action(i));
      off += p.dim();
    }
    act.push_back(std::move(x));
  }
  return FiniteModule(a, parts.front().side(), dim, std::move(act));
}

FiniteModule restrict_scalars(const FiniteModule& m, const StructureAlgebra& b, const Matrix& hom) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < b.dim(); ++i) act.push_back(m.act_matrix(hom.row_vec(i)));
  return FiniteModule(b, m.side(), m.dim(), std::move(act));
}

Subspace cyclic_submodule(const FiniteModule& m, const Vec& v) {
  std::vector<Vec> gens;
  for (const Matrix& x : m.action()) gens.push_back(x.apply(v));
  return Subspace::span(m.field(), m.dim(), gens);
}

Subspace submodule_generated(const FiniteModule& m, const std::vector<Vec>& gens) {
  std::vector<Vec> all;
  for (const Vec& v : gens) {
    for (const Matrix& x : m.action()) all.push_back(x.apply(v));
  }
  return Subspace::span(m.field(), m.dim(), all);
}

bool is_submodule(const FiniteModule& m, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r) {
    for (const Matrix& x : m.action()) {
      if (!s.contains(x.apply(s.basis().row(r)))) return false;
    }
  }
  return true;
}

FiniteModule restrict_module(const FiniteModule& m, const Subspace& s) {
  std::vector<Matrix> act;
  for (const Matrix& x : m.action()) {
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < s.dim(); ++r) {
      auto c = s.coords(x.apply(s.basis().row(r)));
      if (!c) throw std::invalid_argument("subspace is not a submodule");
      rows.push_back(std::move(*c));
    }
    act.push_back(Matrix::from_rows(m.field(), s.dim(), rows));
  }
  return FiniteModule(m.algebra(), m.side(), s.dim(), std::move(act));
}

QuotientModule quotient_module(const FiniteModule& m, const Subspace& s) {
  if (!is_submodule(m, s)) throw std::invalid_argument("quotient by a non-submodule");
  const auto np = s.non_pivots();
  const std::size_t k = np.size();
  Matrix proj(m.field(), m.dim(), k);
  for (std::size_t c = 0; c < m.dim(); ++c) {
    const Vec r = s.reduce(unit_vec(m.dim(), c));
    for (std::size_t j = 0; j < k; ++j) proj(c, j) = r[np[j]];
  }
  std::vector<Matrix> act;
  for (const Matrix& x : m.action()) {
    Matrix y(m.field(), k, k);
    for (std::size_t i = 0; i < k; ++i) {
      const Vec img = proj.apply(x.row(np[i]));
      for (std::size_t j = 0; j < k; ++j) y(i, j) = img[j];
    }
    act.push_back(std::move(y));
  }
  return QuotientModule{FiniteModule(m.algebra(), m.side(), k, std::move(act)), std::move(proj), s};
}

Subspace radical_of_module(const FiniteModule& m0) {
  const FiniteModule m = as_right(m0);
  const Subspace h = radical(m.algebra()).space;
  std::vector<Vec> gens;
  for (std::size_t r = 0; r < h.dim(); ++r) {
    const Matrix x = m.act_matrix(h.basis().row_vec(r));
    for (std::size_t i = 0; i < m.dim(); ++i) gens.push_back(x.row_vec(i));
  }
  return Subspace::span(m.field(), m.dim(), gens);
}

QuotientModule top(const FiniteModule& m) { return quotient_module(m, radical_of_module(m)); }

std::size_t module_cardinality(const FiniteModule& m) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < m.dim(); ++i) {
    if (size > (std::size_t{1} << 62) / m.field().order()) return 0;
    size *= m.field().order();
  }
  return size;
}

std::vector<Vec> enumerate_subspace(const Subspace& s, std::size_t limit) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    count *= s.field().order();
    if (count > limit) throw std::invalid_argument("subspace too large to enumerate");
  }
  const std::uint32_t q = s.field().order();
  std::vector<Vec> out;
  out.reserve(count);
  for (std::size_t c = 0; c < count; ++c) {
    Vec v(s.ambient(), 0);
    std::size_t rest = c;
    for (std::size_t i = 0; i < s.dim(); ++i) {
      vec_axpy(s.field(), static_cast<Elem>(rest % q), s.basis().row(i), v);
      rest /= q;
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Subspace> maximal_submodules(const FiniteModule& m0) {
  const FiniteModule m = as_right(m0);
  const std::size_t size = module_cardinality(m);
  if (size == 0 || size > 1024) throw std::invalid_argument("module too large for maximal-submodule enumeration");
  const FiniteField& f = m.field();
  const std::size_t d = m.dim();
  // Functionals phi, normalised so the first nonzero coordinate is 1; core(ker phi) is the left
  // kernel of the matrix whose columns are Act_i phi^T.
  std::set<std::vector<Elem>> seen;
  std::vector<Subspace> cores;
  for (const Vec& phi : enumerate_subspace(Subspace::whole(f, d), 1024)) {
    std::size_t lead = 0;
    while (lead < d && phi[lead] == 0) ++lead;
    if (lead == d || phi[lead] != 1) continue;
    Matrix cols(f, d, m.algebra().dim());
    for (std::size_t i = 0; i < m.algebra().dim(); ++i) {
      for (std::size_t r = 0; r < d; ++r) {
        Elem s = 0;
        for (std::size_t c = 0; c < d; ++c) s = f.add(s, f.mul(m.action(i)(r, c), phi[c]));
        cols(r, i) = s;
      }
    }
    Subspace core = Subspace::of_rows(left_kernel(cols));
    if (seen.insert(core.basis().data()).second) cores.push_back(std::move(core));
  }
  std::vector<Subspace> maximal;
  for (const Subspace& c : cores) {
    bool is_max = true;
    for (const Subspace& other : cores) {
      if (other.dim() > c.dim() && c.is_subset_of(other)) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(c);
  }
  return maximal;
}

Subspace radical_by_maximals(const FiniteModule& m) {
  Subspace r = Subspace::whole(m.field(), m.dim());
  for (const Subspace& s : maximal_submodules(m)) r = r.intersect(s);
  return r;
}

namespace {

// Basis of {X : A_i X = X B_i for all i}, X of shape r x c.
std::vector<Matrix> intertwiners(const FiniteField& f, const std::vector<Matrix>& am, const std::vector<Matrix>& bm,
                                 std::size_t r, std::size_t c) {
  std::vector<Matrix> cur;
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) {
      Matrix e(f, r, c);
      e(i, j) = 1;
      cur.push_back(std::move(e));
    }
  }
  for (std::size_t g = 0; g < am.size() && !cur.empty(); ++g) {
    std::vector<Vec> defects;
    bool all_zero = true;
    for (const Matrix& x : cur) {
      Matrix d = am[g] * x - x * bm[g];
      all_zero = all_zero && d.is_zero();
      defects.push_back(d.flatten());
    }
    if (all_zero) continue;
    const Matrix ker = left_kernel(Matrix::from_rows(f, r * c, defects));
    std::vector<Matrix> next;
    for (std::size_t k = 0; k < ker.rows(); ++k) {
      Matrix x(f, r, c);
      for (std::size_t l = 0; l < cur.size(); ++l) {
        if (ker(k, l) != 0) x = x + cur[l].scaled(ker(k, l));
      }
      next.push_back(std::move(x));
    }
    cur = std::move(next);
  }
  // Canonical basis: echelon form of the flattened matrices.
  std::vector<Vec> flat;
  for (const Matrix& x : cur) flat.push_back(x.flatten());
  const Subspace s = Subspace::span(f, r * c, flat);
  std::vector<Matrix> out;
  for (std::size_t k = 0; k < s.dim(); ++k) out.push_back(Matrix::unflatten(f, r, c, s.basis().row_vec(k)));
  return out;
}

}  // namespace

std::vector<Matrix> hom_space(const FiniteModule& m0, const FiniteModule& n0) {
  const FiniteModule m = as_right(m0), n = as_right(n0);
  if (!(m.algebra() == n.algebra())) throw std::invalid_argument("hom between modules over different algebras");
  return intertwiners(m.field(), m.action(), n.action(), m.dim(), n.dim());
}

std::optional<Vec> EndoAlgebra::coords(const Matrix& f) const {
  std::vector<Vec> flat;
  for (const Matrix& b : basis) flat.push_back(b.flatten());
  const Subspace s = Subspace::span(algebra.field(), f.rows() * f.cols(), flat);
  return s.coords(f.flatten());
}

Matrix EndoAlgebra::matrix(const Vec& e) const { return module.act_matrix(e); }

EndoAlgebra endo_algebra(const FiniteModule& m0) {
  const FiniteModule m = as_right(m0);
  const FiniteField& f = m.field();
  std::vector<Matrix> basis = hom_space(m, m);
  const std::size_t k = basis.size();
  std::vector<Vec> flat;
  for (const Matrix& b : basis) flat.push_back(b.flatten());
  const Subspace s = Subspace::span(f, m.dim() * m.dim(), flat);
  std::vector<Elem> c(k * k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const auto co = s.coords((basis[i] * basis[j]).flatten());
      if (!co) throw std::logic_error("commutant is not closed under composition");
      std::copy(co->begin(), co->end(), c.begin() + static_cast<std::ptrdiff_t>((i * k + j) * k));
    }
  }
  const auto unit = s.coords(Matrix::identity(f, m.dim()).flatten());
  StructureAlgebra e = StructureAlgebra(f, k, std::move(c), *unit).with_representation(basis);
  FiniteModule over_e(e, Side::Right, m.dim(), basis);
  return EndoAlgebra{std::move(e), std::move(basis), std::move(over_e)};
}

Subspace annihilator(const FiniteModule& m0) {
  const FiniteModule m = as_right(m0);
  std::vector<Vec> cols;
  for (const Matrix& x : m.action()) cols.push_back(x.flatten());
  return Subspace::of_rows(left_kernel(Matrix::from_rows(m.field(), m.dim() * m.dim(), cols)));
}

FiniteModule random_module(const StructureAlgebra& a, Rng& rng, std::size_t max_dim) {
  if (max_dim == 0) throw std::invalid_argument("max_dim must be >= 1");
  for (;;) {
    const std::size_t k = 1 + rng.below(2);
    const FiniteModule free = direct_sum(std::vector<FiniteModule>(k, regular_module(a)));
    std::vector<Vec> gens;
    const std::size_t g = rng.below(3);
    for (std::size_t i = 0; i < g; ++i) {
      Vec v(free.dim());
      for (auto& x : v) x = static_cast<Elem>(rng.below(a.field().order()));
      gens.push_back(v);
    }
    const QuotientModule q = quotient_module(free, submodule_generated(free, gens));
    if (q.module.dim() > 0 && q.module.dim() <= max_dim) return q.module;
  }
}

}  // namespace toporing
