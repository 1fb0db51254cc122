#include "toporing/matrix_topology.hpp"

#include <algorithm>
#include <stdexcept>

#include "toporing/constructions.hpp"
#include "toporing/wedderburn.hpp"

namespace toporing {

MatrixBase discrete_base(const StructureAlgebra& r) { return std::make_shared<const RingTower>(constant_tower(r, 1)); }
MatrixBase tower_base(RingTower t) { return std::make_shared<const RingTower>(std::move(t)); }

namespace {

void check_shape(const MatrixBase& base, IndexSet y, std::size_t window) {
  if (!base) throw std::invalid_argument("matrix has no base ring");
  if (!y.omega && window != y.size) throw std::invalid_argument("a finite index set needs the window to equal |Y|");
}

// Image of r in level n of the base.
bool vanishes_at(const RingTower& t, const Vec& r, std::size_t n) { return vec_is_zero(t.project(r, t.depth() - 1, n)); }

Subspace level_kernel(const RingTower& t, std::size_t n) {
  return Subspace::of_rows(left_kernel(t.projection(t.depth() - 1, n)));
}

// Same tower up to its name, so bases read from separate files are compatible.
bool same_base(const MatrixBase& a, const MatrixBase& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->levels == b->levels && a->transitions == b->transitions && a->intent == b->intent;
}

void require_compatible(const WindowedMatrix& a, const WindowedMatrix& b) {
  if (!same_base(a.base, b.base)) throw std::invalid_argument("matrices have different base rings");
  if (!(a.index == b.index)) throw std::invalid_argument("matrices have different index sets");
}

}  // namespace

WindowedMatrix windowed_zero(const MatrixBase& base, IndexSet y, std::size_t window) {
  check_shape(base, y, window);
  WindowedMatrix m;
  m.base = base;
  m.index = y;
  m.window = window;
  m.entries.assign(window * window, Vec(base->levels.back().dim(), 0));
  m.bounds.assign(window, std::vector<std::size_t>(base->depth(), 0));
  m.known.assign(window, true);
  return m;
}

WindowedMatrix windowed_identity(const MatrixBase& base, IndexSet y, std::size_t window) {
  WindowedMatrix m = windowed_zero(base, y, window);
  for (std::size_t x = 0; x < window; ++x) {
    m.at(x, x) = m.ring().one();
    std::fill(m.bounds[x].begin(), m.bounds[x].end(), x + 1);
  }
  return m;
}

WindowedMatrix elementary(const MatrixBase& base, IndexSet y, std::size_t window, std::size_t i, std::size_t j, const Vec& r) {
  WindowedMatrix m = windowed_zero(base, y, window);
  if (i >= window || j >= window) throw std::invalid_argument("elementary matrix position outside the window");
  m.at(i, j) = r;
  for (std::size_t n = 0; n < base->depth(); ++n) m.bounds[i][n] = vanishes_at(*base, r, n) ? 0 : j + 1;
  return m;
}

WindowedMatrix shift_matrix(const MatrixBase& base, std::size_t window, bool transpose) {
  WindowedMatrix m = windowed_zero(base, IndexSet::countable(), window);
  for (std::size_t x = 0; x < window; ++x) {
    if (!transpose) {
      if (x + 1 < window) m.at(x, x + 1) = m.ring().one();
      std::fill(m.bounds[x].begin(), m.bounds[x].end(), x + 2);
    } else if (x > 0) {
      m.at(x, x - 1) = m.ring().one();
      std::fill(m.bounds[x].begin(), m.bounds[x].end(), x);
    }
  }
  return m;
}

void certify_from_window(WindowedMatrix& m) {
  for (std::size_t x = 0; x < m.window; ++x) {
    for (std::size_t n = 0; n < m.base->depth(); ++n) {
      std::size_t b = 0;
      for (std::size_t c = 0; c < m.window; ++c) {
        if (!vanishes_at(*m.base, m.at(x, c), n)) b = c + 1;
      }
      m.bounds[x][n] = b;
    }
    m.known[x] = true;
  }
}

std::optional<std::string> validate_windowed(const WindowedMatrix& m) {
  if (!m.base) return "missing base ring";
  if (!m.index.omega && m.window != m.index.size) return "finite index set with a window different from |Y|";
  if (m.entries.size() != m.window * m.window || m.bounds.size() != m.window || m.known.size() != m.window) {
    return "window data has the wrong size";
  }
  const std::size_t levels = m.base->depth();
  for (std::size_t x = 0; x < m.window; ++x) {
    const std::string row = "row " + std::to_string(x);
    if (m.bounds[x].size() != levels) return row + ": one bound per level expected";
    for (std::size_t c = 0; c < m.window; ++c) {
      if (m.at(x, c).size() != m.ring().dim()) return row + ": entry of the wrong dimension";
    }
    if (!m.known[x]) continue;
    for (std::size_t n = 0; n < levels; ++n) {
      const std::size_t b = m.bounds[x][n];
      if (n + 1 < levels && b != kUncertified && m.bounds[x][n + 1] != kUncertified && b > m.bounds[x][n + 1]) {
        return row + ": bounds decrease with the level";
      }
      if (!m.index.omega && b != kUncertified && b > m.window) return row + ": bound beyond a finite index set";
      if (b == kUncertified) continue;
      for (std::size_t c = b; c < m.window; ++c) {
        if (!vanishes_at(*m.base, m.at(x, c), n)) {
          return row + ": entry in column " + std::to_string(c) + " does not vanish at level " + std::to_string(n);
        }
      }
    }
  }
  return std::nullopt;
}

WindowedMatrix random_windowed(const MatrixBase& base, IndexSet y, std::size_t window, Rng& rng, bool tails) {
  WindowedMatrix m = windowed_zero(base, y, window);
  const std::size_t top = base->depth() - 1;
  std::vector<Subspace> kernels;
  for (std::size_t n = 0; n <= top; ++n) kernels.push_back(level_kernel(*base, n));
  const bool with_tails = tails && y.omega;
  for (std::size_t x = 0; x < window; ++x) {
    std::vector<std::size_t> b(top + 1);
    b[top] = rng.below(window + 1 + (with_tails ? 2 : 0));
    for (std::size_t n = top; n-- > 0;) b[n] = rng.below(b[n + 1] + 1);
    if (!with_tails && b[top] > window) b[top] = window;
    for (std::size_t c = 0; c < window; ++c) {
      // vanish at every level n with b[n] <= c, i.e. lie in the kernel of the largest such level
      std::optional<std::size_t> deepest;
      for (std::size_t n = 0; n <= top; ++n) {
        if (b[n] <= c) deepest = n;
      }
      if (!deepest) {
        m.at(x, c) = random_element(m.ring(), rng);
      } else {
        m.at(x, c) = random_in(kernels[*deepest], rng);
      }
    }
    m.bounds[x] = b;
  }
  return m;
}

WindowedMatrix mat_mul(const WindowedMatrix& a, const WindowedMatrix& b) {
  require_compatible(a, b);
  const std::size_t w = std::min(a.window, b.window);
  WindowedMatrix out = windowed_zero(a.base, a.index, w);
  const RingTower& t = *a.base;
  const StructureAlgebra& r = a.ring();
  const std::size_t top = t.depth() - 1;
  for (std::size_t x = 0; x < w; ++x) {
    const std::size_t support = a.bounds[x][top];
    bool ok = a.known[x] && support <= std::min(a.window, b.window);
    for (std::size_t y = 0; ok && y < support; ++y) ok = b.known[y];
    if (!ok) {
      out.known[x] = false;
      std::fill(out.bounds[x].begin(), out.bounds[x].end(), kUncertified);
      continue;
    }
    for (std::size_t z = 0; z < w; ++z) {
      Vec s = r.zero();
      for (std::size_t y = 0; y < support; ++y) s = r.add(s, r.mul(a.at(x, y), b.at(y, z)));
      out.at(x, z) = std::move(s);
    }
    for (std::size_t n = 0; n <= top; ++n) {
      // terms with a_xy vanishing at level n vanish there (two-sided kernels)
      std::size_t bound = 0;
      for (std::size_t y = 0; y < std::min(a.bounds[x][n], support); ++y) {
        if (vanishes_at(t, a.at(x, y), n)) continue;
        bound = b.bounds[y][n] == kUncertified ? kUncertified : std::max(bound, b.bounds[y][n]);
        if (bound == kUncertified) break;
      }
      out.bounds[x][n] = bound;
    }
  }
  return out;
}

WindowedMatrix mat_add(const WindowedMatrix& a, const WindowedMatrix& b) {
  require_compatible(a, b);
  const std::size_t w = std::min(a.window, b.window);
  WindowedMatrix out = windowed_zero(a.base, a.index, w);
  for (std::size_t x = 0; x < w; ++x) {
    out.known[x] = a.known[x] && b.known[x];
    for (std::size_t n = 0; n < a.base->depth(); ++n) {
      const std::size_t p = a.bounds[x][n], q = b.bounds[x][n];
      out.bounds[x][n] = out.known[x] ? std::max(p, q) : kUncertified;
    }
    for (std::size_t z = 0; z < w && out.known[x]; ++z) out.at(x, z) = a.ring().add(a.at(x, z), b.at(x, z));
  }
  return out;
}

WindowedMatrix crop(const WindowedMatrix& m, std::size_t window) {
  if (window > m.window) throw std::invalid_argument("crop cannot enlarge a window");
  if (!m.index.omega && window != m.window) throw std::invalid_argument("cannot crop a finite index set");
  WindowedMatrix out = windowed_zero(m.base, m.index, window);
  for (std::size_t x = 0; x < window; ++x) {
    out.known[x] = m.known[x];
    out.bounds[x] = m.bounds[x];
    for (std::size_t z = 0; z < window; ++z) out.at(x, z) = m.at(x, z);
  }
  return out;
}

bool certified_equal(const WindowedMatrix& a, const WindowedMatrix& b, std::size_t* compared) {
  const std::size_t w = std::min(a.window, b.window);
  std::size_t rows = 0;
  bool eq = true;
  for (std::size_t x = 0; x < w; ++x) {
    if (!a.known[x] || !b.known[x]) continue;
    ++rows;
    for (std::size_t z = 0; z < w; ++z) eq = eq && a.at(x, z) == b.at(x, z);
  }
  if (compared != nullptr) *compared = rows;
  return eq;
}

std::string to_string(Membership m) {
  switch (m) {
    case Membership::In: return "IN";
    case Membership::Out: return "OUT";
    case Membership::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

Membership ideal_member(const WindowedMatrix& a, const OpenMatrixIdeal& k) {
  const RingTower& t = *a.base;
  const std::size_t top = t.depth() - 1;
  if (!is_right_ideal(a.ring(), k.ideal)) throw std::invalid_argument("K needs a right ideal of the base ring");
  bool undecided = false;
  for (std::size_t x : k.rows) {
    if (x >= a.window || !a.known[x]) {
      undecided = true;
      continue;
    }
    for (std::size_t c = 0; c < a.window; ++c) {
      if (!k.ideal.contains(a.at(x, c))) return Membership::Out;
    }
    bool tail_ok = a.bounds[x][top] <= a.window;
    for (std::size_t n = 0; n < top && !tail_ok; ++n) {
      tail_ok = a.bounds[x][n] <= a.window && level_kernel(t, n).is_subset_of(k.ideal);
    }
    undecided = undecided || !tail_ok;
  }
  return undecided ? Membership::Undecided : Membership::In;
}

std::optional<std::string> validate_family(const ZeroConvergentFamily& f) {
  WindowedMatrix m = windowed_zero(f.base, f.index, f.window);
  if (f.coefficients.size() != f.window) return "coefficient count differs from the window";
  if (f.window == 0) return std::nullopt;
  for (std::size_t c = 0; c < f.window; ++c) m.at(0, c) = f.coefficients[c];
  m.bounds[0] = f.bounds;
  return validate_windowed(m);
}

ZeroConvergentFamily row_family(const WindowedMatrix& a, std::size_t x) {
  if (x >= a.window || !a.known[x]) throw std::invalid_argument("row is outside the certified region");
  ZeroConvergentFamily f{a.base, a.index, a.window, {}, a.bounds[x]};
  for (std::size_t c = 0; c < a.window; ++c) f.coefficients.push_back(a.at(x, c));
  return f;
}

CornerReport free_contra_corner(const MatrixBase& base, IndexSet y, std::size_t window, std::size_t x,
                                std::size_t samples, std::uint64_t seed) {
  check_shape(base, y, window);
  if (x >= window) throw std::invalid_argument("corner index outside the window");
  const StructureAlgebra& r = base->levels.back();
  Rng rng(seed);
  CornerReport rep;
  rep.samples = samples;
  const WindowedMatrix exx = elementary(base, y, window, x, x, r.one());
  rep.rows_match = rep.ring_iso = rep.action_match = true;
  for (std::size_t s = 0; s < samples; ++s) {
    const WindowedMatrix a = random_windowed(base, y, window, rng);
    const WindowedMatrix p = mat_mul(exx, a);
    for (std::size_t row = 0; row < window; ++row) {
      if (!p.known[row]) rep.rows_match = false;
      for (std::size_t c = 0; c < window && p.known[row]; ++c) {
        const Vec expect = row == x ? a.at(x, c) : r.zero();
        if (p.at(row, c) != expect) rep.rows_match = false;
      }
    }
    if (p.bounds[x] != a.bounds[x]) rep.rows_match = false;
    if (validate_family(row_family(p, x))) rep.rows_match = false;
    const Vec u = random_element(r, rng), v = random_element(r, rng);
    const WindowedMatrix uv = mat_mul(elementary(base, y, window, x, x, u), elementary(base, y, window, x, x, v));
    if (!certified_equal(uv, elementary(base, y, window, x, x, r.mul(u, v)))) rep.ring_iso = false;
    const WindowedMatrix acted = mat_mul(elementary(base, y, window, x, x, u), p);
    for (std::size_t c = 0; c < window; ++c) {
      if (!acted.known[x] || acted.at(x, c) != r.mul(u, a.at(x, c))) rep.action_match = false;
    }
  }
  const ZeroConvergentFamily unit = row_family(windowed_identity(base, y, window), x);
  rep.point_measure = !validate_family(unit).has_value();
  for (std::size_t c = 0; c < window; ++c) {
    rep.point_measure = rep.point_measure && unit.coefficients[c] == (c == x ? r.one() : r.zero());
  }
  // spanning set E_xx (E_ij r_s): the corner as a vector space, against R^Y on the same window
  std::vector<Vec> flat;
  for (std::size_t i = 0; i < window; ++i) {
    for (std::size_t j = 0; j < window; ++j) {
      for (std::size_t k = 0; k < r.dim(); ++k) {
        const WindowedMatrix p = mat_mul(exx, elementary(base, y, window, i, j, r.basis(k)));
        Vec v;
        for (const Vec& e : p.entries) v.insert(v.end(), e.begin(), e.end());
        flat.push_back(std::move(v));
      }
    }
  }
  rep.corner_dim = Subspace::span(r.field(), window * window * r.dim(), flat).dim();
  rep.free_dim = window * r.dim();
  return rep;
}

FiniteModule transport_discrete(const FiniteModule& n, std::size_t y) {
  if (n.side() != Side::Right) throw std::invalid_argument("discrete transport needs a right module");
  const StructureAlgebra& r = n.algebra();
  const StructureAlgebra mat = matrix_ring(r, y);
  const std::size_t d = r.dim();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < y; ++i) {
    for (std::size_t j = 0; j < y; ++j) {
      for (std::size_t s = 0; s < d; ++s) {
        Matrix m(r.field(), y * n.dim(), y * n.dim());
        if (n.dim() > 0) m.set_block(i * n.dim(), j * n.dim(), n.action(s));
        act.push_back(std::move(m));
      }
    }
  }
  return FiniteModule(mat, Side::Right, y * n.dim(), std::move(act));
}

Matrix transport_discrete_map(const Matrix& f, std::size_t y) {
  Matrix m(f.field(), y * f.rows(), y * f.cols());
  for (std::size_t i = 0; i < y; ++i) {
    if (f.rows() > 0 && f.cols() > 0) m.set_block(i * f.rows(), i * f.cols(), f);
  }
  return m;
}

FiniteModule transport_contra(const FiniteModule& c, std::size_t y) {
  if (c.side() != Side::Left) throw std::invalid_argument("contramodule transport needs a left module");
  const StructureAlgebra& r = c.algebra();
  const StructureAlgebra mat = matrix_ring(r, y);
  const std::size_t d = r.dim();
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < y; ++i) {
    for (std::size_t j = 0; j < y; ++j) {
      for (std::size_t s = 0; s < d; ++s) {
        // (E_ij r_s . c)_i = r_s c_j
        Matrix m(r.field(), y * c.dim(), y * c.dim());
        if (c.dim() > 0) m.set_block(j * c.dim(), i * c.dim(), c.action(s));
        act.push_back(std::move(m));
      }
    }
  }
  return FiniteModule(mat, Side::Left, y * c.dim(), std::move(act));
}

FiniteModule contra_corner(const FiniteModule& vc, const StructureAlgebra& r, std::size_t y, std::size_t x) {
  const std::size_t d = r.dim();
  const std::size_t k = y == 0 ? 0 : vc.dim() / y;
  std::vector<Matrix> act;
  for (std::size_t s = 0; s < d; ++s) act.push_back(vc.action((x * y + x) * d + s).block(x * k, x * k, k, k));
  return FiniteModule(r, Side::Left, k, std::move(act));
}

ContratensorResult contratensor(const FiniteModule& n, std::size_t x) {
  if (n.side() != Side::Right) throw std::invalid_argument("contratensor needs a right module");
  const StructureAlgebra& r = n.algebra();
  const FiniteField& f = r.field();
  const std::size_t d = r.dim();
  const std::size_t cdim = x * d;
  const std::size_t nd = n.dim();
  ContratensorResult out;
  out.tensor_dim = nd * cdim;
  out.target_dim = nd * x;
  if (out.tensor_dim == 0) {
    out.to_cokernel = Matrix(f, out.target_dim, 0);
    out.from_cokernel = Matrix(f, 0, out.target_dim);
    out.verified = out.target_dim == 0;
    return out;
  }
  auto tensor = [&](const Vec& u, const Vec& w) {
    Vec t(nd * cdim, 0);
    for (std::size_t i = 0; i < nd; ++i) {
      for (std::size_t k = 0; k < cdim; ++k) t[i * cdim + k] = f.mul(u[i], w[k]);
    }
    return t;
  };
  // left action of R on C = R^X, componentwise
  auto left_act = [&](const Vec& a, const Vec& c) {
    Vec out(cdim, 0);
    for (std::size_t z = 0; z < x; ++z) {
      const Vec cz(c.begin() + static_cast<std::ptrdiff_t>(z * d), c.begin() + static_cast<std::ptrdiff_t>((z + 1) * d));
      const Vec p = r.mul(a, cz);
      std::copy(p.begin(), p.end(), out.begin() + static_cast<std::ptrdiff_t>(z * d));
    }
    return out;
  };
  const Subspace cspace = Subspace::whole(f, cdim);
  std::size_t csize = 1;
  bool small = true;
  for (std::size_t i = 0; i < cdim && small; ++i) {
    csize *= f.order();
    small = csize <= 4096;
  }
  out.all_elements = small;
  const std::vector<Vec> elements = small ? enumerate_subspace(cspace, 4096) : cspace.basis_vecs();
  std::vector<Vec> rels;
  for (std::size_t i = 0; i < nd; ++i) {
    const Vec ni = unit_vec(nd, i);
    for (std::size_t s = 0; s < d; ++s) {
      const Vec nr = n.action(s).row_vec(i);
      for (const Vec& c : elements) {
        rels.push_back(vec_sub(f, tensor(ni, left_act(r.basis(s), c)), tensor(nr, c)));
      }
    }
  }
  out.relation_count = rels.size();
  const Subspace rel = Subspace::span(f, out.tensor_dim, rels);
  const std::vector<std::size_t> np = rel.non_pivots();
  out.cokernel_dim = np.size();
  auto to_coker = [&](const Vec& t) {
    const Vec red = rel.reduce(t);
    Vec q(np.size());
    for (std::size_t j = 0; j < np.size(); ++j) q[j] = red[np[j]];
    return q;
  };
  // psi : n (x) c -> (n c_z)_z, which kills the relations
  Matrix psi(f, out.tensor_dim, out.target_dim);
  for (std::size_t i = 0; i < nd; ++i) {
    for (std::size_t z = 0; z < x; ++z) {
      for (std::size_t s = 0; s < d; ++s) {
        const Vec img = n.action(s).row_vec(i);
        for (std::size_t j = 0; j < nd; ++j) psi(i * cdim + z * d + s, z * nd + j) = img[j];
      }
    }
  }
  bool kills = true;
  for (const Vec& v : rel.basis_vecs()) kills = kills && vec_is_zero(psi.apply(v));
  out.to_cokernel = Matrix(f, out.target_dim, out.cokernel_dim);
  const Vec one_c = r.one();
  for (std::size_t z = 0; z < x; ++z) {
    Vec delta(cdim, 0);
    std::copy(one_c.begin(), one_c.end(), delta.begin() + static_cast<std::ptrdiff_t>(z * d));
    for (std::size_t j = 0; j < nd; ++j) {
      const Vec q = to_coker(tensor(unit_vec(nd, j), delta));
      std::copy(q.begin(), q.end(), out.to_cokernel.row(z * nd + j).begin());
    }
  }
  out.from_cokernel = Matrix(f, out.cokernel_dim, out.target_dim);
  for (std::size_t j = 0; j < np.size(); ++j) {
    const Vec img = psi.apply(unit_vec(out.tensor_dim, np[j]));
    std::copy(img.begin(), img.end(), out.from_cokernel.row(j).begin());
  }
  out.verified = kills && out.cokernel_dim == out.target_dim &&
                 (out.to_cokernel * out.from_cokernel).is_identity() && (out.from_cokernel * out.to_cokernel).is_identity();
  return out;
}

}  // namespace toporing
