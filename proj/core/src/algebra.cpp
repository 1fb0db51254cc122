#include "toporing/algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "toporing/rng.hpp"

namespace toporing {

StructureAlgebra::StructureAlgebra(FiniteField f, std::size_t n, std::vector<Elem> constants, Vec unit) {
  if (n == 0) throw std::invalid_argument("algebra dimension must be >= 1");
  if (constants.size() != n * n * n) throw std::invalid_argument("structure constant table has wrong size");
  if (unit.size() != n) throw std::invalid_argument("unit vector has wrong size");
  auto d = std::make_shared<Data>();
  d->field = std::move(f);
  d->n = n;
  d->c = std::move(constants);
  d->unit = std::move(unit);
  d->left.reserve(n);
  d->right.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Matrix l(d->field, n, n), r(d->field, n, n);
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        l(j, k) = d->c[(i * n + j) * n + k];
        r(j, k) = d->c[(j * n + i) * n + k];
      }
    }
    d->left.push_back(std::move(l));
    d->right.push_back(std::move(r));
  }
  data_ = std::move(d);
}

Vec StructureAlgebra::mul(const Vec& a, const Vec& b) const {
  const std::size_t n = dim();
  const FiniteField& f = field();
  Vec out(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b[j] == 0) continue;
      const Elem coef = f.mul(a[i], b[j]);
      vec_axpy(f, coef, std::span<const Elem>(data_->c.data() + (i * n + j) * n, n), out);
    }
  }
  return out;
}

Vec StructureAlgebra::pow(const Vec& a, std::uint64_t e) const {
  Vec result = one();
  Vec base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    e >>= 1U;
    if (e > 0) base = mul(base, base);
  }
  return result;
}

Matrix StructureAlgebra::left_mult(const Vec& a) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] != 0) m = m + data_->left[i].scaled(a[i]);
  }
  return m;
}

Matrix StructureAlgebra::right_mult(const Vec& a) const {
  Matrix m(field(), dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] != 0) m = m + data_->right[i].scaled(a[i]);
  }
  return m;
}

std::optional<Vec> StructureAlgebra::inverse(const Vec& a) const {
  // y * L(a) = a y; a is a unit iff L(a) is invertible.
  const auto inv = toporing::inverse(left_mult(a));
  if (!inv) return std::nullopt;
  Vec y = inv->apply(one());
  if (mul(a, y) != one() || mul(y, a) != one()) return std::nullopt;
  return y;
}

StructureAlgebra StructureAlgebra::with_representation(std::vector<Matrix> rep) const {
  if (rep.size() != dim()) throw std::invalid_argument("representation needs one matrix per basis element");
  StructureAlgebra copy;
  auto d = std::make_shared<Data>(*data_);
  d->rep = std::move(rep);
  copy.data_ = std::move(d);
  return copy;
}

Matrix StructureAlgebra::represent(const Vec& a) const {
  if (!has_representation()) return left_mult(a);
  const auto& rep = data_->rep;
  Matrix m(field(), rep.front().rows(), rep.front().cols());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (a[i] != 0) m = m + rep[i].scaled(a[i]);
  }
  return m;
}

StructureAlgebra StructureAlgebra::with_label(std::string label) const {
  StructureAlgebra copy;
  auto d = std::make_shared<Data>(*data_);
  d->label = std::move(label);
  copy.data_ = std::move(d);
  return copy;
}

namespace {

Vec assoc_defect(const StructureAlgebra& a, const Vec& x, const Vec& y, const Vec& z) {
  return a.sub(a.mul(a.mul(x, y), z), a.mul(x, a.mul(y, z)));
}

std::string triple_message(std::size_t i, std::size_t j, std::size_t k) {
  std::ostringstream os;
  os << "(e" << i << " e" << j << ") e" << k << " != e" << i << " (e" << j << " e" << k << ")";
  return os.str();
}

}  // namespace

AlgebraValidation validate_algebra(const StructureAlgebra& a, std::uint64_t seed) {
  AlgebraValidation out;
  const std::size_t n = a.dim();
  const FiniteField& f = a.field();
  constexpr std::size_t kExhaustiveLimit = 32;
  if (n <= kExhaustiveLimit) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        // (e_i e_j) e_k for all k at once: row j of L_i times R_k.
        const Vec eij = a.left_basis(i).row_vec(j);
        for (std::size_t k = 0; k < n; ++k) {
          const Vec lhs = a.right_basis(k).apply(eij);
          const Vec ejk = a.left_basis(j).row_vec(k);
          const Vec rhs = a.left_basis(i).apply(ejk);
          if (lhs != rhs) {
            out.diagnostics.push_back({AlgebraDiagnostic::Kind::NonAssociative, {i, j, k}, triple_message(i, j, k)});
          }
        }
      }
    }
  } else {
    out.exhaustive = false;
    Rng rng(seed);
    auto random_vec = [&] {
      Vec v(n);
      for (auto& e : v) e = static_cast<Elem>(rng.below(f.order()));
      return v;
    };
    for (int round = 0; round < 48 && out.diagnostics.empty(); ++round) {
      const Vec x = random_vec(), y = random_vec(), z = random_vec();
      if (vec_is_zero(assoc_defect(a, x, y, z))) continue;
      // Localise the trilinear defect to a basis triple.
      std::size_t bi = n, bj = n, bk = n;
      for (std::size_t i = 0; i < n && bi == n; ++i) {
        if (!vec_is_zero(assoc_defect(a, a.basis(i), y, z))) bi = i;
      }
      for (std::size_t j = 0; j < n && bj == n; ++j) {
        if (!vec_is_zero(assoc_defect(a, a.basis(bi), a.basis(j), z))) bj = j;
      }
      for (std::size_t k = 0; k < n && bk == n; ++k) {
        if (!vec_is_zero(assoc_defect(a, a.basis(bi), a.basis(bj), a.basis(k)))) bk = k;
      }
      out.diagnostics.push_back({AlgebraDiagnostic::Kind::NonAssociative, {bi, bj, bk}, triple_message(bi, bj, bk)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Vec e = a.basis(i);
    if (a.mul(a.one(), e) != e || a.mul(e, a.one()) != e) {
      std::ostringstream os;
      os << "unit fails on basis element e" << i;
      out.diagnostics.push_back({AlgebraDiagnostic::Kind::UnitFailure, {i, 0, 0}, os.str()});
    }
  }
  if (out.diagnostics.empty()) out.algebra = a;
  return out;
}

AlgebraValidation validate_algebra(const FiniteField& f, std::size_t n, const std::vector<ConstantTriple>& constants,
                                   const Vec& unit, std::uint64_t seed) {
  AlgebraValidation out;
  auto bad = [&](std::string msg) {
    out.diagnostics.push_back({AlgebraDiagnostic::Kind::BadShape, {0, 0, 0}, std::move(msg)});
    return out;
  };
  if (n == 0) return bad("dimension must be >= 1");
  if (unit.size() != n) return bad("unit vector length differs from the dimension");
  for (Elem u : unit) {
    if (u >= f.order()) return bad("unit coordinate outside the field");
  }
  std::vector<Elem> c(n * n * n, 0);
  for (const auto& t : constants) {
    if (t.i >= n || t.j >= n || t.k >= n) return bad("structure constant index out of range");
    if (t.value >= f.order()) return bad("structure constant value outside the field");
    c[(t.i * n + t.j) * n + t.k] = t.value;
  }
  return validate_algebra(StructureAlgebra(f, n, std::move(c), unit), seed);
}

std::vector<ConstantTriple> sparse_constants(const StructureAlgebra& a) {
  std::vector<ConstantTriple> out;
  const std::size_t n = a.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Elem v = a.constant(i, j, k);
        if (v != 0) out.push_back({i, j, k, v});
      }
    }
  }
  return out;
}

std::optional<std::string> check_homomorphism(const AlgebraMap& map) {
  const auto& src = map.source;
  const auto& dst = map.target;
  if (map.matrix.rows() != src.dim() || map.matrix.cols() != dst.dim()) return "map matrix has the wrong shape";
  if (map.apply(src.one()) != dst.one()) return "map is not unital";
  for (std::size_t i = 0; i < src.dim(); ++i) {
    const Vec fi = map.matrix.row_vec(i);
    for (std::size_t j = 0; j < src.dim(); ++j) {
      const Vec lhs = map.apply(src.mul(src.basis(i), src.basis(j)));
      const Vec rhs = dst.mul(fi, map.matrix.row_vec(j));
      if (lhs != rhs) {
        std::ostringstream os;
        os << "map is not multiplicative on basis pair (" << i << ", " << j << ")";
        return os.str();
      }
    }
  }
  return std::nullopt;
}

bool is_left_ideal(const StructureAlgebra& a, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vec v = s.basis().row_vec(r);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!s.contains(a.mul(a.basis(i), v))) return false;
    }
  }
  return true;
}

bool is_right_ideal(const StructureAlgebra& a, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r) {
    const Vec v = s.basis().row_vec(r);
    for (std::size_t i = 0; i < a.dim(); ++i) {
      if (!s.contains(a.mul(v, a.basis(i)))) return false;
    }
  }
  return true;
}

SubspaceIdeal make_ideal(const StructureAlgebra& a, Subspace s) {
  SubspaceIdeal out{a, std::move(s)};
  out.left = is_left_ideal(a, out.space);
  out.right = is_right_ideal(a, out.space);
  return out;
}

namespace {

Subspace closure(const StructureAlgebra& a, const std::vector<Vec>& gens, bool left, bool right) {
  const FiniteField& f = a.field();
  Subspace s = Subspace::span(f, a.dim(), gens);
  std::vector<Vec> frontier = s.basis_vecs();
  while (!frontier.empty()) {
    std::vector<Vec> next;
    for (const Vec& v : frontier) {
      for (std::size_t i = 0; i < a.dim(); ++i) {
        if (left) {
          Vec w = a.mul(a.basis(i), v);
          if (!s.contains(w)) {
            s = s.sum(Subspace::span(f, a.dim(), {w}));
            next.push_back(std::move(w));
          }
        }
        if (right) {
          Vec w = a.mul(v, a.basis(i));
          if (!s.contains(w)) {
            s = s.sum(Subspace::span(f, a.dim(), {w}));
            next.push_back(std::move(w));
          }
        }
      }
    }
    frontier = std::move(next);
  }
  return s;
}

}  // namespace

SubspaceIdeal two_sided_ideal_generated(const StructureAlgebra& a, const std::vector<Vec>& gens) {
  return SubspaceIdeal{a, closure(a, gens, true, true), true, true};
}

Subspace right_ideal_generated(const StructureAlgebra& a, const std::vector<Vec>& gens) {
  return closure(a, gens, false, true);
}

Subspace left_ideal_generated(const StructureAlgebra& a, const std::vector<Vec>& gens) {
  return closure(a, gens, true, false);
}

Subspace product_space(const StructureAlgebra& a, const Subspace& s, const Subspace& t) {
  std::vector<Vec> prods;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vec x = s.basis().row_vec(i);
    for (std::size_t j = 0; j < t.dim(); ++j) prods.push_back(a.mul(x, t.basis().row_vec(j)));
  }
  return Subspace::span(a.field(), a.dim(), prods);
}

std::optional<std::size_t> nilpotency_index(const StructureAlgebra& a, const Subspace& s) {
  Subspace power = s;
  for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
    if (power.dim() == 0) return k;
    Subspace next = product_space(a, power, s);
    if (next == power) return std::nullopt;
    power = std::move(next);
  }
  return std::nullopt;
}

Subspace center(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  const FiniteField& f = a.field();
  Matrix m(f, n, n * n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) m(j, i * n + k) = f.sub(a.constant(j, i, k), a.constant(i, j, k));
    }
  }
  return Subspace::of_rows(left_kernel(m));
}

Vec Quotient::lift(const Vec& q) const {
  const auto np = kernel.non_pivots();
  Vec v(kernel.ambient(), 0);
  for (std::size_t i = 0; i < np.size(); ++i) v[np[i]] = q[i];
  return v;
}

Quotient quotient(const StructureAlgebra& a, const Subspace& ideal) {
  if (!is_left_ideal(a, ideal) || !is_right_ideal(a, ideal)) {
    throw std::invalid_argument("quotient requires a two-sided ideal");
  }
  const std::size_t n = a.dim();
  const FiniteField& f = a.field();
  const auto np = ideal.non_pivots();
  const std::size_t m = np.size();
  if (m == 0) throw std::invalid_argument("quotient by the whole algebra is the zero ring");
  Matrix proj(f, n, m);
  for (std::size_t c = 0; c < n; ++c) {
    const Vec r = ideal.reduce(unit_vec(n, c));
    for (std::size_t j = 0; j < m; ++j) proj(c, j) = r[np[j]];
  }
  std::vector<Elem> c(m * m * m);
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const Vec prod = proj.apply(a.mul(a.basis(np[x]), a.basis(np[y])));
      std::copy(prod.begin(), prod.end(), c.begin() + static_cast<std::ptrdiff_t>((x * m + y) * m));
    }
  }
  StructureAlgebra qa(f, m, std::move(c), proj.apply(a.one()));
  return Quotient{qa, AlgebraMap{a, qa, proj}, ideal};
}

StructureAlgebra change_basis(const StructureAlgebra& a, const Matrix& new_basis) {
  const auto inv = inverse(new_basis);
  if (!inv) throw std::invalid_argument("basis change matrix is singular");
  const std::size_t n = a.dim();
  std::vector<Elem> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Vec bi = new_basis.row_vec(i);
    for (std::size_t j = 0; j < n; ++j) {
      const Vec prod = inv->apply(a.mul(bi, new_basis.row_vec(j)));
      std::copy(prod.begin(), prod.end(), c.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n));
    }
  }
  return StructureAlgebra(a.field(), n, std::move(c), inv->apply(a.one()));
}

StructureAlgebra opposite(const StructureAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Elem> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = a.constant(j, i, k);
    }
  }
  return StructureAlgebra(a.field(), n, std::move(c), a.one());
}

Vec to_prime_coords(const FiniteField& f, const Vec& v) {
  Vec out;
  out.reserve(v.size() * f.degree());
  for (Elem e : v) {
    for (auto dgt : f.digits(e)) out.push_back(dgt);
  }
  return out;
}

Vec from_prime_coords(const FiniteField& f, const Vec& v) {
  const std::size_t d = f.degree();
  Vec out(v.size() / d);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = f.from_digits(std::span<const std::uint32_t>(v.data() + i * d, d));
  }
  return out;
}

StructureAlgebra restrict_to_prime_field(const StructureAlgebra& a) {
  const FiniteField& f = a.field();
  const std::size_t d = f.degree();
  if (d == 1) return a;
  const FiniteField fp = FiniteField::prime(f.characteristic());
  const std::size_t n = a.dim();
  const std::size_t N = n * d;
  // powers of t as field elements
  std::vector<Elem> tpow(2 * d);
  Elem t = f.characteristic();  // encoding of t is p
  tpow[0] = 1;
  for (std::size_t s = 1; s < 2 * d; ++s) tpow[s] = f.mul(tpow[s - 1], t);
  std::vector<Elem> c(N * N * N, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Elem cijk = a.constant(i, j, k);
        if (cijk == 0) continue;
        for (std::size_t s = 0; s < d; ++s) {
          for (std::size_t r = 0; r < d; ++r) {
            const auto dg = f.digits(f.mul(tpow[s + r], cijk));
            for (std::size_t u = 0; u < d; ++u) {
              c[((i * d + s) * N + (j * d + r)) * N + (k * d + u)] = dg[u];
            }
          }
        }
      }
    }
  }
  StructureAlgebra out(fp, N, std::move(c), to_prime_coords(f, a.one()));
  if (a.has_representation()) {
    std::vector<Matrix> rep;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t s = 0; s < d; ++s) {
        const Matrix& m = a.representation()[i];
        Matrix big(fp, m.rows() * d, m.cols() * d);
        for (std::size_t r = 0; r < m.rows(); ++r) {
          for (std::size_t col = 0; col < m.cols(); ++col) {
            const auto blk = f.prime_mult_matrix(f.mul(tpow[s], m(r, col)));
            for (std::size_t u = 0; u < d; ++u) {
              for (std::size_t v = 0; v < d; ++v) big(r * d + u, col * d + v) = blk[u * d + v];
            }
          }
        }
        rep.push_back(std::move(big));
      }
    }
    out = out.with_representation(std::move(rep));
  }
  return out;
}

std::vector<Elem> minimal_polynomial_coeffs(const StructureAlgebra& a, const Vec& x, const Vec& unit) {
  const FiniteField& f = a.field();
  std::vector<Vec> powers{unit};
  for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
    Vec next = a.mul(powers.back(), x);
    // Solve sum c_i powers[i] = next.
    Matrix cols = Matrix::from_rows(f, a.dim(), powers).transpose();
    Matrix rhs(f, a.dim(), 1);
    for (std::size_t r = 0; r < a.dim(); ++r) rhs(r, 0) = next[r];
    const SolveResult sol = rref_solve(cols, rhs);
    if (!sol.inconsistent[0]) {
      if (sol.rank != powers.size()) throw std::logic_error("powers became dependent before detection");
      return *sol.solutions[0];
    }
    powers.push_back(std::move(next));
  }
  throw std::logic_error("minimal polynomial search exceeded the dimension");
}

Vec invert_in_one_plus_h(const StructureAlgebra& a, const Vec& u, const Subspace& h) {
  const Vec w = a.sub(a.one(), u);
  if (!h.contains(w)) throw std::invalid_argument("u - 1 does not lie in the given ideal");
  Vec sum = a.one();
  Vec term = a.one();
  for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
    term = a.mul(term, w);
    if (vec_is_zero(term)) {
      if (a.mul(u, sum) != a.one() || a.mul(sum, u) != a.one()) {
        throw std::logic_error("geometric series inverse failed verification");
      }
      return sum;
    }
    sum = a.add(sum, term);
  }
  throw std::invalid_argument("ideal is not nil: the geometric series does not terminate");
}

}  // namespace toporing
