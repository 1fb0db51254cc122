#include "toporing/radical.hpp"

#include <stdexcept>

namespace toporing {

namespace {

using U64 = std::uint64_t;

// Integer matrix modulo a prime power, row-major.
struct IntMat {
  std::size_t n;
  std::vector<U64> a;
};

IntMat int_mul(const IntMat& x, const IntMat& y, U64 mod) {
  IntMat out{x.n, std::vector<U64>(x.n * x.n, 0)};
  for (std::size_t i = 0; i < x.n; ++i) {
    for (std::size_t k = 0; k < x.n; ++k) {
      const U64 v = x.a[i * x.n + k];
      if (v == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j) {
        out.a[i * x.n + j] = (out.a[i * x.n + j] + v * y.a[k * x.n + j]) % mod;
      }
    }
  }
  return out;
}

// g_i of a prime-field matrix: (Tr(M~^(p^i)) mod p^(i+1)) / p^i.
Elem trace_functional(const Matrix& m, std::uint32_t p, unsigned i) {
  U64 pi = 1;
  for (unsigned k = 0; k < i; ++k) pi *= p;
  const U64 mod = pi * p;
  IntMat x{m.rows(), std::vector<U64>(m.data().begin(), m.data().end())};
  // x^(p^i) by i successive p-th powers
  for (unsigned k = 0; k < i; ++k) {
    IntMat base = x;
    IntMat acc = x;
    for (std::uint32_t e = 1; e < p; ++e) acc = int_mul(acc, base, mod);
    x = std::move(acc);
  }
  U64 tr = 0;
  for (std::size_t d = 0; d < x.n; ++d) tr = (tr + x.a[d * x.n + d]) % mod;
  return static_cast<Elem>(tr / pi);
}

Subspace radical_prime_field(const StructureAlgebra& a) {
  const FiniteField& f = a.field();
  const std::uint32_t p = f.characteristic();
  const std::size_t n = a.dim();
  const std::size_t m = a.has_representation() ? a.representation().front().rows() : n;
  auto rep = [&](const Vec& x) { return a.has_representation() ? a.represent(x) : a.right_mult(x); };

  unsigned levels = 0;  // floor(log_p m)
  for (std::size_t pw = p; pw <= m; pw *= p) ++levels;

  Subspace current = Subspace::whole(f, n);
  for (unsigned i = 0; i <= levels && current.dim() > 0; ++i) {
    const std::vector<Vec> basis = current.basis_vecs();
    const std::size_t r = basis.size();
    std::vector<Elem> gamma(r);
    for (std::size_t l = 0; l < r; ++l) gamma[l] = trace_functional(rep(basis[l]), p, i);
    // M[k][j] = g_i(x_k e_j), using linearity of g_i on the ideal I_{i-1}.
    Matrix cond(f, r, n);
    for (std::size_t k = 0; k < r; ++k) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto c = current.coords(a.mul(basis[k], a.basis(j)));
        if (!c) throw std::logic_error("trace-method ideal is not a right ideal");
        Elem s = 0;
        for (std::size_t l = 0; l < r; ++l) s = f.add(s, f.mul((*c)[l], gamma[l]));
        cond(k, j) = s;
      }
    }
    const Matrix ker = left_kernel(cond);
    std::vector<Vec> next;
    for (std::size_t t = 0; t < ker.rows(); ++t) {
      Vec v(n, 0);
      for (std::size_t k = 0; k < r; ++k) vec_axpy(f, ker(t, k), basis[k], v);
      next.push_back(std::move(v));
    }
    current = Subspace::span(f, n, next);
  }
  return current;
}

}  // namespace

SubspaceIdeal radical(const StructureAlgebra& a) {
  const FiniteField& f = a.field();
  Subspace rad;
  if (f.degree() == 1) {
    rad = radical_prime_field(a);
  } else {
    const StructureAlgebra ap = restrict_to_prime_field(a);
    const Subspace radp = radical_prime_field(ap);
    std::vector<Vec> gens;
    for (const Vec& v : radp.basis_vecs()) gens.push_back(from_prime_coords(f, v));
    rad = Subspace::span(f, a.dim(), gens);
  }
  return SubspaceIdeal{a, std::move(rad), true, true};
}

std::size_t algebra_cardinality(const StructureAlgebra& a) {
  std::size_t size = 1;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (size > (std::size_t{1} << 62) / a.field().order()) return 0;
    size *= a.field().order();
  }
  return size;
}

namespace {

Vec decode(std::size_t idx, std::size_t n, std::uint32_t q) {
  Vec v(n);
  for (std::size_t i = 0; i < n; ++i) {
    v[i] = static_cast<Elem>(idx % q);
    idx /= q;
  }
  return v;
}

std::size_t encode(const Vec& v, std::uint32_t q) {
  std::size_t idx = 0;
  for (std::size_t i = v.size(); i-- > 0;) idx = idx * q + v[i];
  return idx;
}

}  // namespace

Subspace radical_bruteforce(const StructureAlgebra& a) {
  const std::size_t size = algebra_cardinality(a);
  if (size == 0 || size > kBruteforceLimit) throw std::invalid_argument("algebra too large for the brute-force radical");
  const FiniteField& f = a.field();
  const std::size_t n = a.dim();
  const std::uint32_t q = f.order();
  std::vector<char> unit(size);
  for (std::size_t idx = 0; idx < size; ++idx) unit[idx] = rank(a.left_mult(decode(idx, n, q))) == n ? 1 : 0;

  std::vector<Vec> members;
  for (std::size_t idx = 0; idx < size; ++idx) {
    const Vec x = decode(idx, n, q);
    // {a x : a in A} is the row space of right_mult(x); test 1 - y on all of it.
    const Subspace ax = Subspace::of_rows(a.right_mult(x));
    const std::vector<Vec> gens = ax.basis_vecs();
    std::size_t count = 1;
    for (std::size_t k = 0; k < gens.size(); ++k) count *= q;
    bool ok = true;
    for (std::size_t c = 0; c < count && ok; ++c) {
      std::size_t rest = c;
      Vec y(n, 0);
      for (const Vec& g : gens) {
        vec_axpy(f, static_cast<Elem>(rest % q), g, y);
        rest /= q;
      }
      ok = unit[encode(a.sub(a.one(), y), q)] != 0;
    }
    if (ok) members.push_back(x);
  }
  Subspace rad = Subspace::span(f, n, members);
  std::size_t expect = 1;
  for (std::size_t k = 0; k < rad.dim(); ++k) expect *= q;
  if (expect != members.size()) throw std::logic_error("brute-force radical is not a subspace");
  return rad;
}

bool is_semisimple(const StructureAlgebra& a) { return radical(a).space.dim() == 0; }

}  // namespace toporing
