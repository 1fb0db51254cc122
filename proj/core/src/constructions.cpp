#include "toporing/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "toporing/rng.hpp"

namespace toporing {

namespace {

std::vector<Elem> zero_table(std::size_t n) { return std::vector<Elem>(n * n * n, 0); }

}  // namespace

StructureAlgebra truncated_polynomial(const FiniteField& f, std::size_t n) {
  if (n == 0) throw std::invalid_argument("truncation length must be >= 1");
  auto c = zero_table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; i + j < n; ++j) c[(i * n + j) * n + i + j] = 1;
  }
  return StructureAlgebra(f, n, std::move(c), unit_vec(n, 0));
}

StructureAlgebra quotient_polynomial(const Poly& g) {
  if (g.degree() < 1) throw std::invalid_argument("modulus must have degree >= 1");
  const FiniteField& f = g.field();
  const std::size_t n = static_cast<std::size_t>(g.degree());
  auto c = zero_table(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Elem> mono(i + j + 1, 0);
      mono[i + j] = 1;
      const Poly r = Poly(f, mono).mod(g);
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = r.coeff(k);
    }
  }
  return StructureAlgebra(f, n, std::move(c), unit_vec(n, 0));
}

StructureAlgebra cyclic_group_algebra(const FiniteField& f, std::size_t m) {
  if (m == 0) throw std::invalid_argument("group order must be >= 1");
  auto c = zero_table(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) c[(i * m + j) * m + (i + j) % m] = 1;
  }
  return StructureAlgebra(f, m, std::move(c), unit_vec(m, 0));
}

StructureAlgebra matrix_algebra(const FiniteField& f, std::size_t n) {
  const std::size_t dim = n * n;
  auto c = zero_table(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) c[((i * n + j) * dim + j * n + l) * dim + i * n + l] = 1;
    }
  }
  Vec unit(dim, 0);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  std::vector<Matrix> rep;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Matrix e(f, n, n);
      e(i, j) = 1;
      rep.push_back(std::move(e));
    }
  }
  return StructureAlgebra(f, dim, std::move(c), std::move(unit)).with_representation(std::move(rep));
}

StructureAlgebra upper_triangular(const FiniteField& f, std::size_t n) {
  std::vector<Matrix> gens;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Matrix e(f, n, n);
      e(i, j) = 1;
      gens.push_back(std::move(e));
    }
  }
  // The echelon basis of the flattened E_ij (i <= j) is exactly that list in row-major order.
  return from_matrices(f, n, gens);
}

StructureAlgebra matrix_ring(const StructureAlgebra& r, std::size_t n) {
  const std::size_t d = r.dim();
  const std::size_t dim = n * n * d;
  auto c = zero_table(dim);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        for (std::size_t a = 0; a < d; ++a) {
          for (std::size_t b = 0; b < d; ++b) {
            for (std::size_t k = 0; k < d; ++k) {
              c[(((i * n + j) * d + a) * dim + (j * n + l) * d + b) * dim + (i * n + l) * d + k] = r.constant(a, b, k);
            }
          }
        }
      }
    }
  }
  Vec unit(dim, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < d; ++k) unit[(i * n + i) * d + k] = r.one()[k];
  }
  return StructureAlgebra(r.field(), dim, std::move(c), std::move(unit));
}

Vec matrix_ring_element(const StructureAlgebra& r, std::size_t n, const std::vector<Vec>& entries) {
  const std::size_t d = r.dim();
  Vec out(n * n * d, 0);
  for (std::size_t e = 0; e < n * n; ++e) {
    for (std::size_t k = 0; k < d; ++k) out[e * d + k] = entries[e][k];
  }
  return out;
}

Vec matrix_ring_entry(const StructureAlgebra& r, std::size_t n, const Vec& m, std::size_t i, std::size_t j) {
  const std::size_t d = r.dim();
  return Vec(m.begin() + static_cast<std::ptrdiff_t>((i * n + j) * d),
             m.begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * d));
}

StructureAlgebra product(const std::vector<StructureAlgebra>& factors) {
  if (factors.empty()) throw std::invalid_argument("product of no algebras");
  const FiniteField& f = factors.front().field();
  std::size_t dim = 0;
  for (const auto& a : factors) {
    if (!(a.field() == f)) throw std::invalid_argument("product factors over different fields");
    dim += a.dim();
  }
  auto c = zero_table(dim);
  Vec unit(dim, 0);
  std::size_t off = 0;
  for (const auto& a : factors) {
    const std::size_t m = a.dim();
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        for (std::size_t k = 0; k < m; ++k) c[((off + i) * dim + off + j) * dim + off + k] = a.constant(i, j, k);
      }
      unit[off + i] = a.one()[i];
    }
    off += m;
  }
  return StructureAlgebra(f, dim, std::move(c), std::move(unit));
}

Vec product_component(const std::vector<StructureAlgebra>& factors, std::size_t k, const Vec& x) {
  std::size_t dim = 0, off = 0;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i == k) off = dim;
    dim += factors[i].dim();
  }
  Vec out(dim, 0);
  for (std::size_t i = 0; i < x.size(); ++i) out[off + i] = x[i];
  return out;
}

StructureAlgebra field_as_algebra(const FiniteField& fq) {
  const FiniteField fp = FiniteField::prime(fq.characteristic());
  std::vector<Elem> mod(fq.modulus().begin(), fq.modulus().end());
  return quotient_polynomial(Poly(fp, mod));
}

StructureAlgebra matrix_algebra_over_prime(const FiniteField& fq, std::size_t n) {
  return restrict_to_prime_field(matrix_algebra(fq, n));
}

StructureAlgebra from_matrices(const FiniteField& f, std::size_t m, const std::vector<Matrix>& gens) {
  const std::size_t m2 = m * m;
  Subspace span = Subspace::span(f, m2, {Matrix::identity(f, m).flatten()});
  std::vector<Matrix> frontier{Matrix::identity(f, m)};
  for (const Matrix& g : gens) {
    if (!span.contains(g.flatten())) {
      span = span.sum(Subspace::span(f, m2, {g.flatten()}));
      frontier.push_back(g);
    }
  }
  // Close under multiplication by the generators.
  std::vector<Matrix> all = frontier;
  while (!frontier.empty()) {
    std::vector<Matrix> next;
    for (const Matrix& x : frontier) {
      for (const Matrix& g : gens) {
        for (const Matrix& prod : {x * g, g * x}) {
          if (!span.contains(prod.flatten())) {
            span = span.sum(Subspace::span(f, m2, {prod.flatten()}));
            next.push_back(prod);
          }
        }
      }
    }
    frontier = std::move(next);
  }
  const std::size_t n = span.dim();
  std::vector<Matrix> basis;
  for (std::size_t i = 0; i < n; ++i) basis.push_back(Matrix::unflatten(f, m, m, span.basis().row_vec(i)));
  std::vector<Elem> c(n * n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const auto co = span.coords((basis[i] * basis[j]).flatten());
      if (!co) throw std::logic_error("matrix span is not closed under multiplication");
      std::copy(co->begin(), co->end(), c.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n));
    }
  }
  const auto unit = span.coords(Matrix::identity(f, m).flatten());
  return StructureAlgebra(f, n, std::move(c), *unit).with_representation(std::move(basis));
}

StructureAlgebra random_basis_change(const StructureAlgebra& a, std::uint64_t seed) {
  Rng rng(seed);
  const FiniteField& f = a.field();
  const std::size_t n = a.dim();
  for (;;) {
    Matrix b(f, n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) b(i, j) = static_cast<Elem>(rng.below(f.order()));
    }
    if (rank(b) != n) continue;
    StructureAlgebra out = change_basis(a, b);
    if (a.has_representation()) {
      std::vector<Matrix> rep;
      for (std::size_t i = 0; i < n; ++i) rep.push_back(a.represent(b.row_vec(i)));
      out = out.with_representation(std::move(rep));
    }
    return out;
  }
}

StructureAlgebra random_algebra(const FiniteField& f, std::uint64_t seed, std::size_t max_dim) {
  Rng rng(seed);
  for (;;) {
    const std::size_t m = 2 + rng.below(3);
    // Random block sizes summing to m; generators are block upper triangular.
    std::vector<std::size_t> block_of(m);
    std::size_t blk = 0;
    for (std::size_t i = 0; i < m; ++i) {
      if (i > 0 && rng.coin()) ++blk;
      block_of[i] = blk;
    }
    const std::size_t ngens = 2 + rng.below(2);
    std::vector<Matrix> gens;
    for (std::size_t g = 0; g < ngens; ++g) {
      Matrix x(f, m, m);
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
          if (block_of[i] <= block_of[j] && rng.below(3) != 0) x(i, j) = static_cast<Elem>(rng.below(f.order()));
        }
      }
      gens.push_back(std::move(x));
    }
    StructureAlgebra a = from_matrices(f, m, gens);
    if (a.dim() > max_dim || a.dim() < std::min<std::size_t>(3, max_dim)) continue;
    return random_basis_change(a, rng.next());
  }
}

Vec random_element(const StructureAlgebra& a, Rng& rng) {
  Vec v(a.dim());
  for (auto& e : v) e = static_cast<Elem>(rng.below(a.field().order()));
  return v;
}

}  // namespace toporing
