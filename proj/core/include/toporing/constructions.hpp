#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "toporing/algebra.hpp"
#include "toporing/poly.hpp"
#include "toporing/rng.hpp"

namespace toporing {

/// F[x]/(x^n) with basis 1, x, ..., x^(n-1).
StructureAlgebra truncated_polynomial(const FiniteField& f, std::size_t n);
/// F[x]/(g) with basis 1, x, ..., x^(deg g - 1); g of degree >= 1.
StructureAlgebra quotient_polynomial(const Poly& g);
/// Group algebra F[C_m] with basis the powers of a generator.
StructureAlgebra cyclic_group_algebra(const FiniteField& f, std::size_t m);
/// Mat_n(F) with basis E_ij at index i*n + j, carrying its natural representation.
StructureAlgebra matrix_algebra(const FiniteField& f, std::size_t n);
/// Upper triangular n x n matrices, basis E_ij (i <= j) in row-major order.
StructureAlgebra upper_triangular(const FiniteField& f, std::size_t n);
/// Mat_n(R); basis E_ij r_k at index (i*n + j) * dim R + k.
StructureAlgebra matrix_ring(const StructureAlgebra& r, std::size_t n);
/// Element of Mat_n(R) from an n x n grid of R-elements (row-major).
Vec matrix_ring_element(const StructureAlgebra& r, std::size_t n, const std::vector<Vec>& entries);
/// Entry (i, j) of an element of Mat_n(R).
Vec matrix_ring_entry(const StructureAlgebra& r, std::size_t n, const Vec& m, std::size_t i, std::size_t j);
/// Direct product, basis the concatenation of the factor bases.
StructureAlgebra product(const std::vector<StructureAlgebra>& factors);
/// Embedding of factor `k` of a product (non-unital; block of coordinates).
Vec product_component(const std::vector<StructureAlgebra>& factors, std::size_t k, const Vec& x);
/// F_{p^d} regarded as a d-dimensional algebra over F_p.
StructureAlgebra field_as_algebra(const FiniteField& fq);
/// Mat_n(F_{q}) regarded as an algebra over the prime field.
StructureAlgebra matrix_algebra_over_prime(const FiniteField& fq, std::size_t n);

/**
 * Subalgebra of Mat_m(F) generated by the given matrices (and the identity). The basis is the
 * reduced echelon basis of the flattened matrices, and the algebra carries the inclusion as its
 * representation.
 */
StructureAlgebra from_matrices(const FiniteField& f, std::size_t m, const std::vector<Matrix>& gens);

/// Same algebra in a seeded random basis.
StructureAlgebra random_basis_change(const StructureAlgebra& a, std::uint64_t seed);

/**
 * Seeded random algebra of dimension in [3, max_dim]: the subalgebra generated by random block upper
 * triangular matrices of size <= 4, presented in a random basis. Such algebras usually have a
 * nonzero radical and several simple factors.
 */
StructureAlgebra random_algebra(const FiniteField& f, std::uint64_t seed, std::size_t max_dim = 6);

/// Random element with coordinates uniform in the field.
Vec random_element(const StructureAlgebra& a, Rng& rng);

}  // namespace toporing
