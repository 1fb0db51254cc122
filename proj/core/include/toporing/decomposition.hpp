#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toporing/module.hpp"
#include "toporing/wedderburn.hpp"

namespace toporing {

/// Radical, semisimple quotient and its Wedderburn data, with lifted central idempotents.
struct AlgebraStructure {
  Subspace radical;
  Quotient top;
  WedderburnDatum wedderburn;
  std::vector<Vec> lifted_central;  // preimages in A of the component idempotents
};
AlgebraStructure analyze_algebra(const StructureAlgebra& a, std::uint64_t seed = 1);

/// Length of a module annihilated by rad(A), from the component dimensions n d.
std::size_t composition_length(const FiniteModule& m, std::uint64_t seed = 1);
std::size_t composition_length(const FiniteModule& m, const AlgebraStructure& s);
/// Smallest k with rad^k(M) = 0.
std::size_t loewy_length(const FiniteModule& m);

/// True iff End(M)/rad End(M) is a field (M nonzero indecomposable with local endomorphisms).
bool has_local_endomorphisms(const FiniteModule& m, std::uint64_t seed = 1);

/**
 * Isomorphism M -> N for indecomposable modules with local endomorphism algebras, decided exactly:
 * M and N are isomorphic iff some product f g of basis elements f of Hom(M, N) and g of Hom(N, M)
 * lies outside rad End(M), and then f is an isomorphism.
 */
std::optional<Matrix> indecomposable_isomorphism(const FiniteModule& m, const FiniteModule& n);

/**
 * Isomorphism M -> N for arbitrary modules: random invertible elements of Hom(M, N), then
 * enumeration when |Hom| <= 4096, then matching of Krull-Schmidt summands. Exact in all cases.
 */
std::optional<Matrix> find_isomorphism(const FiniteModule& m, const FiniteModule& n, std::uint64_t seed = 1);

struct Summand {
  FiniteModule module;
  Matrix injection;   // dim S x dim M, rows a basis of the image
  Matrix projection;  // dim M x dim S
  Matrix idempotent;  // projection * injection, an idempotent endomorphism of M
  std::size_t iso_class = 0;
  Matrix class_iso;   // isomorphism from the class representative to this summand
  std::uint64_t residue_order = 0;  // |End(S)/rad End(S)|
};

struct DecompositionCertificate {
  FiniteModule ambient;
  std::vector<Summand> summands;
  std::vector<std::vector<std::size_t>> classes;  // summand indices per isomorphism class
  std::uint64_t seed = 0;
};

/// Krull-Schmidt decomposition through a lifted complete family of primitive idempotents of End(M).
DecompositionCertificate decompose_indecomposable(const FiniteModule& m, std::uint64_t seed = 1);
/// Rechecks idempotents, injections/projections, class isomorphisms and locality of every summand.
std::optional<std::string> verify_decomposition(const DecompositionCertificate& c);

/// rad(M, N) = {f : f g in rad End(M) for every g : N -> M}, a basis of matrices.
std::vector<Matrix> radical_homs(const FiniteModule& m, const FiniteModule& n);

}  // namespace toporing
