#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "toporing/algebra.hpp"
#include "toporing/poly.hpp"
#include "toporing/rng.hpp"

namespace toporing {

/// One simple component Mat_n(F_{q^d}) of a semisimple algebra over F_q.
struct WedderburnComponent {
  Vec central_idempotent;
  std::size_t n = 1;          // matrix size
  std::uint32_t degree = 1;   // d, degree of the residue field over the base field
  std::uint64_t residue_order = 0;  // q^d
  Vec theta;                  // generates the center of the component over the base field
  Poly theta_minpoly;         // minimal polynomial of theta, degree d
  std::vector<Vec> units;     // matrix units E_ij at index i*n + j
};

struct WedderburnDatum {
  StructureAlgebra algebra;
  std::vector<WedderburnComponent> components;  // sorted by (q^d, n, idempotent)
  StructureAlgebra model;  // product of Mat_n(F_q[t]/(g)), see reassemble()
  Matrix iso;              // model -> algebra, row i = image of model basis element i
  std::uint64_t seed = 0;
};

/// (q^d, n) per component, sorted.
using FactorMultiset = std::vector<std::pair<std::uint64_t, std::size_t>>;
FactorMultiset factor_multiset(const WedderburnDatum& w);

/**
 * Decomposition of a semisimple algebra into simple components with matrix units, and the
 * reassembled block algebra with a verified isomorphism. Throws std::invalid_argument if the
 * radical is nonzero and std::runtime_error if the seeded retries are exhausted.
 */
WedderburnDatum wedderburn(const StructureAlgebra& a, std::uint64_t seed = 1);

/// Rechecks every identity of the datum; returns the first failure.
std::optional<std::string> verify_wedderburn(const WedderburnDatum& w);

/// Value of the polynomial at x, with `unit` standing for 1.
Vec eval_poly(const StructureAlgebra& a, const Poly& g, const Vec& x, const Vec& unit);

/// Minimal polynomial (monic) of x in the algebra with unit `unit`.
Poly minimal_polynomial(const StructureAlgebra& a, const Vec& x, const Vec& unit);

/**
 * Orthogonal idempotents, polynomials in x, summing to `unit`: one for each primary factor of the
 * minimal polynomial of x (CRT idempotents).
 */
std::vector<Vec> primary_idempotents(const StructureAlgebra& a, const Vec& x, const Vec& unit, std::uint64_t seed);

/// Uniformly random element of a subspace.
Vec random_in(const Subspace& s, Rng& rng);

/// span{x a y : a in A}
Subspace sandwich(const StructureAlgebra& a, const Vec& x, const Vec& y);

}  // namespace toporing
