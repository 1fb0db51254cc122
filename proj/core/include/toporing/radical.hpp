#pragma once

#include <cstddef>

#include "toporing/algebra.hpp"

namespace toporing {

/**
 * Jacobson radical by the characteristic-p trace method: with a faithful matrix representation of
 * degree m and integer lifts, g_i(a) = (Tr(a^(p^i)) mod p^(i+1)) / p^i, and
 *   I_{-1} = A,  I_i = {x in I_{i-1} : g_i(x y) = 0 for all y},
 * for i = 0 .. floor(log_p m); the last I_i is the radical. Algebras over F_q are handled by
 * restriction of scalars to F_p.
 */
SubspaceIdeal radical(const StructureAlgebra& a);

/// Largest |A| accepted by radical_bruteforce.
inline constexpr std::size_t kBruteforceLimit = 4096;

/**
 * Oracle straight from the definition: x is in the radical iff 1 - a x is a unit for every a.
 * Enumerates the algebra; throws std::invalid_argument when |A| > kBruteforceLimit.
 */
Subspace radical_bruteforce(const StructureAlgebra& a);

bool is_semisimple(const StructureAlgebra& a);

/// Number of elements q^n, or 0 if it exceeds 2^62.
std::size_t algebra_cardinality(const StructureAlgebra& a);

}  // namespace toporing
