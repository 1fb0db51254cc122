#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toporing/algebra.hpp"

namespace toporing {

/// Result of lifting one idempotent modulo a nil ideal.
struct IdempotentLift {
  Vec e;
  std::size_t iterations = 0;   // Newton steps g <- 3g^2 - 2g^3 performed
  std::size_t nil_index = 1;    // smallest k with H^k = 0
  std::size_t iteration_bound = 1;  // ceil(log2(nil_index)) + 1
};

/**
 * Lifts f (with f^2 - f in H) to an idempotent e in f + H lying in f A f. H must be a nilpotent
 * two-sided ideal. Throws std::invalid_argument when f^2 - f is outside H or H is not nilpotent.
 */
IdempotentLift lift_idempotent(const StructureAlgebra& a, const Vec& f, const Subspace& h);

enum class SideChoice { Left, Right };

/// Family of elements with its recorded product table and completeness residual 1 - sum.
struct IdempotentFamily {
  std::vector<Vec> elements;
  std::vector<std::vector<Vec>> products;  // products[w][z] = e_w e_z
  Vec residual;                            // 1 - sum e_z
  std::vector<std::size_t> iterations;     // per element Newton steps (lifting only)
};

/// Recomputes products and residual for the elements.
IdempotentFamily record_family(const StructureAlgebra& a, std::vector<Vec> elements);
/// Checks idempotence, pairwise orthogonality, completeness and the recorded data.
std::optional<std::string> check_complete_orthogonal(const StructureAlgebra& a, const IdempotentFamily& fam);

/**
 * Given idempotents with e_w e_z in H for z < w (input order) and u = sum e_z invertible, returns
 * u^-1 e_z (Left) or e_z u^-1 (Right). u is inverted by the geometric series when u - 1 lies in H
 * and by a linear solve otherwise. Throws std::invalid_argument on violated hypotheses and
 * std::logic_error if the output fails verification.
 */
IdempotentFamily orthogonalize(const StructureAlgebra& a, const std::vector<Vec>& family, const Subspace& h,
                               SideChoice side = SideChoice::Left);

/**
 * Lifts f_z (f_z^2 - f_z in H, f_w f_z in H for z != w, sum f_z in 1 + H) to a complete orthogonal
 * family e_z in f_z + H, with e_z in A f_z (Left) or f_z A (Right).
 */
IdempotentFamily lift_orthogonal_family(const StructureAlgebra& a, const std::vector<Vec>& family, const Subspace& h,
                                        SideChoice side = SideChoice::Left);

/// Every idempotent of A in the coset f + H, by enumeration (|H| <= 4096). Test oracle.
std::vector<Vec> idempotents_in_coset(const StructureAlgebra& a, const Vec& f, const Subspace& h);

}  // namespace toporing
