#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toporing/module.hpp"
#include "toporing/tnilpotency.hpp"
#include "toporing/tower.hpp"

namespace toporing {

/**
 * End_A(M_1 + ... + M_n)^op computed blockwise from the spaces Hom(M_i, M_j). Basis: the Hom bases
 * of the blocks (i, j) in row-major block order, embedded as block matrices.
 */
EndoAlgebra endo_of_sum(const std::vector<FiniteModule>& components);

struct EndoLevel {
  EndoAlgebra endo;
  std::vector<Subspace> base;  // Ann(M_1 + ... + M_k) for k = 1..n, right ideals of E_n
  Matrix embedding;            // E_n -> E_{n+1} (non-unital, F -> F + 0); empty at the top
  Vec corner;                  // idempotent of E_{n+1} projecting onto the first n components
};

/// Endomorphism rings of the truncated sums of a countable family of components.
struct EndoTower {
  StructureAlgebra algebra;
  std::vector<FiniteModule> components;
  bool truncated = false;  // the components stand for an infinite family
  std::vector<EndoLevel> levels;  // levels[n - 1] = E_n
  std::size_t depth() const { return levels.size(); }
  FiniteModule sum(std::size_t n) const;
};
/// Levels E_1..E_N; every level, embedding and annihilator ideal is verified.
EndoTower endo_tower(const std::vector<FiniteModule>& components, std::size_t n, bool truncated = false);

/// A right module realizing R as its endomorphism ring, with both directions of the isomorphism.
struct EndoRealization {
  StructureAlgebra ring;
  std::vector<Subspace> ideals;
  StructureAlgebra acting;  // A, generated by the projections and the maps s_{I,J}
  FiniteModule module;      // M = sum R/I as a right A-module
  EndoAlgebra endo;
  Matrix to_endo;    // R -> E, r -> right multiplication by r
  Matrix from_endo;  // E -> R
  bool verified = false;
};
/// R finite, `ideals` right ideals of R including 0 so that the action is faithful.
EndoRealization realize_ring_as_endo(const StructureAlgebra& r, const std::vector<Subspace>& ideals);

/**
 * Colimit of R -> R -> ... along right multiplications by a_1, a_2, ... for a sequence given by a
 * prefix and a repeated period. With c the product of the period, the colimit is R c^s where the
 * chain R c^k stabilizes at k = s, and a complementary idempotent e with R e = R c^s certifies
 * projectivity (R = R c^s + ann(c^s), Fitting).
 */
struct BassFlatDatum {
  std::vector<Vec> prefix;
  std::vector<Vec> period;
  std::vector<std::size_t> chain_sizes;  // dim R c^k for k = 0..s
  std::size_t stabilization = 0;         // s
  Subspace colimit;                      // R c^s as a left ideal
  Vec idempotent;                        // e with R e = colimit
  bool projective = false;
};
BassFlatDatum bass_flat(const StructureAlgebra& r, const std::vector<Vec>& prefix, const std::vector<Vec>& period);
/// Seeded sampler: prefix and period of lengths 0..2 and 1..3.
BassFlatDatum bass_flat_sample(const StructureAlgebra& r, std::uint64_t seed);

/// N_1 -> N_2 -> ... -> N_d with connecting homomorphisms.
struct OmegaSystem {
  std::vector<FiniteModule> members;
  std::vector<Matrix> connecting;  // connecting[n] : members[n] -> members[n + 1]
  /// Maps from this stage on are isomorphisms, also beyond the truncation.
  std::optional<std::size_t> stable_from;
  /// Ground ring F[x] acting through the finite quotients; x is the basis element `x_index`.
  bool polynomial_ground = false;
  std::size_t x_index = 1;
};
OmegaSystem uniserial_system(const FiniteField& f, std::size_t d);

enum class SplitVerdict { Split, NotSplit, Unknown };
std::string to_string(SplitVerdict v);

/// For each K < d: nonzero elements of N_1 + ... + N_K have x-height <= bound[K-1], while the
/// socle generator of the colimit is x^K-divisible at stage K + 1 (witness element).
struct HeightObstruction {
  std::vector<std::size_t> height_bound;
  std::vector<Vec> divisor;  // divisor[K-1] in N_{K+1} with divisor * x^K = image of the generator
};

struct SplitReport {
  SplitVerdict verdict = SplitVerdict::Unknown;
  std::string regime;
  std::vector<Matrix> section;  // colimit -> N_n per component
  std::optional<HeightObstruction> obstruction;
  std::size_t depth = 0;
};
/// Throws std::invalid_argument if a connecting map is not a homomorphism.
SplitReport split_omega_limit_check(const OmegaSystem& s, std::size_t depth);
std::optional<std::string> verify_split_report(const OmegaSystem& s, const SplitReport& r);

enum class SigmaKind { Certificate, Witness };
struct SigmaCoperfectResult {
  SigmaKind kind = SigmaKind::Certificate;
  std::size_t depth = 0;
  std::size_t level = 0;          // N
  std::size_t copies = 0;         // largest k searched in M^k
  std::size_t max_chain = 0;      // longest chain found
  std::size_t chain_copies = 0;   // k where it was found
  std::optional<std::size_t> length_bound;  // exact data: length of E as a right module
  CyclicChain chain;
  bool exhaustive = false;
  bool refined = false;           // witness re-verified at level N + 1
};
/**
 * Strictly descending chains of cyclic E_N-submodules of M_N^k, k <= min(d, 3). For exact data the
 * chains are bounded by the length of E_N; for truncated data a chain of length d is a witness and is
 * re-verified over E_{N+1} when the tower has a further component.
 */
SigmaCoperfectResult sigma_coperfect_check(const EndoTower& t, std::size_t level, std::size_t depth);

struct BridgeReport {
  PerfectDecompositionReport perfect;
  SigmaCoperfectResult sigma;
  std::vector<bool> endo_levels_semisimple;
  bool module_semisimple = false;
  bool consistent = false;
  std::vector<std::string> transcript;
};
/// Cross-checks the perfect-decomposition verdict against Sigma-coperfectness of the End tower.
BridgeReport perfectness_bridge(const FiniteModule& m, std::size_t depth, std::uint64_t seed = 1);
/// Family version: the tower of its truncated sums (one extra component is used for refinement).
BridgeReport perfectness_bridge(const ModuleFamily& fam, std::size_t depth, std::uint64_t seed = 1);

}  // namespace toporing
