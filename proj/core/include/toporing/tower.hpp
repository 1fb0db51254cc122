#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toporing/algebra.hpp"
#include "toporing/lifting.hpp"
#include "toporing/wedderburn.hpp"

namespace toporing {

/// Finite truncation of an infinite tower, or an exact finite ring (transitions eventually iso).
enum class TowerIntent { Truncation, Exact };

/**
 * Inverse system R_0 <- R_1 <- ... <- R_N of finite algebras over one field. transitions[n] is the
 * surjective unital homomorphism R_{n+1} -> R_n (dim R_{n+1} x dim R_n). An element of the limit is
 * represented at truncation by its image in R_N.
 */
struct RingTower {
  std::string name;
  std::vector<StructureAlgebra> levels;
  std::vector<Matrix> transitions;
  TowerIntent intent = TowerIntent::Truncation;

  std::size_t depth() const { return levels.size(); }
  const FiniteField& field() const { return levels.front().field(); }
  /// Composite R_from -> R_to for to <= from.
  Matrix projection(std::size_t from, std::size_t to) const;
  Vec project(const Vec& x, std::size_t from, std::size_t to) const;
};

struct TowerDiagnostic {
  std::size_t level = 0;  // the transition R_{level+1} -> R_level, or the level itself
  std::string message;
};
std::vector<TowerDiagnostic> validate_tower(const RingTower& t);

/// Validates and returns the tower; throws TowerError carrying the diagnostics.
struct TowerError : std::invalid_argument {
  std::vector<TowerDiagnostic> diagnostics;
  explicit TowerError(std::vector<TowerDiagnostic> d);
};
RingTower build_tower(std::string name, std::vector<StructureAlgebra> levels, std::vector<Matrix> transitions,
                      TowerIntent intent = TowerIntent::Truncation);

/// R_n = A for n <= depth - 1, identity transitions.
RingTower constant_tower(const StructureAlgebra& a, std::size_t depth);
/// R_n = F[x]/(x^(n+1)), reduction transitions.
RingTower adic_tower(const FiniteField& f, std::size_t depth);
/// R_n = Mat_k(F[x]/(x^(n+1))), entrywise reduction.
RingTower matrix_adic_tower(const FiniteField& f, std::size_t k, std::size_t depth);
/**
 * R_n = product of the first initial + n factors, transitions dropping the last factor. All factors
 * must share the base field.
 */
RingTower product_tower(const std::vector<StructureAlgebra>& factors, std::size_t initial);

/// Per-level two-sided ideals H_n of a tower.
struct IdealTower {
  std::vector<Subspace> levels;
};

/// tp(R_n / I) for I = ker(R_n -> R_m), computed as R_n/(I + H_n) and from the radical of R_m.
struct TpCheck {
  std::size_t level = 0;
  std::size_t quotient_level = 0;
  bool agrees = false;
};

struct RadicalTowerReport {
  IdealTower radical;
  std::vector<bool> transition_surjective;  // pi(H_{n+1}) = H_n
  std::vector<TpCheck> tp_checks;
  std::vector<bool> maximal_oracle;  // per level: radical = intersection of maximal right ideals (small levels)
  std::vector<bool> maximal_oracle_ran;
  bool ok() const;
};
RadicalTowerReport topological_jacobson_radical(const RingTower& t);

/// Per-level nilpotency indices k_n with H_n^(k_n) = 0.
struct TowerNilpotencyCertificate {
  std::vector<std::size_t> indices;
  std::size_t depth = 0;
};
/// Throws std::invalid_argument if some H_n is not inside rad(R_n) (then H is not topologically nil).
TowerNilpotencyCertificate t_nilpotency_check(const RingTower& t, const IdealTower& h, std::size_t depth);

/// Quotient tower R_n / H_n with induced transitions.
struct QuotientTower {
  RingTower tower;
  std::vector<Quotient> quotients;
};
QuotientTower quotient_tower(const RingTower& t, const IdealTower& h);

/**
 * Lift of an X-indexed family of the quotient tower: lifts[x][n] in R_n with
 * pi(lifts[x][n+1]) = lifts[x][n] and lifts[x][n] + H_n = family[x] at level n. The family is
 * zero-convergent at truncation when member x vanishes below level x.
 */
struct StrongClosureCertificate {
  std::vector<std::vector<Vec>> family;  // family[x][n] in S_n
  std::vector<std::vector<Vec>> lifts;   // lifts[x][n] in R_n
  std::vector<std::size_t> repairs;      // per x, number of levels where the section was corrected
  std::size_t depth = 0;
  std::uint64_t seed = 0;
};
std::optional<std::string> verify_strong_closure(const RingTower& t, const IdealTower& h, const StrongClosureCertificate& c);

/**
 * Lifts a seeded random zero-convergent family of `x_size` elements of the quotient tower, by a
 * section at each level repaired through the surjectivity of the H transitions. Every lift is
 * verified; throws std::logic_error on failure.
 */
StrongClosureCertificate strongly_closed_check(const RingTower& t, const IdealTower& h, std::size_t x_size,
                                               std::size_t depth, std::uint64_t seed = 1);
/// Same for a given family (family[x][n] in S_n, compatible).
StrongClosureCertificate lift_zero_convergent_family(const RingTower& t, const IdealTower& h,
                                                     const std::vector<std::vector<Vec>>& family);

struct SemisimpleClassification {
  bool semisimple = false;
  std::size_t witness_level = 0;  // first level with nonzero radical
  FactorMultiset factors;         // union of newly appearing factors
  std::vector<std::vector<std::optional<std::size_t>>> matching;  // component of R_{n+1} -> component of R_n
};
SemisimpleClassification classify_semisimple(const RingTower& t, std::uint64_t seed = 1);

enum class TowerVerdict { Perfect, NotPerfect, Unknown };
std::string to_string(TowerVerdict v);

struct PerfectnessReport {
  RadicalTowerReport radical;
  TowerNilpotencyCertificate nilpotency;
  StrongClosureCertificate strong_closure;
  SemisimpleClassification quotient;
  TowerVerdict verdict = TowerVerdict::Unknown;
  std::string reason;
  std::vector<std::string> implied;  // conditions equivalent to the verdict on this class
  std::size_t depth = 0;
  std::uint64_t seed = 0;
};
PerfectnessReport classify_perfect(const RingTower& t, std::size_t depth, std::uint64_t seed = 1);

/// Levelwise lift of f (given at the top level) with per-level Newton data.
struct TowerLift {
  std::vector<Vec> levels;
  std::vector<IdempotentLift> per_level;
};
/**
 * Lifts f in R_N modulo H. Each level is lifted on its own and checked equal to the projection of
 * the top lift; e^2 = e, e - f in H_n and e in f R_n f are verified at every level.
 */
TowerLift lift_idempotent_tower(const RingTower& t, const IdealTower& h, const Vec& f);

struct TowerFamily {
  std::vector<IdempotentFamily> levels;
};
TowerFamily lift_orthogonal_family_tower(const RingTower& t, const IdealTower& h, const std::vector<Vec>& family,
                                         SideChoice side = SideChoice::Left);
TowerFamily orthogonalize_tower(const RingTower& t, const IdealTower& h, const std::vector<Vec>& family,
                                SideChoice side = SideChoice::Left);
/**
 * Lifts a complete orthogonal family of the quotient tower R/H (given at the top level): the family
 * is first lifted through the strong-closure section (with `perturb` adding seeded elements of H),
 * then made orthogonal and idempotent. Verifies that the lift reduces to the input.
 */
TowerFamily lift_from_quotient(const RingTower& t, const IdealTower& h, const std::vector<Vec>& quotient_family,
                               bool perturb = false, std::uint64_t seed = 1);

/// Some power of x that is idempotent (finite rings).
Vec idempotent_power(const StructureAlgebra& a, const Vec& x);

}  // namespace toporing
