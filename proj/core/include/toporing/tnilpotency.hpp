#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "toporing/decomposition.hpp"
#include "toporing/module.hpp"

namespace toporing {

/// Labelled family of finite modules over one algebra.
struct ModuleFamily {
  std::vector<FiniteModule> members;
  std::vector<std::string> labels;
  /// The family stands for an infinite one (no global length bound is assumed).
  bool truncated = false;
  /// Optional maps member k -> member k+1, tried first by the witness search.
  std::vector<Matrix> connecting;
};

/**
 * Uniserial modules F[x]/(x^n), n = 1..n_max, over A = F[x]/(x^n_max), with the shift maps
 * 1 -> x as connecting maps. Marked truncated: it stands for the family over all n.
 */
ModuleFamily uniserial_family(const FiniteField& f, std::size_t n_max);

/// Harada-Sai: compositions of 2^b - 1 nonisomorphisms between members of length <= b vanish.
struct HaradaSaiCertificate {
  std::size_t length_bound = 0;       // b
  std::size_t composition_bound = 0;  // 2^b - 1
  std::size_t samples = 0;            // sampled compositions verified to be zero
  std::uint64_t seed = 0;
};

/// Nonisomorphisms f_1..f_d between members and an element whose images stay nonzero.
struct NonisoChain {
  std::vector<std::size_t> members;  // d + 1 member indices
  std::vector<Matrix> maps;          // maps[k] : members[k] -> members[k+1]
  Vec element;                       // in members[0]
  std::vector<Vec> images;           // images[k] = element * maps[0] ... maps[k]
  std::size_t length() const { return maps.size(); }
};
std::optional<std::string> verify_chain(const ModuleFamily& fam, const NonisoChain& c);

enum class TNilKind { Certificate, Witness, Unknown };
struct TNilpotencyResult {
  TNilKind kind = TNilKind::Unknown;
  std::optional<HaradaSaiCertificate> certificate;
  std::optional<NonisoChain> witness;
  std::size_t depth = 0;
};

/**
 * Exact families get a Harada-Sai certificate (b = largest composition length), confirmed on
 * `samples` random compositions of radical homomorphisms. Truncated families are searched for a
 * chain of `depth` nonisomorphisms with a surviving element. Throws std::invalid_argument if a
 * member does not have a local endomorphism algebra.
 */
TNilpotencyResult local_T_nilpotency_check(const ModuleFamily& fam, std::size_t depth, std::uint64_t seed = 1,
                                           std::size_t samples = 500);

enum class PerfectVerdict { Perfect, NotPerfect, Unknown };
std::string to_string(PerfectVerdict v);

struct PerfectDecompositionReport {
  PerfectVerdict verdict = PerfectVerdict::Unknown;
  std::optional<DecompositionCertificate> decomposition;
  TNilpotencyResult tnil;
  std::size_t depth = 0;
};

/// Decomposes M and certifies the summand family (always PERFECT for a finite module).
PerfectDecompositionReport perfect_decomposition_verdict(const FiniteModule& m, std::size_t depth, std::uint64_t seed = 1);
PerfectDecompositionReport perfect_decomposition_verdict(const ModuleFamily& fam, std::size_t depth, std::uint64_t seed = 1);

/// Strictly descending chain of cyclic submodules with recorded generators.
struct CyclicChain {
  std::vector<Vec> generators;
  std::vector<Subspace> submodules;
  std::size_t length() const { return submodules.size(); }
};
std::optional<std::string> verify_cyclic_chain(const FiniteModule& m, const CyclicChain& c);

enum class CoperfectKind { Terminates, Chain };
struct CoperfectResult {
  CoperfectKind kind = CoperfectKind::Terminates;
  CyclicChain longest;   // longest chain found, capped at depth
  std::size_t depth = 0;
  bool exhaustive = false;  // every cyclic submodule was explored
};

/**
 * Depth-first search for strictly descending chains of cyclic submodules, memoised on the
 * echelon basis. Candidate generators are all elements when |M| <= 4096, otherwise the basis
 * vectors, the submodule bases and the images of `hints` (extra linear maps of M). Returns Chain
 * once a chain of `depth` nonzero terms is found.
 */
CoperfectResult coperfect_witness_search(const FiniteModule& m, std::size_t depth, const std::vector<Matrix>& hints = {},
                                         std::size_t node_budget = 20000);

}  // namespace toporing
