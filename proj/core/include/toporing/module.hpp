#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "toporing/algebra.hpp"
#include "toporing/rng.hpp"

namespace toporing {

enum class Side { Right, Left };

/**
 * Finite module over a StructureAlgebra, one action matrix per algebra basis element, acting on
 * row vectors. For a right module v.a = v * Act(a) and Act(ab) = Act(a) Act(b); for a left module
 * a.v = v * Act(a) and Act(ab) = Act(b) Act(a). A left A-module is the same data as a right module
 * over the opposite algebra, which is how the operations below treat it.
 */
class FiniteModule {
 public:
  FiniteModule() = default;
  FiniteModule(StructureAlgebra a, Side side, std::size_t dim, std::vector<Matrix> action);

  const StructureAlgebra& algebra() const { return algebra_; }
  const FiniteField& field() const { return algebra_.field(); }
  Side side() const { return side_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& action() const { return action_; }
  const Matrix& action(std::size_t i) const { return action_[i]; }
  /// Act(a) = sum a_i Act_i
  Matrix act_matrix(const Vec& a) const;
  Vec act(const Vec& v, const Vec& a) const { return act_matrix(a).apply(v); }
  Vec zero() const { return Vec(dim_, 0); }

 private:
  StructureAlgebra algebra_;
  Side side_ = Side::Right;
  std::size_t dim_ = 0;
  std::vector<Matrix> action_;
};

/// Checks shapes, the unit and the composition rule on all basis pairs.
std::optional<std::string> validate_module(const FiniteModule& m);

/// The same matrices as a right module over the opposite algebra when `m` is a left module.
FiniteModule as_right(const FiniteModule& m);

/// A_A
FiniteModule regular_module(const StructureAlgebra& a);
/// _A A
FiniteModule left_regular_module(const StructureAlgebra& a);
/// A/I as a right module, I a right ideal.
FiniteModule cyclic_quotient(const StructureAlgebra& a, const Subspace& right_ideal);
FiniteModule direct_sum(const std::vector<FiniteModule>& parts);
/// Same module regarded over a quotient-preimage: restriction of scalars along B -> A given by
/// `hom` (dim B x dim A).
FiniteModule restrict_scalars(const FiniteModule& m, const StructureAlgebra& b, const Matrix& hom);

/// span{m.a : a in A}
Subspace cyclic_submodule(const FiniteModule& m, const Vec& v);
Subspace submodule_generated(const FiniteModule& m, const std::vector<Vec>& gens);
bool is_submodule(const FiniteModule& m, const Subspace& s);
/// Submodule as a module in the echelon basis of `s`.
FiniteModule restrict_module(const FiniteModule& m, const Subspace& s);

struct QuotientModule {
  FiniteModule module;
  Matrix projection;  // dim M x dim(M/S)
  Subspace kernel;
};
QuotientModule quotient_module(const FiniteModule& m, const Subspace& s);

/// rad(M) = H(A) M, with H(A) the radical of the algebra.
Subspace radical_of_module(const FiniteModule& m);
/// M / rad(M)
QuotientModule top(const FiniteModule& m);
/// Maximal submodules found as the maximal cores {v : v.A in H} of hyperplanes H (|M| <= 1024).
std::vector<Subspace> maximal_submodules(const FiniteModule& m);
/// Intersection of all maximal submodules (the oracle for radical_of_module).
Subspace radical_by_maximals(const FiniteModule& m);

/// Basis of Hom_A(M, N): matrices X (dim M x dim N) with Act^M(a) X = X Act^N(a).
std::vector<Matrix> hom_space(const FiniteModule& m, const FiniteModule& n);

/**
 * E = End_A(M)^op: the commutant, multiplied as row-convention matrices (so M is a right
 * E-module via v -> v F). The algebra carries the commutant basis as its representation.
 */
struct EndoAlgebra {
  StructureAlgebra algebra;
  std::vector<Matrix> basis;  // commutant basis, element i of E acts as basis[i]
  FiniteModule module;        // M as a right E-module
  /// Coordinates in E of a commutant matrix.
  std::optional<Vec> coords(const Matrix& f) const;
  Matrix matrix(const Vec& e) const;
};
EndoAlgebra endo_algebra(const FiniteModule& m);

/// Annihilator {a : M.a = 0}, a two-sided ideal.
Subspace annihilator(const FiniteModule& m);

/// Number of elements q^dim, or 0 if it exceeds 2^62.
std::size_t module_cardinality(const FiniteModule& m);

/// Seeded sample: A^k (k = 1, 2) modulo a random submodule, redrawn until 0 < dim <= max_dim.
FiniteModule random_module(const StructureAlgebra& a, Rng& rng, std::size_t max_dim);

/// Matrix of a family of subspace basis vectors, convenience for enumeration.
std::vector<Vec> enumerate_subspace(const Subspace& s, std::size_t limit);

}  // namespace toporing
