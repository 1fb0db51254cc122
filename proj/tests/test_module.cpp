#include <gtest/gtest.h>

#include "toporing/constructions.hpp"
#include "toporing/decomposition.hpp"
#include "toporing/lifting.hpp"
#include "toporing/module.hpp"
#include "toporing/radical.hpp"
#include "support.hpp"

using namespace toporing;
using toporing::testing::random_module;

namespace {

const FiniteField kF2 = FiniteField::prime(2);

// Every idempotent of End(M), by enumeration; only 0 and 1 for an indecomposable module.
std::size_t count_idempotents(const StructureAlgebra& e) {
  std::size_t n = 0;
  for (const Vec& v : enumerate_subspace(Subspace::whole(e.field(), e.dim()), 1024)) {
    if (e.mul(v, v) == v) ++n;
  }
  return n;
}

}  // namespace

TEST(Module, RegularModulesValidate) {
  const StructureAlgebra a = upper_triangular(kF2, 2);
  EXPECT_FALSE(validate_module(regular_module(a)).has_value());
  EXPECT_FALSE(validate_module(left_regular_module(a)).has_value());
  FiniteModule bad(a, Side::Right, 3, std::vector<Matrix>(3, Matrix::identity(kF2, 3)));
  EXPECT_TRUE(validate_module(bad).has_value());
}

TEST(Module, CyclicSubmodules) {
  const StructureAlgebra a = truncated_polynomial(kF2, 3);
  const FiniteModule m = regular_module(a);
  EXPECT_EQ(cyclic_submodule(m, m.zero()).dim(), 0U);
  EXPECT_EQ(cyclic_submodule(m, a.one()).dim(), 3U);
  EXPECT_EQ(cyclic_submodule(m, a.basis(1)), Subspace::span(kF2, 3, {a.basis(1), a.basis(2)}));
}

TEST(Module, RadicalAndTop) {
  const StructureAlgebra a = truncated_polynomial(kF2, 3);
  const FiniteModule m = regular_module(a);
  EXPECT_EQ(radical_of_module(m), Subspace::span(kF2, 3, {a.basis(1), a.basis(2)}));
  EXPECT_EQ(top(m).module.dim(), 1U);
  const FiniteModule t = regular_module(upper_triangular(kF2, 2));
  EXPECT_EQ(radical_of_module(t), radical_by_maximals(t));
  EXPECT_EQ(radical_of_module(t).dim(), 1U);
  const FiniteModule s = regular_module(matrix_algebra(kF2, 2));
  EXPECT_EQ(radical_of_module(s).dim(), 0U);
}

TEST(Module, RadicalMatchesMaximalsOnRandomModules) {
  Rng rng(17);
  for (int t = 0; t < 25; ++t) {
    const FiniteField f = FiniteField::prime(t % 3 == 0 ? 3 : 2);
    const StructureAlgebra a = random_algebra(f, rng.next(), 4);
    const FiniteModule m = random_module(a, rng, f.order() == 2 ? 10 : 6);
    EXPECT_EQ(radical_of_module(m), radical_by_maximals(m)) << "trial " << t;
  }
}

TEST(Module, EndoAlgebraExamples) {
  // S + S with S the simple F_2-module of Mat_2(F_2)... over a field: End(F_2^2) = Mat_2(F_2)
  const StructureAlgebra f2(kF2, 1, {1}, {1});
  const FiniteModule s = regular_module(f2);
  const EndoAlgebra e = endo_algebra(direct_sum({s, s}));
  EXPECT_EQ(e.algebra.dim(), 4U);
  EXPECT_EQ(radical(e.algebra).space.dim(), 0U);
  EXPECT_EQ(factor_multiset(wedderburn(e.algebra)), (FactorMultiset{{2, 2}}));

  const StructureAlgebra r = truncated_polynomial(kF2, 2);
  const EndoAlgebra er = endo_algebra(regular_module(r));
  EXPECT_EQ(er.algebra.dim(), 2U);
  EXPECT_EQ(radical(er.algebra).space.dim(), 1U);
  EXPECT_EQ(center(er.algebra).dim(), 2U);

  // Column space of Mat_2(F_2): simple, End = F_2.
  const StructureAlgebra m2 = matrix_algebra(kF2, 2);
  const FiniteModule col(m2, Side::Right, 2, m2.representation());
  EXPECT_FALSE(validate_module(col).has_value());
  EXPECT_EQ(endo_algebra(col).algebra.dim(), hom_space(col, col).size());
  EXPECT_EQ(endo_algebra(col).algebra.dim(), 1U);
}

TEST(Decompose, SimpleModule) {
  const StructureAlgebra m2 = matrix_algebra(kF2, 2);
  const FiniteModule col(m2, Side::Right, 2, m2.representation());
  const DecompositionCertificate c = decompose_indecomposable(col);
  EXPECT_EQ(c.summands.size(), 1U);
  EXPECT_FALSE(verify_decomposition(c).has_value());
}

TEST(Decompose, TwoNonIsomorphicIndecomposables) {
  const StructureAlgebra r = truncated_polynomial(kF2, 2);
  const FiniteModule simple = cyclic_quotient(r, Subspace::span(kF2, 2, {r.basis(1)}));
  const FiniteModule m = direct_sum({simple, regular_module(r)});
  const DecompositionCertificate c = decompose_indecomposable(m);
  EXPECT_EQ(c.summands.size(), 2U);
  EXPECT_EQ(c.classes.size(), 2U);
}

TEST(Decompose, IsomorphicSummandsShareAClass) {
  const StructureAlgebra m2 = matrix_algebra(kF2, 2);
  const FiniteModule col(m2, Side::Right, 2, m2.representation());
  const DecompositionCertificate c = decompose_indecomposable(direct_sum({col, col}));
  EXPECT_EQ(c.summands.size(), 2U);
  EXPECT_EQ(c.classes.size(), 1U);
}

TEST(Decompose, RandomModulesKrullSchmidt) {
  Rng rng(23);
  for (int t = 0; t < 20; ++t) {
    const FiniteField f = FiniteField::prime(t % 4 == 0 ? 3 : 2);
    const StructureAlgebra a = random_algebra(f, rng.next(), 5);
    const FiniteModule m = random_module(a, rng, 8);
    const DecompositionCertificate c1 = decompose_indecomposable(m, rng.next());
    const DecompositionCertificate c2 = decompose_indecomposable(m, rng.next());
    ASSERT_FALSE(verify_decomposition(c1).has_value());
    ASSERT_EQ(c1.summands.size(), c2.summands.size());
    std::vector<bool> used(c2.summands.size(), false);
    for (const Summand& s : c1.summands) {
      bool matched = false;
      for (std::size_t j = 0; j < c2.summands.size() && !matched; ++j) {
        if (!used[j] && indecomposable_isomorphism(s.module, c2.summands[j].module)) matched = used[j] = true;
      }
      EXPECT_TRUE(matched) << "trial " << t;
      const EndoAlgebra e = endo_algebra(s.module);
      if (algebra_cardinality(e.algebra) != 0 && algebra_cardinality(e.algebra) <= 1024) {
        EXPECT_EQ(count_idempotents(e.algebra), 2U);
      }
      EXPECT_EQ(decompose_indecomposable(s.module).summands.size(), 1U);
    }
    EXPECT_TRUE(find_isomorphism(m, direct_sum([&] {
      std::vector<FiniteModule> parts;
      for (const Summand& s : c2.summands) parts.push_back(s.module);
      return parts;
    }())).has_value());
  }
}

TEST(Module, CompositionLength) {
  EXPECT_EQ(composition_length(regular_module(truncated_polynomial(kF2, 4))), 4U);
  const StructureAlgebra m2 = matrix_algebra(kF2, 2);
  EXPECT_EQ(composition_length(regular_module(m2)), 2U);
  EXPECT_EQ(composition_length(regular_module(cyclic_group_algebra(kF2, 3))), 2U);
  EXPECT_EQ(composition_length(regular_module(upper_triangular(kF2, 3))), 6U);
}

TEST(Lifting, SingleIdempotentExamples) {
  const FiniteField f3 = FiniteField::prime(3);
  const StructureAlgebra r3 = truncated_polynomial(f3, 2);
  const Subspace h3 = Subspace::span(f3, 2, {r3.basis(1)});
  EXPECT_EQ(lift_idempotent(r3, Vec{1, 1}, h3).e, r3.one());
  EXPECT_EQ(idempotents_in_coset(r3, Vec{1, 1}, h3), std::vector<Vec>{r3.one()});
  const StructureAlgebra r2 = truncated_polynomial(kF2, 2);
  const Subspace h2 = Subspace::span(kF2, 2, {r2.basis(1)});
  EXPECT_EQ(lift_idempotent(r2, Vec{0, 1}, h2).e, r2.zero());
  EXPECT_EQ(lift_idempotent(r2, r2.one(), h2).iterations, 0U);
  EXPECT_THROW(lift_idempotent(r3, Vec{2, 0}, Subspace(f3, 2)), std::invalid_argument);
}

TEST(Lifting, OrthogonalizeMatrixExample) {
  const StructureAlgebra r = truncated_polynomial(kF2, 2);
  const StructureAlgebra m = matrix_ring(r, 2);
  const Vec o{0, 0}, one{1, 0}, x{0, 1};
  const Vec e1 = matrix_ring_element(r, 2, {one, o, o, o});
  const Vec e2 = matrix_ring_element(r, 2, {o, o, x, one});
  std::vector<Vec> hg;
  for (std::size_t e = 0; e < 4; ++e) hg.push_back(unit_vec(8, e * 2 + 1));
  const Subspace h = Subspace::span(kF2, 8, hg);
  const IdempotentFamily fam = orthogonalize(m, {e1, e2}, h);
  EXPECT_EQ(fam.elements[0], matrix_ring_element(r, 2, {one, o, x, o}));
  EXPECT_EQ(fam.elements[1], matrix_ring_element(r, 2, {o, o, x, one}));
  EXPECT_FALSE(check_complete_orthogonal(m, fam).has_value());
  const IdempotentFamily lifted = lift_orthogonal_family(m, {e1, e2}, h);
  EXPECT_EQ(lifted.elements, fam.elements);
}

TEST(Lifting, FamilyInTruncatedPolynomial) {
  const StructureAlgebra r = truncated_polynomial(kF2, 2);
  const Subspace h = Subspace::span(kF2, 2, {r.basis(1)});
  const IdempotentFamily fam = lift_orthogonal_family(r, {Vec{1, 1}, Vec{0, 1}}, h);
  EXPECT_EQ(fam.elements[0], r.one());
  EXPECT_EQ(fam.elements[1], r.zero());
}

TEST(Lifting, UnitSumKeepsOrthogonalInput) {
  const StructureAlgebra m = matrix_algebra(kF2, 3);
  std::vector<Vec> fam{m.basis(0), m.basis(4), m.basis(8)};
  const IdempotentFamily out = orthogonalize(m, fam, Subspace(kF2, 9));
  EXPECT_EQ(out.elements, fam);
}
