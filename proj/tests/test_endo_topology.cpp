#include <gtest/gtest.h>

#include "toporing/constructions.hpp"
#include "toporing/endo_topology.hpp"
#include "toporing/radical.hpp"
#include "toporing/wedderburn.hpp"

using namespace toporing;

namespace {

const FiniteField kF2 = FiniteField::prime(2);

Subspace span_of(const StructureAlgebra& r, const std::vector<std::size_t>& idx) {
  std::vector<Vec> vs;
  for (std::size_t i : idx) vs.push_back(r.basis(i));
  return Subspace::span(r.field(), r.dim(), vs);
}

FiniteModule simple_over_f2() { return regular_module(field_as_algebra(kF2)); }

}  // namespace

TEST(EndoTower, SingleComponentIsItsEndomorphismRing) {
  const auto r = truncated_polynomial(kF2, 3);
  const EndoTower t = endo_tower({regular_module(r)}, 1);
  ASSERT_EQ(t.depth(), 1u);
  EXPECT_EQ(t.levels[0].endo.algebra.dim(), endo_algebra(regular_module(r)).algebra.dim());
  EXPECT_EQ(t.levels[0].base.size(), 1u);
  EXPECT_EQ(t.levels[0].base[0].dim(), 0u);
}

TEST(EndoTower, TwoUniserialComponents) {
  const auto r = truncated_polynomial(kF2, 2);
  const FiniteModule s = cyclic_quotient(r, span_of(r, {1}));
  const EndoTower t = endo_tower({s, regular_module(r)}, 2);
  // Oracle: the single commutant of the direct sum.
  const EndoAlgebra whole = endo_algebra(direct_sum({s, regular_module(r)}));
  const EndoAlgebra& e2 = t.levels[1].endo;
  EXPECT_EQ(e2.algebra.dim(), whole.algebra.dim());
  EXPECT_EQ(e2.algebra.dim(), 5u);
  EXPECT_TRUE(validate_algebra(e2.algebra).ok());
  ASSERT_EQ(e2.basis.size(), whole.basis.size());
  for (const Matrix& b : e2.basis) EXPECT_TRUE(whole.coords(b).has_value());
  ASSERT_EQ(t.levels[1].base.size(), 2u);
  EXPECT_EQ(t.levels[1].base[0].dim(), 3u);
  EXPECT_EQ(t.levels[1].base[1].dim(), 0u);
  EXPECT_EQ(t.levels[0].embedding.rows(), 1u);
  EXPECT_EQ(t.levels[0].embedding.cols(), 5u);
}

TEST(EndoTower, SimpleComponentGivesMatrixRing) {
  const FiniteModule s = simple_over_f2();
  const EndoTower t = endo_tower({s, s, s}, 3);
  const StructureAlgebra& e3 = t.levels[2].endo.algebra;
  EXPECT_EQ(e3.dim(), 9u);
  EXPECT_EQ(radical(e3).space.dim(), 0u);
  const FactorMultiset expected = factor_multiset(wedderburn(matrix_algebra(kF2, 3)));
  EXPECT_EQ(factor_multiset(wedderburn(e3)), expected);
  for (std::size_t n = 0; n < 3; ++n) EXPECT_EQ(t.levels[n].endo.algebra.dim(), (n + 1) * (n + 1));
}

TEST(Realization, FieldIsItsOwnEndomorphismRing) {
  const auto r = field_as_algebra(kF2);
  const EndoRealization z = realize_ring_as_endo(r, {Subspace(kF2, 1)});
  EXPECT_TRUE(z.verified);
  EXPECT_EQ(z.module.dim(), 1u);
  EXPECT_EQ(z.endo.algebra.dim(), 1u);
}

TEST(Realization, DualNumbers) {
  const auto r = truncated_polynomial(kF2, 2);
  const EndoRealization z = realize_ring_as_endo(r, {Subspace(kF2, 2), span_of(r, {1})});
  EXPECT_TRUE(z.verified);
  EXPECT_EQ(z.module.dim(), 3u);
  EXPECT_EQ(z.endo.algebra.dim(), 2u);
  EXPECT_FALSE(check_homomorphism(AlgebraMap{r, z.endo.algebra, z.to_endo}).has_value());
}

TEST(Realization, MatrixRingWithMaximalRightIdeal) {
  const auto r = matrix_algebra(kF2, 2);
  const Subspace first_row_zero = span_of(r, {2, 3});
  ASSERT_TRUE(is_right_ideal(r, first_row_zero));
  const EndoRealization z = realize_ring_as_endo(r, {Subspace(kF2, 4), first_row_zero});
  EXPECT_TRUE(z.verified);
  EXPECT_EQ(z.endo.algebra.dim(), 4u);
  EXPECT_TRUE((z.to_endo * z.from_endo).is_identity());
}

TEST(Realization, RequiresAFaithfulBase) {
  const auto r = truncated_polynomial(kF2, 2);
  EXPECT_THROW(realize_ring_as_endo(r, {span_of(r, {1})}), std::invalid_argument);
}

TEST(BassFlat, Examples) {
  const auto dual = truncated_polynomial(kF2, 2);
  const BassFlatDatum one = bass_flat(dual, {}, {dual.one()});
  EXPECT_EQ(one.colimit.dim(), 2u);
  EXPECT_EQ(one.stabilization, 0u);
  EXPECT_TRUE(one.projective);

  const BassFlatDatum x = bass_flat(dual, {}, {dual.basis(1)});
  EXPECT_EQ(x.colimit.dim(), 0u);
  EXPECT_EQ(x.stabilization, 2u);
  EXPECT_EQ(x.chain_sizes, (std::vector<std::size_t>{2, 1, 0}));
  EXPECT_TRUE(x.projective);

  const auto c3 = cyclic_group_algebra(kF2, 3);
  const BassFlatDatum u = bass_flat(c3, {c3.basis(2)}, {c3.basis(1)});
  EXPECT_EQ(u.colimit.dim(), 3u);
  EXPECT_TRUE(u.projective);
}

TEST(BassFlat, SeededSequencesAreProjective) {
  for (const auto& r : {truncated_polynomial(kF2, 3), cyclic_group_algebra(kF2, 3), upper_triangular(kF2, 2),
                        matrix_algebra(kF2, 2)}) {
    for (std::uint64_t seed = 1; seed <= 100; ++seed) {
      const BassFlatDatum b = bass_flat_sample(r, seed);
      EXPECT_TRUE(b.projective) << "seed " << seed;
      EXPECT_LE(b.stabilization, r.dim());
    }
  }
}

TEST(SplitLimit, ConstantSystemSplits) {
  const auto r = truncated_polynomial(kF2, 2);
  OmegaSystem s;
  s.members.assign(4, regular_module(r));
  s.connecting.assign(3, Matrix::identity(kF2, 2));
  s.stable_from = 0;
  const SplitReport rep = split_omega_limit_check(s, 4);
  EXPECT_EQ(rep.verdict, SplitVerdict::Split);
  EXPECT_FALSE(verify_split_report(s, rep).has_value());
}

TEST(SplitLimit, UniserialChainHasHeightObstruction) {
  const OmegaSystem s = uniserial_system(kF2, 6);
  const SplitReport rep = split_omega_limit_check(s, 6);
  EXPECT_EQ(rep.verdict, SplitVerdict::NotSplit);
  ASSERT_TRUE(rep.obstruction.has_value());
  ASSERT_EQ(rep.obstruction->height_bound.size(), 5u);
  for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(rep.obstruction->height_bound[k - 1], k - 1);
  EXPECT_FALSE(verify_split_report(s, rep).has_value());
  SplitReport bad = rep;
  bad.obstruction->divisor[2][0] ^= 1;
  EXPECT_TRUE(verify_split_report(s, bad).has_value());
}

TEST(SplitLimit, IdempotentImagesOverGroupAlgebra) {
  const auto r = cyclic_group_algebra(kF2, 3);
  const Vec e = r.add(r.add(r.basis(0), r.basis(1)), r.basis(2));
  ASSERT_EQ(r.mul(e, e), e);
  const FiniteModule reg = regular_module(r);
  const Subspace er = Subspace::whole(kF2, 3).image(r.left_mult(e));
  const QuotientModule q = quotient_module(reg, preimage(r.left_mult(e), Subspace(kF2, 3)));
  // N_1 = R, N_2 = N_3 = eR realized as R / ker(e .), connecting map r -> class of r.
  OmegaSystem s;
  s.members = {reg, q.module, q.module};
  s.connecting = {q.projection, Matrix::identity(kF2, q.module.dim())};
  s.stable_from = 1;
  EXPECT_EQ(q.module.dim(), er.dim());
  const SplitReport rep = split_omega_limit_check(s, 3);
  EXPECT_EQ(rep.verdict, SplitVerdict::Split);
  EXPECT_FALSE(verify_split_report(s, rep).has_value());
}

TEST(SplitLimit, RejectsNonHomomorphisms) {
  OmegaSystem s = uniserial_system(kF2, 3);
  s.connecting[0] = Matrix::identity(kF2, 2).block(0, 0, 1, 2);
  s.connecting[1] = Matrix(kF2, 2, 3);
  s.connecting[1](0, 0) = 1;
  EXPECT_THROW(split_omega_limit_check(s, 3), std::invalid_argument);
}

TEST(SplitLimit, UndecidedRegimeIsUnknown) {
  const auto r = truncated_polynomial(kF2, 2);
  OmegaSystem s;
  s.members.assign(3, regular_module(r));
  s.connecting.assign(2, Matrix::identity(kF2, 2));
  EXPECT_EQ(split_omega_limit_check(s, 3).verdict, SplitVerdict::Unknown);
}

TEST(SigmaCoperfect, SimpleModule) {
  const EndoTower t = endo_tower({simple_over_f2()}, 1);
  for (std::size_t d : {1u, 3u, 6u}) {
    const SigmaCoperfectResult r = sigma_coperfect_check(t, 1, d);
    EXPECT_EQ(r.kind, SigmaKind::Certificate);
    EXPECT_EQ(r.max_chain, 1u);
  }
}

TEST(SigmaCoperfect, ShowcaseFamilyHasRefinedWitness) {
  const ModuleFamily fam = uniserial_family(kF2, 6);
  const EndoTower t = endo_tower(fam.members, 6, true);
  const SigmaCoperfectResult r = sigma_coperfect_check(t, 5, 5);
  EXPECT_EQ(r.kind, SigmaKind::Witness);
  EXPECT_GE(r.max_chain, 5u);
  EXPECT_TRUE(r.refined);
  const FiniteModule mk = direct_sum(std::vector<FiniteModule>(r.chain_copies, t.levels[4].endo.module));
  EXPECT_FALSE(verify_cyclic_chain(mk, r.chain).has_value());
}

TEST(SigmaCoperfect, CubeOfSimpleIsBounded) {
  const FiniteModule s = simple_over_f2();
  const EndoTower t = endo_tower({s, s, s}, 3);
  const SigmaCoperfectResult r = sigma_coperfect_check(t, 3, 6);
  EXPECT_EQ(r.kind, SigmaKind::Certificate);
  ASSERT_TRUE(r.length_bound.has_value());
  EXPECT_EQ(*r.length_bound, 3u);
  EXPECT_LE(r.max_chain, 3u);
  EXPECT_TRUE(r.exhaustive);
}

TEST(Bridge, FiniteModuleIsConsistent) {
  const auto r = truncated_polynomial(kF2, 2);
  const FiniteModule m = direct_sum({regular_module(r), cyclic_quotient(r, span_of(r, {1}))});
  const BridgeReport b = perfectness_bridge(m, 4);
  EXPECT_EQ(b.perfect.verdict, PerfectVerdict::Perfect);
  EXPECT_EQ(b.sigma.kind, SigmaKind::Certificate);
  EXPECT_TRUE(b.consistent);
}

TEST(Bridge, ShowcaseFamilyIsConsistent) {
  const BridgeReport b = perfectness_bridge(uniserial_family(kF2, 6), 5);
  EXPECT_EQ(b.perfect.verdict, PerfectVerdict::NotPerfect);
  EXPECT_EQ(b.sigma.kind, SigmaKind::Witness);
  EXPECT_TRUE(b.consistent);
}

TEST(Bridge, SemisimpleModuleHasSemisimpleEndLevels) {
  const auto r = matrix_algebra(kF2, 2);
  const FiniteModule s = cyclic_quotient(r, span_of(r, {2, 3}));
  const BridgeReport b = perfectness_bridge(direct_sum({s, s}), 3);
  EXPECT_TRUE(b.module_semisimple);
  EXPECT_EQ(b.perfect.verdict, PerfectVerdict::Perfect);
  ASSERT_FALSE(b.endo_levels_semisimple.empty());
  for (bool x : b.endo_levels_semisimple) EXPECT_TRUE(x);
  EXPECT_TRUE(b.consistent);
}
