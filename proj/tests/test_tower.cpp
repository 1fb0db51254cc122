#include <gtest/gtest.h>

#include "support.hpp"
#include "toporing/constructions.hpp"
#include "toporing/decomposition.hpp"
#include "toporing/radical.hpp"
#include "toporing/tower.hpp"

using namespace toporing;
using toporing::testing::random_module;

namespace {

const FiniteField kF2 = FiniteField::prime(2);
const FiniteField kF3 = FiniteField::prime(3);

Vec mono(std::size_t dim, std::size_t k) { return unit_vec(dim, k); }

}  // namespace

TEST(Tower, BuiltinTowersValidate) {
  EXPECT_TRUE(validate_tower(constant_tower(field_as_algebra(kF2), 4)).empty());
  EXPECT_TRUE(validate_tower(adic_tower(kF2, 5)).empty());
  std::vector<StructureAlgebra> f3(5, field_as_algebra(kF3));
  const RingTower p = product_tower(f3, 1);
  EXPECT_TRUE(validate_tower(p).empty());
  EXPECT_EQ(p.levels.back().dim(), 5u);
  EXPECT_TRUE(validate_tower(matrix_adic_tower(kF2, 2, 3)).empty());
}

TEST(Tower, DefectiveTransitionsAreDiagnosed) {
  const StructureAlgebra a = truncated_polynomial(kF2, 2);
  // not surjective: everything to the multiples of 1 except x -> 0 is fine, so use the zero map
  Matrix zero(kF2, 2, 2);
  EXPECT_THROW(build_tower("bad", {a, a}, {zero}), TowerError);
  // not multiplicative: 1 -> 1, x -> 1 + x
  Matrix m(kF2, 2, 2);
  m(0, 0) = 1;
  m(1, 0) = 1;
  m(1, 1) = 1;
  try {
    build_tower("bad", {a, a}, {m});
    FAIL() << "expected a diagnostic";
  } catch (const TowerError& e) {
    ASSERT_FALSE(e.diagnostics.empty());
    EXPECT_EQ(e.diagnostics.front().level, 0u);
    EXPECT_NE(e.diagnostics.front().message.find("homomorphism"), std::string::npos);
  }
}

TEST(Tower, AdicRadicalMatchesBruteForce) {
  for (const FiniteField& f : {kF2, kF3}) {
    const RingTower t = adic_tower(f, 5);
    const RadicalTowerReport rep = topological_jacobson_radical(t);
    EXPECT_TRUE(rep.ok());
    for (std::size_t n = 0; n < t.depth(); ++n) {
      std::vector<Vec> xs;
      for (std::size_t s = 1; s <= n; ++s) xs.push_back(mono(n + 1, s));
      EXPECT_EQ(rep.radical.levels[n], Subspace::span(f, n + 1, xs));
      EXPECT_EQ(rep.radical.levels[n], radical_bruteforce(t.levels[n]));
    }
    EXPECT_EQ(rep.tp_checks.size(), 15u);
  }
}

TEST(Tower, ProductAndTriangularRadicals) {
  std::vector<StructureAlgebra> f3(4, field_as_algebra(kF3));
  const RadicalTowerReport p = topological_jacobson_radical(product_tower(f3, 1));
  for (const Subspace& h : p.radical.levels) EXPECT_EQ(h.dim(), 0u);
  const StructureAlgebra t2 = upper_triangular(kF2, 2);
  const RadicalTowerReport r = topological_jacobson_radical(constant_tower(t2, 3));
  EXPECT_TRUE(r.ok());
  for (const Subspace& h : r.radical.levels) {
    EXPECT_EQ(h, radical_bruteforce(t2));
    EXPECT_EQ(h, Subspace::span(kF2, 3, {unit_vec(3, 1)}));  // E_12
  }
}

TEST(Tower, NilpotencyIndices) {
  const RingTower t = adic_tower(kF2, 5);
  const IdealTower h = topological_jacobson_radical(t).radical;
  const auto cert = t_nilpotency_check(t, h, 5);
  Rng rng(3);
  for (std::size_t n = 0; n < t.depth(); ++n) {
    EXPECT_EQ(cert.indices[n], n + 1);
    const StructureAlgebra& r = t.levels[n];
    // x^n != 0 while every product of n + 1 elements of H vanishes
    if (n > 0) EXPECT_FALSE(vec_is_zero(r.pow(mono(n + 1, 1), n)));
    for (int s = 0; s < 20; ++s) {
      Vec p = r.one();
      for (std::size_t k = 0; k <= n; ++k) p = r.mul(p, random_in(h.levels[n], rng));
      if (n > 0) EXPECT_TRUE(vec_is_zero(p));
    }
  }
  IdealTower zero;
  for (const auto& r : t.levels) zero.levels.emplace_back(kF2, r.dim());
  for (std::size_t k : t_nilpotency_check(t, zero, 3).indices) EXPECT_EQ(k, 1u);
  const RingTower c = constant_tower(upper_triangular(kF2, 2), 3);
  for (std::size_t k : t_nilpotency_check(c, topological_jacobson_radical(c).radical, 3).indices) EXPECT_EQ(k, 2u);
  IdealTower whole;
  for (const auto& r : t.levels) whole.levels.push_back(Subspace::whole(kF2, r.dim()));
  EXPECT_THROW(t_nilpotency_check(t, whole, 3), std::invalid_argument);
}

TEST(Tower, StrongClosureLifts) {
  const RingTower t = adic_tower(kF2, 4);
  const IdealTower h = topological_jacobson_radical(t).radical;
  const auto cert = strongly_closed_check(t, h, 3, 4, 11);
  ASSERT_EQ(cert.lifts.size(), 3u);
  const QuotientTower q = quotient_tower(t, h);
  for (std::size_t x = 0; x < 3; ++x) {
    for (std::size_t n = 0; n < t.depth(); ++n) {
      EXPECT_EQ(q.quotients[n].projection.apply(cert.lifts[x][n]), cert.family[x][n]);
      if (n + 1 < t.depth()) EXPECT_EQ(t.transitions[n].apply(cert.lifts[x][n + 1]), cert.lifts[x][n]);
    }
  }
  // H = 0: the lift is the family itself
  std::vector<StructureAlgebra> f2(5, field_as_algebra(kF2));
  const RingTower p = product_tower(f2, 1);
  const IdealTower z = topological_jacobson_radical(p).radical;
  const auto id = strongly_closed_check(p, z, 5, 5, 2);
  for (std::size_t x = 0; x < 5; ++x) EXPECT_EQ(id.lifts[x], id.family[x]);
}

TEST(Tower, SemisimpleClassification) {
  const FiniteField f4 = FiniteField::of_order(2, 2);
  const RingTower t = product_tower({field_as_algebra(kF2), matrix_algebra(kF2, 2), field_as_algebra(f4)}, 2);
  const auto c = classify_semisimple(t);
  ASSERT_TRUE(c.semisimple);
  EXPECT_EQ(c.factors, (FactorMultiset{{2, 1}, {2, 2}, {4, 1}}));
  const auto a = classify_semisimple(adic_tower(kF2, 4));
  EXPECT_FALSE(a.semisimple);
  EXPECT_EQ(a.witness_level, 1u);
  const auto f5 = classify_semisimple(constant_tower(field_as_algebra(FiniteField::prime(5)), 3));
  ASSERT_TRUE(f5.semisimple);
  EXPECT_EQ(f5.factors, (FactorMultiset{{5, 1}}));
}

TEST(Tower, SemisimpleLevelsSplitSampledModules) {
  const FiniteField f4 = FiniteField::of_order(2, 2);
  const RingTower t = product_tower({field_as_algebra(kF2), matrix_algebra(kF2, 2), field_as_algebra(f4)}, 2);
  ASSERT_TRUE(classify_semisimple(t).semisimple);
  Rng rng(9);
  for (int s = 0; s < 10; ++s) {
    const FiniteModule m = random_module(t.levels[rng.below(t.depth())], rng, 8);
    const auto dc = decompose_indecomposable(m, rng.next());
    for (const Summand& x : dc.summands) EXPECT_EQ(composition_length(x.module), 1u);
  }
}

TEST(Tower, PerfectnessReports) {
  const auto adic = classify_perfect(adic_tower(kF3, 4), 4);
  EXPECT_EQ(adic.verdict, TowerVerdict::Perfect);
  EXPECT_EQ(adic.quotient.factors, (FactorMultiset{{3, 1}}));
  const auto tri = classify_perfect(constant_tower(upper_triangular(kF2, 2), 3), 3);
  EXPECT_EQ(tri.verdict, TowerVerdict::Perfect);
  EXPECT_EQ(tri.quotient.factors, (FactorMultiset{{2, 1}, {2, 1}}));
  const auto mat = classify_perfect(product_tower({matrix_algebra(kF2, 2), matrix_algebra(kF2, 3)}, 1), 2);
  EXPECT_EQ(mat.verdict, TowerVerdict::Perfect);
  for (const Subspace& h : mat.radical.radical.levels) EXPECT_EQ(h.dim(), 0u);
}

TEST(TowerLifting, SingleLiftsAcrossLevels) {
  const RingTower t = adic_tower(kF3, 4);
  const IdealTower h = topological_jacobson_radical(t).radical;
  // f = 1 + x lifts to 1
  Vec f = t.levels.back().one();
  f[1] = 1;
  const TowerLift l = lift_idempotent_tower(t, h, f);
  for (std::size_t n = 0; n < t.depth(); ++n) {
    EXPECT_EQ(l.levels[n], t.levels[n].one());
    EXPECT_LE(l.per_level[n].iterations, l.per_level[n].iteration_bound);
  }
}

TEST(TowerLifting, PerturbedMatrixFamilyFromQuotient) {
  const StructureAlgebra r = matrix_ring(truncated_polynomial(kF2, 2), 2);
  const RingTower t = constant_tower(r, 2);
  const IdealTower h = topological_jacobson_radical(t).radical;
  const QuotientTower q = quotient_tower(t, h);
  const StructureAlgebra k = truncated_polynomial(kF2, 2);
  const Vec one = k.one();
  const Vec zero = k.zero();
  const Vec e11 = matrix_ring_element(k, 2, {one, zero, zero, zero});
  const Vec e22 = matrix_ring_element(k, 2, {zero, zero, zero, one});
  const std::vector<Vec> fam = {q.quotients.back().projection.apply(e11), q.quotients.back().projection.apply(e22)};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const TowerFamily out = lift_from_quotient(t, h, fam, true, seed);
    for (std::size_t n = 0; n < t.depth(); ++n) EXPECT_FALSE(check_complete_orthogonal(t.levels[n], out.levels[n]).has_value());
  }
}

TEST(TowerLifting, IdempotentPower) {
  const StructureAlgebra a = matrix_algebra(kF3, 2);
  Rng rng(4);
  for (int s = 0; s < 30; ++s) {
    const Vec e = idempotent_power(a, random_element(a, rng));
    EXPECT_EQ(a.mul(e, e), e);
  }
}
