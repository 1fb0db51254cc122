#include <gtest/gtest.h>

#include "toporing/constructions.hpp"
#include "toporing/radical.hpp"
#include "toporing/wedderburn.hpp"

using namespace toporing;

namespace {

FactorMultiset fm(std::initializer_list<std::pair<std::uint64_t, std::size_t>> l) { return FactorMultiset(l); }

StructureAlgebra f2_field() { return StructureAlgebra(FiniteField::prime(2), 1, {1}, {1}); }

}  // namespace

TEST(Wedderburn, GroupAlgebraC3OverF2) {
  const WedderburnDatum w = wedderburn(cyclic_group_algebra(FiniteField::prime(2), 3));
  EXPECT_EQ(factor_multiset(w), fm({{2, 1}, {4, 1}}));
  EXPECT_FALSE(verify_wedderburn(w).has_value());
  // Ground truth from x^3 - 1 = (x + 1)(x^2 + x + 1): component degrees are the factor degrees.
  const Factorization fac = factor_poly(Poly(FiniteField::prime(2), {1, 0, 0, 1}));
  ASSERT_EQ(fac.factors.size(), w.components.size());
  for (std::size_t i = 0; i < fac.factors.size(); ++i) {
    EXPECT_EQ(static_cast<int>(w.components[i].degree), fac.factors[i].factor.degree());
  }
}

TEST(Wedderburn, Mat2F3) {
  const WedderburnDatum w = wedderburn(matrix_algebra(FiniteField::prime(3), 2));
  EXPECT_EQ(factor_multiset(w), fm({{3, 2}}));
}

TEST(Wedderburn, F2TimesMat2F2) {
  const StructureAlgebra a = product({f2_field(), matrix_algebra(FiniteField::prime(2), 2)});
  EXPECT_EQ(center(a).dim(), 2U);
  EXPECT_EQ(factor_multiset(wedderburn(a)), fm({{2, 1}, {2, 2}}));
}

TEST(Wedderburn, ExtensionComponentsAndRandomBases) {
  const FiniteField f2 = FiniteField::prime(2);
  const FiniteField f4 = FiniteField::of_order(2, 2);
  const StructureAlgebra a = product({f2_field(), matrix_algebra(f2, 2), field_as_algebra(f4), matrix_algebra_over_prime(f4, 2)});
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const WedderburnDatum w = wedderburn(random_basis_change(a, seed), seed);
    EXPECT_EQ(factor_multiset(w), fm({{2, 1}, {2, 2}, {4, 1}, {4, 2}}));
  }
}

TEST(Wedderburn, OverExtensionBaseField) {
  const FiniteField f4 = FiniteField::of_order(2, 2);
  const WedderburnDatum w = wedderburn(cyclic_group_algebra(f4, 3));
  // x^3 - 1 splits completely over F_4.
  EXPECT_EQ(factor_multiset(w), fm({{4, 1}, {4, 1}, {4, 1}}));
  EXPECT_EQ(factor_multiset(wedderburn(matrix_algebra(f4, 3), 3)), fm({{4, 3}}));
}

TEST(Wedderburn, RejectsNonzeroRadical) {
  EXPECT_THROW(wedderburn(truncated_polynomial(FiniteField::prime(2), 2)), std::invalid_argument);
}

TEST(Wedderburn, QuotientOfUpperTriangular) {
  const StructureAlgebra t = upper_triangular(FiniteField::prime(2), 2);
  const Quotient q = quotient(t, radical(t).space);
  EXPECT_EQ(factor_multiset(wedderburn(q.algebra)), fm({{2, 1}, {2, 1}}));
}

TEST(Wedderburn, RandomSemisimpleQuotients) {
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    const FiniteField f = FiniteField::prime(t % 2 == 0 ? 2 : 3);
    const StructureAlgebra a = random_algebra(f, rng.next(), 6);
    const Subspace r = radical(a).space;
    const StructureAlgebra s = r.dim() == 0 ? a : quotient(a, r).algebra;
    const WedderburnDatum w = wedderburn(s, rng.next());
    std::size_t dim = 0;
    for (const auto& c : w.components) dim += c.n * c.n * c.degree;
    EXPECT_EQ(dim, s.dim());
  }
}
