#include <gtest/gtest.h>

#include "toporing/field.hpp"
#include "toporing/poly.hpp"
#include "toporing/rng.hpp"

using namespace toporing;

namespace {

// Naive irreducibility: no monic factor of degree <= deg/2 divides f.
bool naive_irreducible(const Poly& f) {
  const FiniteField& k = f.field();
  const int n = f.degree();
  for (int d = 1; d <= n / 2; ++d) {
    std::size_t count = 1;
    for (int i = 0; i < d; ++i) count *= k.order();
    for (std::size_t idx = 0; idx < count; ++idx) {
      std::vector<Elem> c(d + 1);
      std::size_t r = idx;
      for (int i = 0; i < d; ++i) {
        c[i] = static_cast<Elem>(r % k.order());
        r /= k.order();
      }
      c[d] = 1;
      if (f.mod(Poly(k, c)).is_zero()) return false;
    }
  }
  return n >= 1;
}

}  // namespace

TEST(Field, AxiomsExhaustiveSmallOrders) {
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {2, 2}, {2, 3}, {3, 2}, {5, 1}, {2, 4}}) {
    const FiniteField f = FiniteField::of_order(p, d);
    const Elem q = f.order();
    for (Elem a = 0; a < q; ++a) {
      ASSERT_EQ(f.add(a, f.neg(a)), 0U);
      if (a != 0) {
        ASSERT_EQ(f.mul(a, f.inv(a)), 1U);
      }
      for (Elem b = 0; b < q; ++b) {
        ASSERT_EQ(f.add(a, b), f.add(b, a));
        ASSERT_EQ(f.mul(a, b), f.mul(b, a));
        for (Elem c = 0; c < q; ++c) {
          ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
          ASSERT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        }
      }
    }
  }
}

TEST(Field, DigitsRoundTrip) {
  const FiniteField f = FiniteField::of_order(3, 3);
  for (Elem a = 0; a < f.order(); ++a) {
    const auto d = f.digits(a);
    EXPECT_EQ(f.from_digits(d), a);
  }
}

TEST(Poly, CubeMinusOneOverF2) {
  const FiniteField f2 = FiniteField::prime(2);
  const Poly f(f2, {1, 0, 0, 1});
  const Factorization fac = factor_poly(f);
  ASSERT_EQ(fac.factors.size(), 2U);
  EXPECT_EQ(fac.factors[0].factor, Poly(f2, {1, 1}));
  EXPECT_EQ(fac.factors[1].factor, Poly(f2, {1, 1, 1}));
  for (const auto& pf : fac.factors) EXPECT_TRUE(naive_irreducible(pf.factor));
  EXPECT_EQ(expand(fac), f);
}

TEST(Poly, SquareOverF3) {
  const FiniteField f3 = FiniteField::prime(3);
  const Factorization fac = factor_poly(Poly(f3, {0, 0, 1}));
  ASSERT_EQ(fac.factors.size(), 1U);
  EXPECT_EQ(fac.factors[0].factor, Poly::x(f3));
  EXPECT_EQ(fac.factors[0].multiplicity, 2);
}

TEST(Poly, X4PlusXPlus1Irreducible) {
  const FiniteField f2 = FiniteField::prime(2);
  const Poly f(f2, {1, 1, 0, 0, 1});
  EXPECT_TRUE(is_irreducible(f));
  EXPECT_TRUE(naive_irreducible(f));
  EXPECT_EQ(factor_poly(f).factors.size(), 1U);
  EXPECT_FALSE(f.mod(Poly(f2, {1, 1, 1})).is_zero());
}

TEST(Poly, RandomFactorisationsMultiplyBack) {
  Rng rng(2024);
  for (auto [p, d] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}}) {
    const FiniteField f = FiniteField::of_order(p, d);
    for (int t = 0; t < 200; ++t) {
      const int deg = 1 + static_cast<int>(rng.below(12));
      std::vector<Elem> c(deg + 1);
      for (auto& x : c) x = static_cast<Elem>(rng.below(f.order()));
      if (c.back() == 0) c.back() = 1;
      const Poly g(f, c);
      const Factorization fac = factor_poly(g, rng.next());
      ASSERT_EQ(expand(fac), g) << g.to_string();
      for (const auto& pf : fac.factors) {
        ASSERT_TRUE(is_irreducible(pf.factor));
        if (f.order() <= 4 && pf.factor.degree() <= 6) ASSERT_TRUE(naive_irreducible(pf.factor));
      }
    }
  }
}

TEST(Poly, ZeroPolynomialRejected) {
  EXPECT_THROW(factor_poly(Poly::zero(FiniteField::prime(2))), std::invalid_argument);
}
