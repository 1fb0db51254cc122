#include <gtest/gtest.h>

#include "support.hpp"
#include "toporing/constructions.hpp"
#include "toporing/matrix_topology.hpp"

using namespace toporing;
using toporing::testing::random_module;

namespace {

const FiniteField kF2 = FiniteField::prime(2);
const FiniteField kF3 = FiniteField::prime(3);

// Finite-Y window as an element of Mat_Y(R).
Vec as_matrix_ring(const WindowedMatrix& m) {
  std::vector<Vec> grid(m.entries.begin(), m.entries.end());
  return matrix_ring_element(m.ring(), m.window, grid);
}

std::size_t hom_dim(const FiniteModule& a, const FiniteModule& b) { return hom_space(a, b).size(); }

}  // namespace

TEST(MatrixTopology, IdentityIsNeutral) {
  const MatrixBase base = discrete_base(field_as_algebra(kF2));
  Rng rng(1);
  const WindowedMatrix a = random_windowed(base, IndexSet::countable(), 5, rng, false);
  const WindowedMatrix i = windowed_identity(base, IndexSet::countable(), 5);
  std::size_t rows = 0;
  EXPECT_TRUE(certified_equal(mat_mul(i, a), a, &rows));
  EXPECT_EQ(rows, 5u);
  EXPECT_TRUE(certified_equal(mat_mul(a, i), a, &rows));
  EXPECT_EQ(rows, 5u);
}

TEST(MatrixTopology, DeltaRule) {
  const StructureAlgebra r = truncated_polynomial(kF3, 2);
  const MatrixBase base = discrete_base(r);
  const IndexSet y = IndexSet::finite(4);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      for (std::size_t k = 0; k < 4; ++k) {
        for (std::size_t l = 0; l < 4; ++l) {
          const WindowedMatrix p = mat_mul(elementary(base, y, 4, i, j, r.one()), elementary(base, y, 4, k, l, r.one()));
          const WindowedMatrix expect = j == k ? elementary(base, y, 4, i, l, r.one()) : windowed_zero(base, y, 4);
          EXPECT_EQ(p.entries, expect.entries);
          EXPECT_FALSE(validate_windowed(p).has_value());
        }
      }
    }
  }
}

TEST(MatrixTopology, ShiftProducts) {
  const MatrixBase base = discrete_base(field_as_algebra(kF2));
  const WindowedMatrix s = shift_matrix(base, 6);
  const WindowedMatrix st = shift_matrix(base, 6, true);
  const WindowedMatrix id = windowed_identity(base, IndexSet::countable(), 6);
  // on the window alone the last row of S leaves the window, so that row stays undecided
  const WindowedMatrix sst = mat_mul(s, st);
  std::size_t rows = 0;
  EXPECT_TRUE(certified_equal(sst, id, &rows));
  EXPECT_EQ(rows, 5u);
  EXPECT_FALSE(sst.known[5]);
  // one extra column of S decides the whole 6-window
  const WindowedMatrix wide = crop(mat_mul(shift_matrix(base, 7), shift_matrix(base, 7, true)), 6);
  EXPECT_TRUE(certified_equal(wide, id, &rows));
  EXPECT_EQ(rows, 6u);
  const WindowedMatrix sts = mat_mul(st, s);
  WindowedMatrix expect = id;
  expect.at(0, 0) = Vec{0};
  EXPECT_TRUE(certified_equal(sts, expect, &rows));
  EXPECT_EQ(rows, 6u);
}

TEST(MatrixTopology, FiniteProductsMatchMatrixRing) {
  Rng rng(5);
  for (const StructureAlgebra& r : {truncated_polynomial(kF2, 2), upper_triangular(kF3, 2), field_as_algebra(kF2)}) {
    const MatrixBase base = discrete_base(r);
    for (std::size_t n = 1; n <= 4; ++n) {
      const StructureAlgebra mat = matrix_ring(r, n);
      for (int t = 0; t < 10; ++t) {
        const WindowedMatrix a = random_windowed(base, IndexSet::finite(n), n, rng);
        const WindowedMatrix b = random_windowed(base, IndexSet::finite(n), n, rng);
        const WindowedMatrix p = mat_mul(a, b);
        EXPECT_EQ(as_matrix_ring(p), mat.mul(as_matrix_ring(a), as_matrix_ring(b)));
        EXPECT_FALSE(validate_windowed(p).has_value());
      }
    }
  }
}

TEST(MatrixTopology, AssociativityWithTails) {
  const MatrixBase adic = tower_base(adic_tower(kF2, 3));
  const MatrixBase disc = discrete_base(upper_triangular(kF2, 2));
  Rng rng(8);
  std::size_t compared = 0;
  for (const MatrixBase& base : {adic, disc}) {
    for (int t = 0; t < 150; ++t) {
      const std::size_t w = 3 + rng.below(4);
      const WindowedMatrix a = random_windowed(base, IndexSet::countable(), w, rng);
      const WindowedMatrix b = random_windowed(base, IndexSet::countable(), w, rng);
      const WindowedMatrix c = random_windowed(base, IndexSet::countable(), w, rng);
      const WindowedMatrix l = mat_mul(mat_mul(a, b), c);
      const WindowedMatrix r = mat_mul(a, mat_mul(b, c));
      ASSERT_FALSE(validate_windowed(l).has_value());
      ASSERT_FALSE(validate_windowed(r).has_value());
      std::size_t rows = 0;
      EXPECT_TRUE(certified_equal(l, r, &rows));
      compared += rows;
    }
  }
  EXPECT_GT(compared, 300u);
}

TEST(MatrixTopology, IdealMembership) {
  const StructureAlgebra r = truncated_polynomial(kF2, 2);
  const MatrixBase base = discrete_base(field_as_algebra(kF2));
  const IndexSet w = IndexSet::countable();
  const Subspace zero(kF2, 1);
  EXPECT_EQ(ideal_member(windowed_zero(base, w, 4), {{0, 2}, zero}), Membership::In);
  EXPECT_EQ(ideal_member(elementary(base, w, 4, 0, 0, Vec{1}), {{0}, zero}), Membership::Out);
  EXPECT_EQ(ideal_member(windowed_zero(base, w, 4), {{7}, zero}), Membership::Undecided);
  // row 0 entries in (x) over F_2[x]/(x^2)
  const MatrixBase rb = discrete_base(r);
  WindowedMatrix a = windowed_zero(rb, w, 4);
  for (std::size_t c = 0; c < 4; ++c) a.at(0, c) = Vec{0, 1};
  a.at(1, 1) = r.one();
  certify_from_window(a);
  const Subspace xr = Subspace::span(kF2, 2, {Vec{0, 1}});
  EXPECT_EQ(ideal_member(a, {{0}, xr}), Membership::In);
  EXPECT_EQ(ideal_member(a, {{0, 1}, xr}), Membership::Out);
  // a row whose tail leaves the window is only decided by a level whose kernel lies in I
  const MatrixBase tb = tower_base(adic_tower(kF2, 2));
  WindowedMatrix tail = windowed_zero(tb, w, 3);
  for (std::size_t c = 0; c < 3; ++c) tail.at(0, c) = Vec{0, 1};
  tail.bounds[0] = {0, kUncertified};
  EXPECT_FALSE(validate_windowed(tail).has_value());
  EXPECT_EQ(ideal_member(tail, {{0}, xr}), Membership::In);
  EXPECT_EQ(ideal_member(tail, {{0}, Subspace(kF2, 2)}), Membership::Out);
  tail.at(0, 0) = Vec{0, 0};
  tail.at(0, 1) = Vec{0, 0};
  tail.at(0, 2) = Vec{0, 0};
  EXPECT_EQ(ideal_member(tail, {{0}, Subspace(kF2, 2)}), Membership::Undecided);
}

TEST(MatrixTopology, OpenIdealsAreRightIdeals) {
  const StructureAlgebra r = truncated_polynomial(kF2, 2);
  const MatrixBase base = discrete_base(r);
  const Subspace xr = Subspace::span(kF2, 2, {Vec{0, 1}});
  Rng rng(12);
  int decided = 0;
  for (int t = 0; t < 100; ++t) {
    WindowedMatrix k = random_windowed(base, IndexSet::countable(), 5, rng, false);
    const std::vector<std::size_t> rows = {rng.below(5), rng.below(5)};
    for (std::size_t x : rows) {
      for (std::size_t c = 0; c < 5; ++c) k.at(x, c) = r.mul(Vec{0, 1}, k.at(x, c));
    }
    certify_from_window(k);
    const OpenMatrixIdeal ideal{rows, xr};
    ASSERT_EQ(ideal_member(k, ideal), Membership::In);
    const WindowedMatrix a = random_windowed(base, IndexSet::countable(), 5, rng, false);
    const Membership m = ideal_member(mat_mul(k, a), ideal);
    EXPECT_NE(m, Membership::Out);
    decided += m == Membership::In;
  }
  EXPECT_GT(decided, 50);
}

TEST(MatrixTopology, DiscreteTransport) {
  const StructureAlgebra f2 = field_as_algebra(kF2);
  const FiniteModule n = regular_module(f2);
  const FiniteModule v = transport_discrete(n, 2);
  EXPECT_FALSE(validate_module(v).has_value());
  EXPECT_EQ(v.dim(), 2u);
  // the action of a matrix is right multiplication of the row
  const Vec a = matrix_ring_element(f2, 2, {Vec{1}, Vec{1}, Vec{0}, Vec{1}});
  EXPECT_EQ(v.act(Vec{1, 0}, a), (Vec{1, 1}));
  EXPECT_EQ(transport_discrete(FiniteModule(f2, Side::Right, 0, {Matrix(kF2, 0, 0)}), 2).dim(), 0u);
}

TEST(MatrixTopology, DiscreteTransportIsFullyFaithful) {
  const StructureAlgebra r = truncated_polynomial(kF2, 2);
  Rng rng(21);
  for (int t = 0; t < 6; ++t) {
    const FiniteModule a = random_module(r, rng, 4);
    const FiniteModule b = random_module(r, rng, 4);
    EXPECT_EQ(hom_dim(a, b), hom_dim(transport_discrete(a, 3), transport_discrete(b, 3)));
  }
}

TEST(MatrixTopology, DiscreteTransportIsExact) {
  const StructureAlgebra r = upper_triangular(kF2, 2);
  Rng rng(30);
  for (int t = 0; t < 10; ++t) {
    const FiniteModule m = random_module(r, rng, 6);
    Vec g(m.dim());
    for (auto& e : g) e = static_cast<Elem>(rng.below(2));
    const Subspace k = cyclic_submodule(m, g);
    const QuotientModule q = quotient_module(m, k);
    const Matrix inj = k.basis();
    const std::size_t y = 1 + rng.below(3);
    const Matrix vi = transport_discrete_map(inj, y);
    const Matrix vp = transport_discrete_map(q.projection, y);
    EXPECT_EQ(rank(vi), y * k.dim());
    EXPECT_TRUE((vi * vp).is_zero());
    EXPECT_EQ(rank(vp), y * q.module.dim());
    EXPECT_EQ(Subspace::of_rows(vi), Subspace::of_rows(left_kernel(vp)));
  }
}

TEST(MatrixTopology, ContraTransportAndCorner) {
  const StructureAlgebra f3 = field_as_algebra(kF3);
  const FiniteModule c = left_regular_module(f3);
  const FiniteModule vc = transport_contra(c, 2);
  EXPECT_FALSE(validate_module(vc).has_value());
  EXPECT_EQ(vc.dim(), 2u);
  const StructureAlgebra r = truncated_polynomial(kF2, 2);
  const FiniteModule c2 = left_regular_module(r);
  const FiniteModule v3 = transport_contra(c2, 3);
  EXPECT_FALSE(validate_module(v3).has_value());
  const FiniteModule corner = contra_corner(v3, r, 3, 1);
  EXPECT_EQ(corner.action(), c2.action());
}

TEST(MatrixTopology, CornerIsFreeContramodule) {
  const auto fin = free_contra_corner(discrete_base(field_as_algebra(kF2)), IndexSet::finite(3), 3, 0, 20);
  EXPECT_TRUE(fin.ok());
  EXPECT_EQ(fin.corner_dim, 3u);
  const auto omega = free_contra_corner(tower_base(adic_tower(kF2, 2)), IndexSet::countable(), 5, 2, 40);
  EXPECT_TRUE(omega.ok());
  EXPECT_EQ(omega.corner_dim, 10u);
}

TEST(Contratensor, Examples) {
  const StructureAlgebra r = truncated_polynomial(kF2, 2);
  const FiniteModule reg = regular_module(r);
  const auto single = contratensor(reg, 1);
  EXPECT_TRUE(single.verified);
  EXPECT_EQ(single.cokernel_dim, reg.dim());
  const FiniteModule top = cyclic_quotient(r, Subspace::span(kF2, 2, {Vec{0, 1}}));
  const auto two = contratensor(top, 2);
  EXPECT_TRUE(two.verified);
  EXPECT_TRUE(two.all_elements);
  EXPECT_EQ(two.cokernel_dim, 2u);  // a group of order 4
  const auto zero = contratensor(FiniteModule(r, Side::Right, 0, {Matrix(kF2, 0, 0), Matrix(kF2, 0, 0)}), 3);
  EXPECT_TRUE(zero.verified);
  EXPECT_EQ(zero.cokernel_dim, 0u);
}
