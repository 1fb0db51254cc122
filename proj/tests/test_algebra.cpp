#include <gtest/gtest.h>

#include "toporing/algebra.hpp"
#include "toporing/constructions.hpp"
#include "toporing/radical.hpp"
#include "toporing/rng.hpp"

using namespace toporing;

namespace {

// Independent Gaussian elimination for rank checks (row operations on a copy).
std::size_t naive_rank(const FiniteField& f, std::vector<Vec> rows) {
  std::size_t r = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const Elem factor = f.div(rows[i][c], rows[r][c]);
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = f.sub(rows[i][j], f.mul(factor, rows[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace

TEST(Validate, MatrixAlgebraValid) {
  const StructureAlgebra m2 = matrix_algebra(FiniteField::prime(2), 2);
  EXPECT_EQ(m2.dim(), 4U);
  EXPECT_TRUE(validate_algebra(m2).ok());
}

TEST(Validate, CorruptedConstantNamesTriple) {
  const FiniteField f2 = FiniteField::prime(2);
  const StructureAlgebra m2 = matrix_algebra(f2, 2);
  auto triples = sparse_constants(m2);
  // e_01 e_10 = e_00: flip it to e_11.
  for (auto& t : triples) {
    if (t.i == 1 && t.j == 2) t.k = 3;
  }
  const AlgebraValidation v = validate_algebra(f2, 4, triples, m2.one());
  ASSERT_FALSE(v.ok());
  bool named = false;
  for (const auto& d : v.diagnostics) {
    if (d.kind != AlgebraDiagnostic::Kind::NonAssociative) continue;
    // Re-check the named triple independently.
    std::vector<Elem> c(64, 0);
    for (const auto& t : triples) c[(t.i * 4 + t.j) * 4 + t.k] = t.value;
    const StructureAlgebra bad(f2, 4, c, m2.one());
    const auto [i, j, k] = d.witness;
    named = named || bad.mul(bad.mul(bad.basis(i), bad.basis(j)), bad.basis(k)) !=
                         bad.mul(bad.basis(i), bad.mul(bad.basis(j), bad.basis(k)));
  }
  EXPECT_TRUE(named);
}

TEST(Validate, TruncatedPolynomial) {
  const StructureAlgebra a = truncated_polynomial(FiniteField::prime(2), 3);
  EXPECT_EQ(a.dim(), 3U);
  EXPECT_TRUE(validate_algebra(a).ok());
}

TEST(Validate, BadShapeReported) {
  const FiniteField f2 = FiniteField::prime(2);
  const AlgebraValidation v = validate_algebra(f2, 2, {{0, 0, 5, 1}}, {1, 0});
  ASSERT_FALSE(v.ok());
  EXPECT_EQ(v.diagnostics[0].kind, AlgebraDiagnostic::Kind::BadShape);
}

TEST(RrefSolve, IdentityAndZero) {
  const FiniteField f3 = FiniteField::prime(3);
  const SolveResult id = rref_solve(Matrix::identity(f3, 3), Matrix(f3, 3, 1));
  EXPECT_EQ(id.rank, 3U);
  EXPECT_EQ(id.kernel.rows(), 0U);
  const FiniteField f2 = FiniteField::prime(2);
  const SolveResult z = rref_solve(Matrix(f2, 2, 2), Matrix(f2, 2, 1));
  EXPECT_EQ(z.rank, 0U);
  EXPECT_EQ(z.kernel.rows(), 2U);
}

TEST(RrefSolve, RankNullityAgainstNaiveElimination) {
  const FiniteField f5 = FiniteField::prime(5);
  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    Matrix m(f5, 6, 6);
    const std::size_t low = rng.below(6);
    for (std::size_t i = 0; i < 6; ++i) {
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = i < low ? static_cast<Elem>(rng.below(5)) : 0;
    }
    if (rng.coin()) m = m.transpose();
    Matrix rhs(f5, 6, 2);
    for (std::size_t i = 0; i < 6; ++i) rhs(i, 0) = static_cast<Elem>(rng.below(5));
    const SolveResult s = rref_solve(m, rhs);
    EXPECT_EQ(s.rank, naive_rank(f5, m.row_vecs()));
    EXPECT_EQ(s.rank + s.kernel.rows(), 6U);
    for (std::size_t c = 0; c < 2; ++c) {
      if (!s.inconsistent[c]) {
        ASSERT_TRUE(s.solutions[c].has_value());
        const Vec x = *s.solutions[c];
        for (std::size_t i = 0; i < 6; ++i) {
          Elem acc = 0;
          for (std::size_t j = 0; j < 6; ++j) acc = f5.add(acc, f5.mul(m(i, j), x[j]));
          EXPECT_EQ(acc, rhs(i, c));
        }
      }
    }
  }
}

TEST(Radical, TruncatedPolynomial) {
  for (unsigned p : {2U, 3U, 5U}) {
    const StructureAlgebra a = truncated_polynomial(FiniteField::prime(p), 4);
    const Subspace r = radical(a).space;
    std::vector<Vec> expect;
    for (std::size_t i = 1; i < 4; ++i) expect.push_back(a.basis(i));
    EXPECT_EQ(r, Subspace::span(a.field(), 4, expect));
  }
}

TEST(Radical, MatrixAlgebraIsSemisimple) {
  EXPECT_EQ(radical(matrix_algebra(FiniteField::prime(2), 2)).space.dim(), 0U);
  EXPECT_EQ(radical(matrix_algebra(FiniteField::of_order(2, 2), 2)).space.dim(), 0U);
}

TEST(Radical, UpperTriangularAgainstOracle) {
  const StructureAlgebra t2 = upper_triangular(FiniteField::prime(2), 2);
  const Subspace r = radical(t2).space;
  EXPECT_EQ(r.dim(), 1U);
  EXPECT_EQ(r, radical_bruteforce(t2));
  // basis order E11, E12, E22
  EXPECT_TRUE(r.contains(t2.basis(1)));
}

TEST(Radical, RandomAlgebrasMatchOracle) {
  Rng rng(99);
  for (int t = 0; t < 40; ++t) {
    const FiniteField f = FiniteField::prime(t % 2 == 0 ? 2 : 3);
    const StructureAlgebra a = random_algebra(f, rng.next(), f.order() == 2 ? 6 : 5);
    ASSERT_TRUE(validate_algebra(a).ok());
    const Subspace r = radical(a).space;
    EXPECT_EQ(r, radical_bruteforce(a)) << "trial " << t;
    EXPECT_TRUE(nilpotency_index(a, r).has_value());
    if (r.dim() > 0 && r.dim() < a.dim()) {
      const Quotient q = quotient(a, r);
      EXPECT_EQ(radical(q.algebra).space.dim(), 0U);
    }
  }
}

TEST(Radical, ExtensionFieldAlgebra) {
  const FiniteField f4 = FiniteField::of_order(2, 2);
  const StructureAlgebra t = upper_triangular(f4, 2);
  EXPECT_EQ(radical(t).space, radical_bruteforce(t));
  const StructureAlgebra g = cyclic_group_algebra(f4, 2);
  EXPECT_EQ(radical(g).space.dim(), 1U);
}

TEST(Quotient, Examples) {
  const FiniteField f2 = FiniteField::prime(2);
  const StructureAlgebra a = truncated_polynomial(f2, 2);
  const Quotient q = quotient(a, Subspace::span(f2, 2, {a.basis(1)}));
  EXPECT_EQ(q.algebra.dim(), 1U);
  EXPECT_FALSE(check_homomorphism(q.projection).has_value());
  const Quotient id = quotient(a, Subspace(f2, 2));
  EXPECT_EQ(id.algebra, a);
  EXPECT_THROW(quotient(upper_triangular(f2, 2), Subspace::span(f2, 3, {unit_vec(3, 0)})), std::invalid_argument);
}

TEST(InvertOnePlusH, Examples) {
  const FiniteField f3 = FiniteField::prime(3);
  const StructureAlgebra a = truncated_polynomial(f3, 3);
  const Subspace h = Subspace::span(f3, 3, {a.basis(1), a.basis(2)});
  EXPECT_EQ(invert_in_one_plus_h(a, a.one(), h), a.one());
  EXPECT_EQ(invert_in_one_plus_h(a, Vec{1, 1, 0}, h), (Vec{1, 2, 1}));
  EXPECT_THROW(invert_in_one_plus_h(a, Vec{2, 0, 0}, h), std::invalid_argument);

  const FiniteField f2 = FiniteField::prime(2);
  const StructureAlgebra r = truncated_polynomial(f2, 2);
  const StructureAlgebra m = matrix_ring(r, 2);
  const Vec x{0, 1};
  const Vec zero{0, 0}, one{1, 0};
  const Vec u = matrix_ring_element(r, 2, {one, zero, x, one});
  std::vector<Vec> hgens;
  for (std::size_t e = 0; e < 4; ++e) hgens.push_back(unit_vec(8, e * 2 + 1));
  EXPECT_EQ(invert_in_one_plus_h(m, u, Subspace::span(f2, 8, hgens)), u);
}

TEST(Center, ProductHasCenterDimTwo) {
  const FiniteField f2 = FiniteField::prime(2);
  EXPECT_EQ(center(product({StructureAlgebra(f2, 1, {1}, {1}), matrix_algebra(f2, 2)})).dim(), 2U);
}
