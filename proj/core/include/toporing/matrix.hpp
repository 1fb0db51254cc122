#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "toporing/field.hpp"

namespace toporing {

/// Coordinate vector over a FiniteField. Vectors are row vectors throughout: a linear map is a
/// matrix M acting as v -> v * M.
using Vec = std::vector<Elem>;

Vec vec_add(const FiniteField& f, const Vec& a, const Vec& b);
Vec vec_sub(const FiniteField& f, const Vec& a, const Vec& b);
Vec vec_scale(const FiniteField& f, Elem c, const Vec& a);
/// y += c * x
void vec_axpy(const FiniteField& f, Elem c, std::span<const Elem> x, std::span<Elem> y);
bool vec_is_zero(const Vec& a);
Vec unit_vec(std::size_t n, std::size_t i);

/// Dense row-major matrix over a FiniteField.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FiniteField f, std::size_t rows, std::size_t cols);
  static Matrix identity(const FiniteField& f, std::size_t n);
  static Matrix from_rows(const FiniteField& f, std::size_t cols, const std::vector<Vec>& rows);

  const FiniteField& field() const { return f_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vec row_vec(std::size_t r) const { return Vec(row(r).begin(), row(r).end()); }
  std::vector<Vec> row_vecs() const;
  const std::vector<Elem>& data() const { return data_; }

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  bool is_zero() const;
  bool is_identity() const;

  /// v * M
  Vec apply(std::span<const Elem> v) const;
  /// Flattened entries in row-major order.
  Vec flatten() const { return data_; }
  static Matrix unflatten(const FiniteField& f, std::size_t rows, std::size_t cols, const Vec& v);

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  Matrix scaled(Elem c) const;
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  FiniteField f_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

/// Reduced row echelon form of the rows of a matrix.
struct Echelon {
  Matrix rref;                      // only the nonzero rows
  std::vector<std::size_t> pivots;  // strictly increasing
  std::size_t rank() const { return pivots.size(); }
};
Echelon echelon(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Basis (as rows) of {x : x * M = 0}.
Matrix left_kernel(const Matrix& m);
/// Basis (as rows) of {x : M * x^T = 0}.
Matrix right_kernel(const Matrix& m);
/// Inverse of a square matrix, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/**
 * Solve A x = b for every column b of B (x a column vector). Reports the rank of A, a kernel basis
 * (rows) of A, one particular solution per consistent column and a per-column inconsistency flag.
 * Every returned solution is re-verified by multiplication.
 */
struct SolveResult {
  std::size_t rank = 0;
  Matrix rref;
  std::vector<std::size_t> pivots;
  Matrix kernel;
  std::vector<std::optional<Vec>> solutions;
  std::vector<bool> inconsistent;
};
SolveResult rref_solve(const Matrix& a, const Matrix& b);

/// A subspace of F^n held as reduced row echelon basis, so equal subspaces have equal bases.
class Subspace {
 public:
  Subspace() = default;
  Subspace(FiniteField f, std::size_t ambient);
  static Subspace span(const FiniteField& f, std::size_t ambient, const std::vector<Vec>& vs);
  static Subspace of_rows(const Matrix& m);
  static Subspace whole(const FiniteField& f, std::size_t n);

  const FiniteField& field() const { return basis_.field(); }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vec> basis_vecs() const { return basis_.row_vecs(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates not occupied by pivots, i.e. a canonical complement basis.
  std::vector<std::size_t> non_pivots() const;

  /// v minus its component along the basis (zero iff v lies in the subspace).
  Vec reduce(std::span<const Elem> v) const;
  bool contains(std::span<const Elem> v) const;
  /// Coordinates of v w.r.t. basis(), or nullopt if v is outside.
  std::optional<Vec> coords(std::span<const Elem> v) const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  bool is_subset_of(const Subspace& other) const;
  /// Image under v -> v * M.
  Subspace image(const Matrix& m) const;
  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Preimage {v : v * M in target}.
Subspace preimage(const Matrix& m, const Subspace& target);

}  // namespace toporing
