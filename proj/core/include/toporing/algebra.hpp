#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toporing/field.hpp"
#include "toporing/matrix.hpp"

namespace toporing {

/**
 * Finite-dimensional unital associative algebra over a FiniteField, given by structure constants
 * c[i][j][k] = coefficient of e_k in e_i * e_j and the coordinates of the unit.
 *
 * Values are immutable handles; copies share the constant table. Construction does not validate
 * the axioms, use validate_algebra() for untrusted input.
 */
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  StructureAlgebra(FiniteField f, std::size_t n, std::vector<Elem> constants, Vec unit);

  const FiniteField& field() const { return data_->field; }
  std::size_t dim() const { return data_->n; }
  Elem constant(std::size_t i, std::size_t j, std::size_t k) const {
    return data_->c[(i * data_->n + j) * data_->n + k];
  }
  const std::vector<Elem>& constants() const { return data_->c; }
  const Vec& one() const { return data_->unit; }
  Vec zero() const { return Vec(dim(), 0); }
  Vec basis(std::size_t i) const { return unit_vec(dim(), i); }

  Vec mul(const Vec& a, const Vec& b) const;
  Vec add(const Vec& a, const Vec& b) const { return vec_add(field(), a, b); }
  Vec sub(const Vec& a, const Vec& b) const { return vec_sub(field(), a, b); }
  Vec scale(Elem c, const Vec& a) const { return vec_scale(field(), c, a); }
  Vec pow(const Vec& a, std::uint64_t e) const;

  /// Row-convention matrix of x -> e_i x.
  const Matrix& left_basis(std::size_t i) const { return data_->left[i]; }
  /// Row-convention matrix of x -> x e_i.
  const Matrix& right_basis(std::size_t i) const { return data_->right[i]; }
  Matrix left_mult(const Vec& a) const;
  Matrix right_mult(const Vec& a) const;

  /// Two-sided inverse, or nullopt for non-units.
  std::optional<Vec> inverse(const Vec& a) const;
  bool is_unit(const Vec& a) const { return inverse(a).has_value(); }

  /// Optional faithful matrix representation (one matrix per basis element, row convention,
  /// multiplicative). Used to shorten trace computations; the left regular representation is
  /// the fallback.
  bool has_representation() const { return !data_->rep.empty(); }
  const std::vector<Matrix>& representation() const { return data_->rep; }
  StructureAlgebra with_representation(std::vector<Matrix> rep) const;
  Matrix represent(const Vec& a) const;

  const std::string& label() const { return data_->label; }
  StructureAlgebra with_label(std::string label) const;

  friend bool operator==(const StructureAlgebra& a, const StructureAlgebra& b) {
    return a.field() == b.field() && a.data_->c == b.data_->c && a.data_->unit == b.data_->unit;
  }

 private:
  struct Data {
    FiniteField field;
    std::size_t n = 0;
    std::vector<Elem> c;
    Vec unit;
    std::vector<Matrix> left, right;
    std::vector<Matrix> rep;
    std::string label;
  };
  std::shared_ptr<const Data> data_;
};

/// Failed axiom with the basis indices that witness it.
struct AlgebraDiagnostic {
  enum class Kind { NonAssociative, UnitFailure, BadShape } kind;
  std::array<std::size_t, 3> witness{};  // (i, j, k) for associativity, (i, -, -) for the unit
  std::string message;
};

struct AlgebraValidation {
  std::optional<StructureAlgebra> algebra;
  std::vector<AlgebraDiagnostic> diagnostics;
  bool exhaustive = true;  // false when associativity was checked on random triples (large n)
  bool ok() const { return algebra.has_value(); }
};

/// Sparse structure constant (i, j, k, value).
struct ConstantTriple {
  std::size_t i, j, k;
  Elem value;
};

/**
 * Checks associativity on basis triples (exhaustively for n <= 32, otherwise on seeded random
 * element triples with localisation of any failure to a basis triple) and the two-sided unit.
 */
AlgebraValidation validate_algebra(const FiniteField& f, std::size_t n, const std::vector<ConstantTriple>& constants,
                                   const Vec& unit, std::uint64_t seed = 1);
AlgebraValidation validate_algebra(const StructureAlgebra& a, std::uint64_t seed = 1);
std::vector<ConstantTriple> sparse_constants(const StructureAlgebra& a);

/// Unital algebra homomorphism A -> B as a dim(A) x dim(B) matrix (row convention).
struct AlgebraMap {
  StructureAlgebra source, target;
  Matrix matrix;
  Vec apply(const Vec& a) const { return matrix.apply(a); }
};

/// Checks unitality and multiplicativity on all basis pairs; returns a description of the first
/// failure, or nullopt if the map is a homomorphism.
std::optional<std::string> check_homomorphism(const AlgebraMap& map);

/// Subspace of an algebra with its closure flags.
struct SubspaceIdeal {
  StructureAlgebra algebra;
  Subspace space;
  bool left = false;
  bool right = false;
  bool two_sided() const { return left && right; }
};

bool is_left_ideal(const StructureAlgebra& a, const Subspace& s);
bool is_right_ideal(const StructureAlgebra& a, const Subspace& s);
SubspaceIdeal make_ideal(const StructureAlgebra& a, Subspace s);
/// Smallest two-sided ideal containing the vectors.
SubspaceIdeal two_sided_ideal_generated(const StructureAlgebra& a, const std::vector<Vec>& gens);
/// Smallest right ideal containing the vectors.
Subspace right_ideal_generated(const StructureAlgebra& a, const std::vector<Vec>& gens);
Subspace left_ideal_generated(const StructureAlgebra& a, const std::vector<Vec>& gens);
/// span{x * y : x in s, y in t}
Subspace product_space(const StructureAlgebra& a, const Subspace& s, const Subspace& t);
/// Smallest k >= 1 with s^k = 0, or nullopt if the powers stabilise at a nonzero subspace.
std::optional<std::size_t> nilpotency_index(const StructureAlgebra& a, const Subspace& s);

/// Center {z : z e_i = e_i z for all i}.
Subspace center(const StructureAlgebra& a);

/// Quotient algebra A/I together with the projection; I must be two-sided.
struct Quotient {
  StructureAlgebra algebra;
  AlgebraMap projection;
  Subspace kernel;
  /// Canonical lift: the quotient coordinates placed on the non-pivot positions of the kernel.
  Vec lift(const Vec& q) const;
};
/// Throws std::invalid_argument if the ideal is not two-sided.
Quotient quotient(const StructureAlgebra& a, const Subspace& ideal);

/// Algebra with basis `new_basis` (rows, coordinates in the old basis, invertible).
StructureAlgebra change_basis(const StructureAlgebra& a, const Matrix& new_basis);
StructureAlgebra opposite(const StructureAlgebra& a);
/// Same ring viewed as an algebra over the prime field (dimension n * d).
StructureAlgebra restrict_to_prime_field(const StructureAlgebra& a);
/// F_q-coordinates from prime-field coordinates (and back), for restrict_to_prime_field.
Vec to_prime_coords(const FiniteField& f, const Vec& v);
Vec from_prime_coords(const FiniteField& f, const Vec& v);

/// Minimal polynomial data of an element: coefficients c_0..c_{m-1} with a^m = sum c_i a^i.
std::vector<Elem> minimal_polynomial_coeffs(const StructureAlgebra& a, const Vec& x, const Vec& unit);

/// Invert u with u - 1 in a nil subspace H by the finite geometric series sum (1 - u)^k.
/// Throws std::invalid_argument if u - 1 is outside H or the series does not terminate.
Vec invert_in_one_plus_h(const StructureAlgebra& a, const Vec& u, const Subspace& h);

}  // namespace toporing
