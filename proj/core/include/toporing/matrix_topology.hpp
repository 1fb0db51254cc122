#pragma once

#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "toporing/module.hpp"
#include "toporing/tower.hpp"

namespace toporing {

/// Shared base ring of a matrix ring: a tower whose top level holds the entries. Open ideals are
/// the kernels of R_N -> R_n; a finite ring is a one-level (discrete) tower.
using MatrixBase = std::shared_ptr<const RingTower>;
MatrixBase discrete_base(const StructureAlgebra& r);
MatrixBase tower_base(RingTower t);

/// Index set Y: finite of the given size, or countable (omega).
struct IndexSet {
  std::size_t size = 0;
  bool omega = false;
  static IndexSet finite(std::size_t n) { return {n, false}; }
  static IndexSet countable() { return {0, true}; }
  friend bool operator==(const IndexSet&, const IndexSet&) = default;
};

inline constexpr std::size_t kUncertified = std::numeric_limits<std::size_t>::max();

/**
 * W x W window of a row-zero-convergent Y x Y matrix over the top level R_N of the base.
 * bounds[x][n]: every entry of row x in a column >= bounds[x][n] vanishes in R_n (kUncertified when
 * unknown). known[x]: the window entries of row x are exact. A row is fully determined by its window
 * when it is known and bounds[x][N] <= W.
 */
struct WindowedMatrix {
  MatrixBase base;
  IndexSet index;
  std::size_t window = 0;
  std::vector<Vec> entries;  // row-major window * window
  std::vector<std::vector<std::size_t>> bounds;
  std::vector<bool> known;

  const StructureAlgebra& ring() const { return base->levels.back(); }
  std::size_t top() const { return base->depth() - 1; }
  const Vec& at(std::size_t x, std::size_t y) const { return entries[x * window + y]; }
  Vec& at(std::size_t x, std::size_t y) { return entries[x * window + y]; }
  bool row_determined(std::size_t x) const { return known[x] && bounds[x][top()] <= window; }
};

/// Zero matrix with every row certified zero. For finite Y the window must equal |Y|.
WindowedMatrix windowed_zero(const MatrixBase& base, IndexSet y, std::size_t window);
WindowedMatrix windowed_identity(const MatrixBase& base, IndexSet y, std::size_t window);
/// r E_ij
WindowedMatrix elementary(const MatrixBase& base, IndexSet y, std::size_t window, std::size_t i, std::size_t j, const Vec& r);
/// Ones on the superdiagonal (S) or subdiagonal (its transpose), over a countable index set.
WindowedMatrix shift_matrix(const MatrixBase& base, std::size_t window, bool transpose = false);
/// Recomputes every bound from the window, treating each row as supported inside the window.
void certify_from_window(WindowedMatrix& m);
/// Bounds monotone in the level, window entries consistent with bounds, finite-Y shape.
std::optional<std::string> validate_windowed(const WindowedMatrix& m);
/// Seeded random matrix; rows may carry tails beyond the window that vanish at lower levels.
WindowedMatrix random_windowed(const MatrixBase& base, IndexSet y, std::size_t window, Rng& rng, bool tails = true);

/**
 * Product on the window min(W_a, W_b). Row x is computed when row x of a is determined and every row
 * of b it meets is known; otherwise it is left undecided (known = false), never guessed. Bounds:
 * (ab) row x vanishes at level n beyond max_{y < bound_a[x][n]} bound_b[y][n].
 * Throws std::invalid_argument on different bases or index sets.
 */
WindowedMatrix mat_mul(const WindowedMatrix& a, const WindowedMatrix& b);
WindowedMatrix mat_add(const WindowedMatrix& a, const WindowedMatrix& b);
/// Restriction to a smaller window.
WindowedMatrix crop(const WindowedMatrix& m, std::size_t window);
/// Entries agree on every row known in both (bounds ignored); counts the compared rows.
bool certified_equal(const WindowedMatrix& a, const WindowedMatrix& b, std::size_t* compared = nullptr);

/// K_{X,I}: matrices whose rows in X have all entries in the right ideal I of R_N.
struct OpenMatrixIdeal {
  std::vector<std::size_t> rows;
  Subspace ideal;
};
enum class Membership { In, Out, Undecided };
std::string to_string(Membership m);
/// Decides from the window and the bounds; a tail is accepted when it vanishes at a level whose
/// kernel lies in I.
Membership ideal_member(const WindowedMatrix& a, const OpenMatrixIdeal& k);

/// Zero-convergent Y-indexed family over the base: coefficients in the window plus level bounds.
struct ZeroConvergentFamily {
  MatrixBase base;
  IndexSet index;
  std::size_t window = 0;
  std::vector<Vec> coefficients;
  std::vector<std::size_t> bounds;  // per level, as for a matrix row
};
std::optional<std::string> validate_family(const ZeroConvergentFamily& f);
/// Row x of a matrix as a family.
ZeroConvergentFamily row_family(const WindowedMatrix& a, std::size_t x);

/// Verification transcript for the corner e_xx Mat_Y(R) against R[[Y]].
struct CornerReport {
  std::size_t samples = 0;
  std::size_t corner_dim = 0;  // finite Y: dim of e_xx Mat_Y(R), equal to |Y| dim R
  std::size_t free_dim = 0;    // finite Y: dim R^Y
  bool rows_match = false;     // e_xx a is row x of a, other rows zero, same bounds
  bool ring_iso = false;       // r -> r E_xx is multiplicative on the corner ring
  bool action_match = false;   // (r E_xx)(e_xx a) has row r . (row x of a)
  bool point_measure = false;  // the unit row is the point family at x
  bool ok() const { return rows_match && ring_iso && action_match && point_measure && corner_dim == free_dim; }
};
CornerReport free_contra_corner(const MatrixBase& base, IndexSet y, std::size_t window, std::size_t x,
                                std::size_t samples, std::uint64_t seed = 1);

/// V_Y(N): finitely supported Y-rows over a right module N, a right module over Mat_Y(R) (finite Y).
FiniteModule transport_discrete(const FiniteModule& n, std::size_t y);
/// V_Y(f) for a module map f : N -> N'.
Matrix transport_discrete_map(const Matrix& f, std::size_t y);
/// Y-columns over a left module C with matrices acting on the left (finite Y).
FiniteModule transport_contra(const FiniteModule& c, std::size_t y);
/// e_xx V_Y(C) as a left module over e_xx Mat_Y(R) e_xx = R, in the basis of component x.
FiniteModule contra_corner(const FiniteModule& vc, const StructureAlgebra& r, std::size_t y, std::size_t x);

/**
 * N (.) R[[X]] for finite X, computed as the cokernel of the pair N (x) R[C] => N (x) C with C = R^X
 * (all elements of C when |C| <= 4096, otherwise a spanning set), together with explicit maps to and
 * from N^X that are verified to be inverse isomorphisms.
 */
struct ContratensorResult {
  std::size_t tensor_dim = 0;     // dim N (x) C
  std::size_t relation_count = 0;
  std::size_t cokernel_dim = 0;
  std::size_t target_dim = 0;     // dim N^X
  bool all_elements = false;      // relations used every element of C
  Matrix to_cokernel;             // N^X -> cokernel
  Matrix from_cokernel;           // cokernel -> N^X
  bool verified = false;
};
ContratensorResult contratensor(const FiniteModule& n, std::size_t x);

}  // namespace toporing
