#include "toporing/matrix.hpp"

#include <stdexcept>

namespace toporing {

Vec vec_add(const FiniteField& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const FiniteField& f, const Vec& a, const Vec& b) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

Vec vec_scale(const FiniteField& f, Elem c, const Vec& a) {
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.mul(c, a[i]);
  return r;
}

void vec_axpy(const FiniteField& f, Elem c, std::span<const Elem> x, std::span<Elem> y) {
  if (c == 0) return;
  if (c == 1) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] != 0) y[i] = f.add(y[i], x[i]);
    }
    return;
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] != 0) y[i] = f.add(y[i], f.mul(c, x[i]));
  }
}

bool vec_is_zero(const Vec& a) {
  for (Elem e : a) {
    if (e != 0) return false;
  }
  return true;
}

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, 0);
  v[i] = 1;
  return v;
}

Matrix::Matrix(FiniteField f, std::size_t rows, std::size_t cols)
    : f_(std::move(f)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::identity(const FiniteField& f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const FiniteField& f, std::size_t cols, const std::vector<Vec>& rows) {
  Matrix m(f, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    std::copy(rows[r].begin(), rows[r].end(), m.row(r).begin());
  }
  return m;
}

std::vector<Vec> Matrix::row_vecs() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row_vec(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(f_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(f_, nr, nc);
  for (std::size_t r = 0; r < nr; ++r) {
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  }
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t r = 0; r < b.rows(); ++r) {
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }
}

bool Matrix::is_zero() const {
  for (Elem e : data_) {
    if (e != 0) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if ((*this)(r, c) != (r == c ? 1U : 0U)) return false;
    }
  }
  return true;
}

Vec Matrix::apply(std::span<const Elem> v) const {
  if (v.size() != rows_) throw std::invalid_argument("vector/matrix size mismatch");
  Vec out(cols_, 0);
  for (std::size_t r = 0; r < rows_; ++r) vec_axpy(f_, v[r], row(r), out);
  return out;
}

Matrix Matrix::unflatten(const FiniteField& f, std::size_t rows, std::size_t cols, const Vec& v) {
  Matrix m(f, rows, cols);
  if (v.size() != rows * cols) throw std::invalid_argument("flattened size mismatch");
  m.data_ = v;
  return m;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  Matrix c(a.f_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols_; ++k) vec_axpy(a.f_, a(i, k), b.row(k), out);
  }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.f_.add(a.data_[i], b.data_[i]);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] = a.f_.sub(a.data_[i], b.data_[i]);
  return c;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix m = *this;
  for (auto& e : m.data_) e = f_.mul(c, e);
  return m;
}

namespace {

// In-place reduction; returns pivot columns. Rows beyond the rank are zero afterwards.
std::vector<std::size_t> reduce_in_place(Matrix& m) {
  const FiniteField& f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(piv, k), m(r, k));
    }
    const Elem inv = f.inv(m(r, c));
    if (inv != 1) {
      for (auto& e : m.row(r)) e = f.mul(e, inv);
    }
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      vec_axpy(f, f.neg(m(i, c)), m.row(r), m.row(i));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Echelon echelon(const Matrix& m) {
  Matrix work = m;
  auto pivots = reduce_in_place(work);
  return {work.block(0, 0, pivots.size(), m.cols()), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return echelon(m).rank(); }

Matrix right_kernel(const Matrix& m) {
  const Echelon e = echelon(m);
  const FiniteField& f = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec x(m.cols(), 0);
    x[free] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = f.neg(e.rref(i, free));
    basis.push_back(std::move(x));
  }
  return Matrix::from_rows(f, m.cols(), basis);
}

Matrix left_kernel(const Matrix& m) { return right_kernel(m.transpose()); }

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, Matrix::identity(m.field(), n));
  auto pivots = reduce_in_place(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  return aug.block(0, n, n, n);
}

SolveResult rref_solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("right-hand side height mismatch");
  const FiniteField& f = a.field();
  const std::size_t n = a.cols();
  Matrix aug(f, a.rows(), n + b.cols());
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  Matrix reduced = aug;
  auto all_pivots = reduce_in_place(reduced);

  SolveResult out;
  for (auto p : all_pivots) {
    if (p < n) out.pivots.push_back(p);
  }
  out.rank = out.pivots.size();
  out.rref = reduced.block(0, 0, out.rank, n);
  out.kernel = right_kernel(a);
  out.solutions.resize(b.cols());
  out.inconsistent.assign(b.cols(), false);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    // Inconsistent iff some zero row of the reduced A carries a nonzero right-hand side.
    bool bad = false;
    for (std::size_t r = out.rank; r < reduced.rows(); ++r) {
      if (reduced(r, n + j) != 0) {
        bad = true;
        break;
      }
    }
    if (bad) {
      out.inconsistent[j] = true;
      continue;
    }
    Vec x(n, 0);
    for (std::size_t i = 0; i < out.rank; ++i) x[out.pivots[i]] = reduced(i, n + j);
    // verify A x = b_j
    for (std::size_t r = 0; r < a.rows(); ++r) {
      Elem acc = 0;
      for (std::size_t c = 0; c < n; ++c) acc = f.add(acc, f.mul(a(r, c), x[c]));
      if (acc != b(r, j)) throw std::logic_error("rref_solve produced an unverified solution");
    }
    out.solutions[j] = std::move(x);
  }
  return out;
}

Subspace::Subspace(FiniteField f, std::size_t ambient) : ambient_(ambient), basis_(std::move(f), 0, ambient) {}

Subspace Subspace::span(const FiniteField& f, std::size_t ambient, const std::vector<Vec>& vs) {
  return of_rows(Matrix::from_rows(f, ambient, vs));
}

Subspace Subspace::of_rows(const Matrix& m) {
  Subspace s(m.field(), m.cols());
  Echelon e = echelon(m);
  s.basis_ = std::move(e.rref);
  s.pivots_ = std::move(e.pivots);
  return s;
}

Subspace Subspace::whole(const FiniteField& f, std::size_t n) { return of_rows(Matrix::identity(f, n)); }

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

Vec Subspace::reduce(std::span<const Elem> v) const {
  const FiniteField& f = field();
  Vec r(v.begin(), v.end());
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Elem c = r[pivots_[i]];
    if (c != 0) vec_axpy(f, f.neg(c), basis_.row(i), r);
  }
  return r;
}

bool Subspace::contains(std::span<const Elem> v) const { return vec_is_zero(reduce(v)); }

std::optional<Vec> Subspace::coords(std::span<const Elem> v) const {
  if (!contains(v)) return std::nullopt;
  Vec c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::sum(const Subspace& other) const {
  std::vector<Vec> rows = basis_vecs();
  for (auto& v : other.basis_vecs()) rows.push_back(std::move(v));
  return span(field(), ambient_, rows);
}

Subspace Subspace::intersect(const Subspace& other) const {
  const FiniteField& f = field();
  if (dim() == 0 || other.dim() == 0) return Subspace(f, ambient_);
  Matrix stacked(f, dim() + other.dim(), ambient_);
  stacked.set_block(0, 0, basis_);
  stacked.set_block(dim(), 0, other.basis_);
  const Matrix k = left_kernel(stacked);
  std::vector<Vec> vs;
  for (std::size_t r = 0; r < k.rows(); ++r) {
    Vec v(ambient_, 0);
    for (std::size_t i = 0; i < dim(); ++i) vec_axpy(f, k(r, i), basis_.row(i), v);
    vs.push_back(std::move(v));
  }
  return span(f, ambient_, vs);
}

bool Subspace::is_subset_of(const Subspace& other) const {
  for (std::size_t i = 0; i < dim(); ++i) {
    if (!other.contains(basis_.row(i))) return false;
  }
  return true;
}

Subspace Subspace::image(const Matrix& m) const {
  if (dim() == 0) return Subspace(field(), m.cols());
  return of_rows(basis_ * m);
}

Subspace preimage(const Matrix& m, const Subspace& target) {
  const FiniteField& f = m.field();
  const auto np = target.non_pivots();
  if (np.empty()) return Subspace::whole(f, m.rows());
  // w -> reduce(w)[np] is linear and vanishes exactly on the target.
  Matrix proj(f, m.cols(), np.size());
  for (std::size_t c = 0; c < m.cols(); ++c) {
    const Vec r = target.reduce(unit_vec(m.cols(), c));
    for (std::size_t j = 0; j < np.size(); ++j) proj(c, j) = r[np[j]];
  }
  return Subspace::of_rows(left_kernel(m * proj));
}

}  // namespace toporing
