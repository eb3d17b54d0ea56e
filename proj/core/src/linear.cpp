#include "hopfkit/linear.hpp"

#include <algorithm>

namespace hopfkit {

Vector zero_vector(Field field, std::size_t n) { return Vector(n, Scalar::zero(field)); }

Vector unit_vector(Field field, std::size_t n, std::size_t index) {
  Vector v = zero_vector(field, n);
  v.at(index) = Scalar::one(field);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

void axpy(Vector& y, const Scalar& a, const Vector& x) {
  if (y.size() != x.size()) throw DimensionError("axpy: length mismatch");
  if (a.is_zero()) return;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) y[i] += a * x[i];
  }
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector sum: length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionError("vector difference: length mismatch");
  Vector r = a;
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

Vector operator*(const Scalar& a, const Vector& x) {
  Vector r = x;
  for (auto& s : r) s *= a;
  return r;
}

// ---------------------------------------------------------------------------
// Matrix

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), entries_(rows * cols, Scalar::zero(field)) {}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar::one(field);
  return m;
}

Matrix Matrix::from_ints(Field field, const std::vector<std::vector<long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("from_ints: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Scalar(field, rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_rows(Field field, std::size_t cols, std::span<const Vector> rows) {
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_columns(Field field, std::size_t rows, std::span<const Vector> cols) {
  Matrix m(field, rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_column(c, cols[c]);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(entries_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

void Matrix::set_column(std::size_t c, const Vector& v) {
  if (v.size() != rows_) throw DimensionError("set_column: length mismatch");
  for (std::size_t r = 0; r < rows_; ++r) {
    if (!(v[r].field() == field_)) throw FieldMismatch("set_column: field mismatch");
    (*this)(r, c) = v[r];
  }
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  if (v.size() != cols_) throw DimensionError("set_row: length mismatch");
  for (std::size_t c = 0; c < cols_; ++c) {
    if (!(v[c].field() == field_)) throw FieldMismatch("set_row: field mismatch");
    (*this)(r, c) = v[c];
  }
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionError("apply: length mismatch");
  Vector out = zero_vector(field_, rows_);
  for (std::size_t c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(entries_.begin(), entries_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += rhs.entries_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw DimensionError("matrix difference: shape mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= rhs.entries_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product: shape mismatch");
  if (!(a.field_ == b.field_)) throw FieldMismatch("matrix product: field mismatch");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        const Scalar& bkj = b(k, j);
        if (!bkj.is_zero()) out(i, j) += aik * bkj;
      }
    }
  }
  return out;
}

Matrix operator*(const Scalar& s, Matrix m) {
  for (auto& e : m.entries_) e *= s;
  return m;
}

bool Matrix::operator==(const Matrix& rhs) const {
  return field_ == rhs.field_ && rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
}

// ---------------------------------------------------------------------------
// Echelon forms and derived operations

Echelon rref(const Matrix& m) {
  Echelon e{m, {}};
  Matrix& a = e.reduced;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows; ++c) {
    std::size_t pivot_row = rows;
    for (std::size_t r = next; r < rows; ++r) {
      if (!a(r, c).is_zero()) {
        pivot_row = r;
        break;
      }
    }
    if (pivot_row == rows) continue;
    if (pivot_row != next) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(a(pivot_row, k), a(next, k));
    }
    const Scalar inv = a(next, c).inverse();
    for (std::size_t k = c; k < cols; ++k) a(next, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == next || a(r, c).is_zero()) continue;
      const Scalar factor = a(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        if (!a(next, k).is_zero()) a(r, k) -= factor * a(next, k);
      }
    }
    e.pivots.push_back(c);
    ++next;
  }
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Matrix kronecker(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw FieldMismatch("kronecker: field mismatch");
  Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (aij.is_zero()) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!b(k, l).is_zero()) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
    }
  return out;
}

Subspace kernel(const Matrix& m) {
  const Echelon e = rref(m);
  const Field f = m.field();
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    Vector v = zero_vector(f, n);
    v[free] = Scalar::one(f);
    for (std::size_t r = 0; r < e.rank(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Subspace::span(f, n, basis);
}

Subspace image(const Matrix& m) { return Subspace::row_span(m.transpose()); }

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side length mismatch");
  Matrix aug(a.field(), a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug(r, c) = a(r, c);
    aug(r, a.cols()) = b[r];
  }
  const Echelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  Vector x = zero_vector(a.field(), a.cols());
  for (std::size_t r = 0; r < e.rank(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(Field field, std::size_t ambient_dim)
    : field_(field), ambient_(ambient_dim), basis_(field, 0, ambient_dim) {}

Subspace Subspace::full(Field field, std::size_t ambient_dim) {
  return row_span(Matrix::identity(field, ambient_dim));
}

Subspace Subspace::span(Field field, std::size_t ambient_dim, std::span<const Vector> vectors) {
  return row_span(Matrix::from_rows(field, ambient_dim, vectors));
}

Subspace Subspace::row_span(const Matrix& m) {
  const Echelon e = rref(m);
  Subspace s(m.field(), m.cols());
  s.pivots_ = e.pivots;
  s.basis_ = Matrix(m.field(), e.rank(), m.cols());
  for (std::size_t r = 0; r < e.rank(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) s.basis_(r, c) = e.reduced(r, c);
  return s;
}

void Subspace::require_compatible(const Subspace& other) const {
  if (ambient_ != other.ambient_) throw DimensionError("subspaces live in different ambient spaces");
  if (!(field_ == other.field_)) throw FieldMismatch("subspaces over different fields");
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionError("reduce: vector length does not match ambient dimension");
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Scalar coeff = r[pivots_[i]];
    if (coeff.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_; ++c) {
      const Scalar& b = basis_(i, c);
      if (!b.is_zero()) r[c] -= coeff * b;
    }
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_compatible(other);
  for (std::size_t i = 0; i < other.dim(); ++i) {
    if (!contains(other.basis_vector(i))) return false;
  }
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw DimensionError("coordinates: vector is not in the subspace");
  Vector c;
  c.reserve(pivots_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

std::vector<std::size_t> Subspace::complement_indices() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < ambient_; ++i) {
    if (k < pivots_.size() && pivots_[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

Vector Subspace::quotient_coordinates(const Vector& v) const {
  const Vector r = reduce(v);
  Vector q;
  for (auto i : complement_indices()) q.push_back(r[i]);
  return q;
}

Matrix Subspace::quotient_projection() const {
  const auto comp = complement_indices();
  Matrix p(field_, comp.size(), ambient_);
  // Column j is the class of e_j: e_j itself when j is a complement index,
  // otherwise minus the complement part of the basis row with pivot j.
  std::vector<std::size_t> slot(ambient_, ambient_);
  for (std::size_t k = 0; k < comp.size(); ++k) slot[comp[k]] = k;
  for (std::size_t k = 0; k < comp.size(); ++k) p(k, comp[k]) = Scalar::one(field_);
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    for (std::size_t k = 0; k < comp.size(); ++k) p(k, pivots_[i]) = -basis_(i, comp[k]);
  }
  return p;
}

Subspace Subspace::sum(const Subspace& other) const {
  require_compatible(other);
  Matrix stacked(field_, dim() + other.dim(), ambient_);
  for (std::size_t r = 0; r < dim(); ++r) stacked.set_row(r, basis_.row(r));
  for (std::size_t r = 0; r < other.dim(); ++r) stacked.set_row(dim() + r, other.basis_.row(r));
  return row_span(stacked);
}

Subspace Subspace::intersection(const Subspace& other) const {
  require_compatible(other);
  // Columns are the two bases; a kernel vector (a, b) gives a·U = -b·V.
  Matrix stacked(field_, ambient_, dim() + other.dim());
  for (std::size_t r = 0; r < dim(); ++r) stacked.set_column(r, basis_.row(r));
  for (std::size_t r = 0; r < other.dim(); ++r) stacked.set_column(dim() + r, other.basis_.row(r));
  const Subspace rel = kernel(stacked);
  std::vector<Vector> gens;
  for (std::size_t k = 0; k < rel.dim(); ++k) {
    const Vector coeffs = rel.basis_vector(k);
    Vector v = zero_vector(field_, ambient_);
    for (std::size_t r = 0; r < dim(); ++r) axpy(v, coeffs[r], basis_.row(r));
    gens.push_back(std::move(v));
  }
  return span(field_, ambient_, gens);
}

bool Subspace::operator==(const Subspace& rhs) const {
  return field_ == rhs.field_ && ambient_ == rhs.ambient_ && pivots_ == rhs.pivots_ && basis_ == rhs.basis_;
}

// ---------------------------------------------------------------------------
// SpanBuilder

SpanBuilder::SpanBuilder(Field field, std::size_t ambient_dim) : field_(field), ambient_(ambient_dim) {}

bool SpanBuilder::insert(Vector v) {
  if (v.size() != ambient_) throw DimensionError("SpanBuilder::insert: length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const Scalar coeff = v[pivots_[i]];
    if (coeff.is_zero()) continue;
    const Vector& row = rows_[i];
    for (std::size_t c = pivots_[i]; c < ambient_; ++c) {
      if (!row[c].is_zero()) v[c] -= coeff * row[c];
    }
  }
  std::size_t lead = ambient_;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (!v[c].is_zero()) {
      lead = c;
      break;
    }
  }
  if (lead == ambient_) return false;
  const Scalar inv = v[lead].inverse();
  for (std::size_t c = lead; c < ambient_; ++c) v[c] *= inv;
  // Keep all rows fully reduced against the new pivot.
  for (auto& row : rows_) {
    const Scalar coeff = row[lead];
    if (coeff.is_zero()) continue;
    for (std::size_t c = lead; c < ambient_; ++c) {
      if (!v[c].is_zero()) row[c] -= coeff * v[c];
    }
  }
  const auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), lead) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, lead);
  rows_.insert(rows_.begin() + pos, std::move(v));
  return true;
}

Subspace SpanBuilder::build() const { return Subspace::span(field_, ambient_, rows_); }

}  // namespace hopfkit
