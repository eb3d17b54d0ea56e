#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "hopfkit/scalar.hpp"

namespace hopfkit {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t n);
Vector unit_vector(Field field, std::size_t n, std::size_t index);
bool is_zero(const Vector& v);
/// y += a * x
void axpy(Vector& y, const Scalar& a, const Vector& x);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& a, const Vector& x);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Integer entries; handy for fixtures and tests.
  static Matrix from_ints(Field field, const std::vector<std::vector<long>>& rows);
  static Matrix from_rows(Field field, std::size_t cols, std::span<const Vector> rows);
  static Matrix from_columns(Field field, std::size_t rows, std::span<const Vector> cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  void set_column(std::size_t c, const Vector& v);
  void set_row(std::size_t r, const Vector& v);

  Matrix transpose() const;
  Vector apply(const Vector& v) const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& s, Matrix m);

  bool operator==(const Matrix& rhs) const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Reduced row-echelon form. Pivot rows come first; pivot entries are 1 and the
/// pivot columns are zero elsewhere. Pivot choice is first nonzero in column order.
struct Echelon {
  Matrix reduced;  // same shape as the input; rows past rank() are zero
  std::vector<std::size_t> pivots;
  std::size_t rank() const { return pivots.size(); }
};

Echelon rref(const Matrix& m);
std::size_t rank(const Matrix& m);

/// Tensor product of matrices; basis of V⊗W ordered as (i, j) -> i * dim(W) + j.
Matrix kronecker(const Matrix& a, const Matrix& b);

class Subspace;

Subspace kernel(const Matrix& m);
/// Column span.
Subspace image(const Matrix& m);

/// Some x with a x = b when b lies in the column span of a (free variables set
/// to zero), otherwise nullopt.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Subspace of field^n stored by its canonical (reduced row-echelon) basis, so
/// equality of subspaces is entrywise equality of bases.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace.
  Subspace(Field field, std::size_t ambient_dim);

  static Subspace full(Field field, std::size_t ambient_dim);
  static Subspace span(Field field, std::size_t ambient_dim, std::span<const Vector> vectors);
  /// Row span of m.
  static Subspace row_span(const Matrix& m);

  const Field& field() const { return field_; }
  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return pivots_.size(); }
  /// dim() x ambient_dim() matrix in reduced row-echelon form.
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  Vector basis_vector(std::size_t i) const { return basis_.row(i); }

  /// Normal form of v modulo the subspace: zero on every pivot coordinate.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of a member in the canonical basis (its entries at the pivots).
  Vector coordinates(const Vector& v) const;

  /// Standard basis indices not among the pivots; e_i for these indices form
  /// representatives of a basis of the quotient.
  std::vector<std::size_t> complement_indices() const;
  /// Coordinates of the class of v in the quotient basis given by complement_indices().
  Vector quotient_coordinates(const Vector& v) const;
  /// Matrix of the quotient projection, (ambient - dim) x ambient.
  Matrix quotient_projection() const;

  Subspace sum(const Subspace& other) const;
  Subspace intersection(const Subspace& other) const;

  bool operator==(const Subspace& rhs) const;

 private:
  void require_compatible(const Subspace& other) const;

  Field field_;
  std::size_t ambient_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Incremental canonical span builder: insert vectors one by one, read off the
/// resulting Subspace. Keeps memory proportional to the span, not the generators.
class SpanBuilder {
 public:
  SpanBuilder(Field field, std::size_t ambient_dim);
  /// Returns true if v was independent of what was already inserted.
  bool insert(Vector v);
  std::size_t dim() const { return rows_.size(); }
  bool full() const { return rows_.size() == ambient_; }
  Subspace build() const;

 private:
  Field field_;
  std::size_t ambient_;
  // Echelon rows (pivot entry 1), sorted by pivot; not fully reduced until build().
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace hopfkit
