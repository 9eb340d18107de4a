#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "logder/scalar.hpp"

namespace logder {

using Vector = std::vector<Scalar>;

/// Row-major exact matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  void append_row(std::span<const Scalar> values);

  Vector operator*(std::span<const Scalar> v) const;
  friend bool operator==(const Matrix&, const Matrix&) = default;

  /// Rows as "p/q" strings separated by commas, one line per row.
  std::string to_csv() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;                    // reduced row echelon form, zero rows at the bottom
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
  std::size_t rank() const { return pivots.size(); }
};

/// Gauss-Jordan elimination; the pivot of each column is the first usable row.
RrefResult rref(Matrix m);

struct NullspaceResult {
  std::size_t rank = 0;
  std::vector<Vector> basis;  // one vector per free column, in column order
};

/// Exact kernel basis: for each free column f (increasing) the vector with v[f] = 1,
/// zero at the other free columns, pivot entries from back-substitution.
NullspaceResult rref_nullspace(const Matrix& m);

std::size_t rank(const Matrix& m);

Scalar determinant(Matrix m);

/// Reduces `v` against an RREF basis, zeroing every pivot coordinate of `basis`.
void reduce_against(Vector& v, const RrefResult& basis);

bool is_zero_vector(std::span<const Scalar> v);

/// Incrementally grown subspace kept in reduced echelon form (every stored row is
/// zero at the pivots of the others), so membership tests do not depend on insertion order.
class EchelonSpan {
 public:
  explicit EchelonSpan(std::size_t cols) : cols_(cols) {}
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return rows_.size(); }
  /// v minus its projection onto the span along the pivot coordinates.
  Vector reduce(Vector v) const;
  bool contains(const Vector& v) const { return is_zero_vector(reduce(v)); }
  /// Adds v; returns false (span unchanged) when v already lies in the span.
  bool add(const Vector& v);

 private:
  std::size_t cols_;
  std::vector<Vector> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace logder
