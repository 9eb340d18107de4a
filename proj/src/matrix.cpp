#include "logder/matrix.hpp"

#include <sstream>

#include "logder/error.hpp"

namespace logder {

Matrix::Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::InvalidArgument, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void Matrix::append_row(std::span<const Scalar> values) {
  if (values.size() != cols_) throw Error(ErrorKind::InvalidArgument, "append_row: width mismatch");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

Vector Matrix::operator*(std::span<const Scalar> v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "matrix-vector size mismatch");
  Vector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      const Scalar& a = (*this)(r, c);
      if (!a.is_zero() && !v[c].is_zero()) out[r] += a * v[c];
    }
  }
  return out;
}

std::string Matrix::to_csv() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (c) os << ',';
      os << (*this)(r, c).to_string();
    }
    os << '\n';
  }
  return os.str();
}

RrefResult rref(Matrix m) {
  RrefResult out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t sel = pivot_row;
    while (sel < rows && m(sel, c).is_zero()) ++sel;
    if (sel == rows) continue;
    if (sel != pivot_row) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(sel, k), m(pivot_row, k));
    }
    const Scalar inv = m(pivot_row, c).inverse();
    for (std::size_t k = c; k < cols; ++k) {
      if (!m(pivot_row, k).is_zero()) m(pivot_row, k) *= inv;
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pivot_row || m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c);
      for (std::size_t k = c; k < cols; ++k) {
        const Scalar& p = m(pivot_row, k);
        if (!p.is_zero()) m(r, k) -= factor * p;
      }
    }
    out.pivots.push_back(c);
    ++pivot_row;
  }
  out.reduced = std::move(m);
  return out;
}

NullspaceResult rref_nullspace(const Matrix& m) {
  RrefResult red = rref(m);
  NullspaceResult out;
  out.rank = red.rank();
  const std::size_t cols = m.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t p : red.pivots) is_pivot[p] = true;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t i = 0; i < red.pivots.size(); ++i) {
      const Scalar& a = red.reduced(i, f);
      if (!a.is_zero()) v[red.pivots[i]] = -a;
    }
    out.basis.push_back(std::move(v));
  }
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank(); }

Scalar determinant(Matrix m) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::InvalidArgument, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && m(sel, c).is_zero()) ++sel;
    if (sel == n) return Scalar(0);
    if (sel != c) {
      for (std::size_t k = 0; k < n; ++k) std::swap(m(sel, k), m(c, k));
      det = -det;
    }
    det *= m(c, c);
    const Scalar inv = m(c, c).inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c).is_zero()) continue;
      const Scalar factor = m(r, c) * inv;
      for (std::size_t k = c; k < n; ++k) m(r, k) -= factor * m(c, k);
    }
  }
  return det;
}

void reduce_against(Vector& v, const RrefResult& basis) {
  for (std::size_t i = 0; i < basis.pivots.size(); ++i) {
    const std::size_t p = basis.pivots[i];
    if (v[p].is_zero()) continue;
    const Scalar factor = v[p];
    auto row = basis.reduced.row(i);
    for (std::size_t k = 0; k < v.size(); ++k) {
      if (!row[k].is_zero()) v[k] -= factor * row[k];
    }
  }
}

bool is_zero_vector(std::span<const Scalar> v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector EchelonSpan::reduce(Vector v) const {
  if (v.size() != cols_) throw Error(ErrorKind::InvalidArgument, "EchelonSpan: width mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t p = pivots_[i];
    if (v[p].is_zero()) continue;
    const Scalar factor = v[p];
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!rows_[i][k].is_zero()) v[k] -= factor * rows_[i][k];
    }
  }
  return v;
}

bool EchelonSpan::add(const Vector& v) {
  Vector r = reduce(v);
  std::size_t p = 0;
  while (p < cols_ && r[p].is_zero()) ++p;
  if (p == cols_) return false;
  const Scalar inv = r[p].inverse();
  for (auto& x : r) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    const Scalar factor = row[p];
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!r[k].is_zero()) row[k] -= factor * r[k];
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  return true;
}

}  // namespace logder
