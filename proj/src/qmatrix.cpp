// Copyright 2026 The commconf Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commconf/qmatrix.hpp"

#include <algorithm>
#include <sstream>

#include "commconf/errors.hpp"

namespace commconf {

QMatrix::QMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

QMatrix::QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) throw DimensionMismatch("QMatrix: entry count != rows * cols");
  for (auto& x : entries_) x.canonicalize();
}

QMatrix::QMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  entries_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("QMatrix: ragged initializer");
    for (long x : r) entries_.emplace_back(x);
  }
}

QMatrix QMatrix::identity(std::size_t n) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::from_rows(const std::vector<QVector>& rows, std::size_t cols) {
  QMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("QMatrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

QMatrix QMatrix::block_diagonal(const QMatrix& a, const QMatrix& b) {
  QMatrix m(a.rows_ + b.rows_, a.cols_ + b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t c = 0; c < a.cols_; ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) m(a.rows_ + r, a.cols_ + c) = b(r, c);
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("QMatrix product: inner dimensions differ");
  QMatrix m(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
    }
  return m;
}

QVector QMatrix::operator*(const QVector& v) const {
  if (cols_ != v.size()) throw DimensionMismatch("QMatrix * vector: size mismatch");
  QVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("QMatrix sum: shape mismatch");
  QMatrix m = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) m.entries_[i] += o.entries_[i];
  return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const { return *this + o * Rational(-1); }

QMatrix QMatrix::operator*(const Rational& c) const {
  QMatrix m = *this;
  for (auto& x : m.entries_) x *= c;
  return m;
}

bool QMatrix::operator<(const QMatrix& o) const {
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    int c = cmp(entries_[i], o.entries_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

QMatrix QMatrix::transpose() const {
  QMatrix m(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) m(c, r) = (*this)(r, c);
  return m;
}

Rational QMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

QMatrix QMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw DimensionMismatch("QMatrix::block out of range");
  QMatrix m(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) m(r, c) = (*this)(r0 + r, c0 + c);
  return m;
}

QVector QMatrix::column(std::size_t c) const {
  QVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

QMatrix QMatrix::inverse() const {
  if (!is_square()) throw Singular("inverse of a non-square matrix");
  const std::size_t n = rows_;
  QMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = (*this)(r, c);
    aug(r, n + r) = 1;
  }
  std::vector<std::size_t> pivots;
  QMatrix red = rref(aug, pivots);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Singular("matrix is singular");
  return red.block(0, n, n, n);
}

std::string QMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t r = 0; r < rows_; ++r) {
    os << (r ? ", [" : "[");
    for (std::size_t c = 0; c < cols_; ++c) os << (c ? ", " : "") << (*this)(r, c).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

QMatrix rref(const QMatrix& m, std::vector<std::size_t>& pivots) {
  QMatrix a = m;
  pivots.clear();
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t p = row;
    while (p < a.rows() && sgn(a(p, col)) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != row)
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(p, c), a(row, c));
    const Rational inv = 1 / a(row, col);
    for (std::size_t c = col; c < a.cols(); ++c) a(row, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == row || sgn(a(r, col)) == 0) continue;
      const Rational f = a(r, col);
      for (std::size_t c = col; c < a.cols(); ++c) a(r, c) -= f * a(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return a;
}

QMatrix rref(const QMatrix& m) {
  std::vector<std::size_t> pivots;
  return rref(m, pivots);
}

std::size_t rank(const QMatrix& m) {
  std::vector<std::size_t> pivots;
  rref(m, pivots);
  return pivots.size();
}

std::vector<QVector> kernel_basis(const QMatrix& m) {
  std::vector<std::size_t> pivots;
  const QMatrix red = rref(m, pivots);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    QVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -red(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalPolynomial char_matrix_poly(const QMatrix& g, int sign) {
  if (!g.is_square()) throw DimensionMismatch("char_matrix_poly: matrix not square");
  const std::size_t n = g.rows();
  // c[j] is the coefficient of lambda^j in det(lambda I - g).
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  QMatrix mk(n, n);
  const QMatrix id = QMatrix::identity(n);
  for (std::size_t k = 1; k <= n; ++k) {
    mk = g * mk + id * c[n - k + 1];
    c[n - k] = -(g * mk).trace() / Rational(static_cast<long>(k));
  }
  // det(I + s t g) = sum_k s^k e_k t^k with e_k = (-1)^k c[n-k].
  std::vector<Rational> out(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    Rational e = (k % 2 == 0) ? c[n - k] : Rational(-c[n - k]);
    out[k] = (sign < 0 && k % 2 == 1) ? Rational(-e) : e;
  }
  return RationalPolynomial(std::move(out));
}

QMatrix contragredient(const QMatrix& m) { return m.inverse().transpose(); }

namespace {

// Echelon rows of span(relations) with pivots taken at the last nonzero
// coordinate, by running ordinary rref on the coordinate-reversed vectors.
std::vector<std::pair<std::size_t, QVector>> right_echelon(std::size_t n,
                                                           const std::vector<QVector>& relations) {
  QMatrix rev(relations.size(), n);
  for (std::size_t r = 0; r < relations.size(); ++r) {
    if (relations[r].size() != n) throw DimensionMismatch("quotient: relation of wrong length");
    for (std::size_t c = 0; c < n; ++c) rev(r, n - 1 - c) = relations[r][c];
  }
  std::vector<std::size_t> pivots;
  const QMatrix red = rref(rev, pivots);
  std::vector<std::pair<std::size_t, QVector>> rows;
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    QVector v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = red(r, n - 1 - c);
    rows.emplace_back(n - 1 - pivots[r], std::move(v));
  }
  return rows;
}

}  // namespace

std::size_t quotient_dimension(std::size_t n, const std::vector<QVector>& relations) {
  if (relations.empty()) return n;
  return n - rank(QMatrix::from_rows(relations, n));
}

QuotientAction quotient_action(const QMatrix& action, const std::vector<QVector>& relations) {
  const std::size_t n = action.rows();
  if (!action.is_square()) throw DimensionMismatch("quotient_action: action not square");
  const auto echelon = right_echelon(n, relations);
  std::vector<bool> eliminated(n, false);
  for (const auto& [p, v] : echelon) eliminated[p] = true;
  QuotientAction out;
  for (std::size_t i = 0; i < n; ++i)
    if (!eliminated[i]) out.surviving.push_back(i);

  // Reduce a vector modulo the relations; each echelon row has a 1 at its
  // pivot and zeros at the other pivots, so one pass suffices.
  auto reduce = [&](QVector v) {
    for (const auto& [p, row] : echelon) {
      if (sgn(v[p]) == 0) continue;
      const Rational f = v[p];
      for (std::size_t c = 0; c < n; ++c) v[c] -= f * row[c];
    }
    return v;
  };

  for (const auto& [p, row] : echelon) {
    const QVector moved = reduce(action * row);
    for (const auto& x : moved)
      if (sgn(x) != 0) throw InvariantViolation("quotient_action: action does not preserve the relations");
  }

  const std::size_t q = out.surviving.size();
  out.matrix = QMatrix(q, q);
  for (std::size_t j = 0; j < q; ++j) {
    QVector image = reduce(action.column(out.surviving[j]));
    for (std::size_t i = 0; i < q; ++i) out.matrix(i, j) = image[out.surviving[i]];
  }
  return out;
}

}  // namespace commconf
