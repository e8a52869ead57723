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

#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "commconf/polynomial.hpp"
#include "commconf/rational.hpp"

namespace commconf {

/// Dense row-major rational matrix.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  QMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static QMatrix identity(std::size_t n);
  /// Stacks row vectors; all rows must have the same length.
  static QMatrix from_rows(const std::vector<QVector>& rows, std::size_t cols);
  static QMatrix block_diagonal(const QMatrix& a, const QMatrix& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  const std::vector<Rational>& entries() const { return entries_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  QMatrix operator*(const QMatrix& o) const;
  QVector operator*(const QVector& v) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  QMatrix operator*(const Rational& c) const;

  bool operator==(const QMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }
  /// Lexicographic on (rows, cols, entries); used to key group elements.
  bool operator<(const QMatrix& o) const;

  QMatrix transpose() const;
  Rational trace() const;
  QMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  QVector column(std::size_t c) const;
  /// Throws Singular.
  QMatrix inverse() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Reduced row-echelon form by exact Gauss-Jordan elimination.
QMatrix rref(const QMatrix& m);
/// rref together with the pivot column of each nonzero row.
QMatrix rref(const QMatrix& m, std::vector<std::size_t>& pivots);

std::size_t rank(const QMatrix& m);

/// Basis of the right null space {v : m v = 0}; one vector per free column.
std::vector<QVector> kernel_basis(const QMatrix& m);

/// det(I + sign * t * g) as a polynomial in t (sign is +1 or -1).
/// The t^k coefficient is sign^k times the k-th elementary symmetric function
/// of the eigenvalues of g, obtained from the Faddeev-LeVerrier recurrence.
RationalPolynomial char_matrix_poly(const QMatrix& g, int sign);

/// Transpose of the inverse. Throws Singular.
QMatrix contragredient(const QMatrix& m);

/// Matrix of the map induced by `action` on the quotient Q^n / span(relations),
/// expressed in the basis of coordinate vectors that are not eliminated.
/// Relations are eliminated from the right: each pivot is the last nonzero
/// coordinate of an echelon row, so lower-index basis vectors survive.
struct QuotientAction {
  std::vector<std::size_t> surviving;  // coordinate indices forming the basis
  QMatrix matrix;                      // action on that basis
};
QuotientAction quotient_action(const QMatrix& action, const std::vector<QVector>& relations);

/// Dimension of Q^n / span(relations).
std::size_t quotient_dimension(std::size_t n, const std::vector<QVector>& relations);

}  // namespace commconf
