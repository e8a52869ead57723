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

#include <initializer_list>
#include <string>
#include <vector>

#include "commconf/rational.hpp"

namespace commconf {

/// Dense univariate polynomial over the rationals. Coefficients are indexed
/// by degree and trailing zeros are always trimmed, so the zero polynomial
/// has an empty coefficient list and degree() == kZeroDegree.
class RationalPolynomial {
 public:
  static constexpr int kZeroDegree = -1;

  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coefficients);
  RationalPolynomial(std::initializer_list<long> coefficients);

  static RationalPolynomial constant(const Rational& c);
  static RationalPolynomial monomial(const Rational& c, int degree);
  /// 1 - q^d
  static RationalPolynomial one_minus_power(int d);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  /// Coefficient of q^i; zero outside the support.
  Rational coefficient(int i) const;
  const Rational& leading() const { return coeffs_.back(); }

  Rational evaluate(const Rational& x) const;

  RationalPolynomial operator+(const RationalPolynomial& o) const;
  RationalPolynomial operator-(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const RationalPolynomial& o) const;
  RationalPolynomial operator*(const Rational& c) const;
  bool operator==(const RationalPolynomial& o) const = default;

  std::string to_string(char var = 'q') const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Exact polynomial division. Throws NonZeroRemainder when den does not
/// divide num, and DimensionMismatch when den is zero.
RationalPolynomial poly_div_exact(const RationalPolynomial& num,
                                  const RationalPolynomial& den);

}  // namespace commconf
