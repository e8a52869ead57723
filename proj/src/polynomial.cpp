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

#include "commconf/polynomial.hpp"

#include <sstream>

#include "commconf/errors.hpp"

namespace commconf {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

RationalPolynomial RationalPolynomial::constant(const Rational& c) {
  return RationalPolynomial(std::vector<Rational>{c});
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<size_t>(degree) + 1);
  v.back() = c;
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::one_minus_power(int d) {
  return constant(1) - monomial(1, d);
}

void RationalPolynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Rational RationalPolynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

Rational RationalPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& o) const {
  std::vector<Rational> v(std::max(coeffs_.size(), o.coeffs_.size()));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& o) const {
  return *this + o * Rational(-1);
}

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<Rational> v(coeffs_.size() + o.coeffs_.size() - 1);
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
  return RationalPolynomial(std::move(v));
}

RationalPolynomial RationalPolynomial::operator*(const Rational& c) const {
  std::vector<Rational> v = coeffs_;
  for (auto& x : v) x *= c;
  return RationalPolynomial(std::move(v));
}

std::string RationalPolynomial::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (sgn(c) == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) os << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

RationalPolynomial poly_div_exact(const RationalPolynomial& num,
                                  const RationalPolynomial& den) {
  if (den.is_zero()) throw DimensionMismatch("poly_div_exact: division by the zero polynomial");
  if (num.is_zero()) return {};
  std::vector<Rational> rem = num.coefficients();
  const int dd = den.degree();
  const int qd = num.degree() - dd;
  if (qd < 0) throw NonZeroRemainder("poly_div_exact: " + num.to_string() + " not divisible by " + den.to_string());
  std::vector<Rational> quot(static_cast<size_t>(qd) + 1);
  const auto& dc = den.coefficients();
  for (int i = qd; i >= 0; --i) {
    Rational c = rem[static_cast<size_t>(i + dd)] / den.leading();
    quot[static_cast<size_t>(i)] = c;
    if (sgn(c) == 0) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<size_t>(i + j)] -= c * dc[static_cast<size_t>(j)];
  }
  for (const auto& r : rem) {
    if (sgn(r) != 0)
      throw NonZeroRemainder("poly_div_exact: " + num.to_string() + " not divisible by " + den.to_string());
  }
  return RationalPolynomial(std::move(quot));
}

}  // namespace commconf
