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

#include "commconf/graded_character.hpp"

#include <algorithm>

#include "commconf/errors.hpp"

namespace commconf {

GradedCharacter GradedCharacter::concentrated(const ClassFunction& chi, int degree) {
  GradedCharacter g(chi.group());
  g.add(degree, chi);
  return g;
}

ClassFunction GradedCharacter::at(int degree) const {
  if (degree < 0 || degree > top_degree()) return ClassFunction::zero(group_);
  return degrees_[static_cast<std::size_t>(degree)];
}

void GradedCharacter::add(int degree, const ClassFunction& chi) {
  if (chi.group() != group_) throw GroupMismatch("GradedCharacter::add: different group");
  if (degree < 0) throw DimensionMismatch("GradedCharacter: negative degree");
  while (top_degree() < degree) degrees_.push_back(ClassFunction::zero(group_));
  auto& slot = degrees_[static_cast<std::size_t>(degree)];
  slot = slot + chi;
  trim();
}

void GradedCharacter::trim() {
  while (!degrees_.empty() && degrees_.back().is_zero()) degrees_.pop_back();
}

GradedCharacter GradedCharacter::shifted(int by) const {
  GradedCharacter g(group_);
  for (int n = 0; n <= top_degree(); ++n)
    if (n + by >= 0) g.add(n + by, at(n));
  return g;
}

GradedCharacter GradedCharacter::truncated_below(int bound) const {
  GradedCharacter g(group_);
  for (int n = 0; n <= top_degree() && n < bound; ++n) g.add(n, at(n));
  return g;
}

GradedCharacter GradedCharacter::operator+(const GradedCharacter& o) const {
  GradedCharacter g = *this;
  for (int n = 0; n <= o.top_degree(); ++n) g.add(n, o.at(n));
  return g;
}

std::vector<long> GradedCharacter::dimensions() const {
  std::vector<long> dims;
  for (const auto& chi : degrees_) dims.push_back(chi.degree().get_num().get_si());
  return dims;
}

long GradedCharacter::euler_characteristic() const {
  long chi = 0;
  const auto dims = dimensions();
  for (std::size_t n = 0; n < dims.size(); ++n) chi += (n % 2 ? -1 : 1) * dims[n];
  return chi;
}

bool GradedCharacter::operator==(const GradedCharacter& o) const {
  return group_ == o.group_ && degrees_ == o.degrees_;
}

GradedCharacter kunneth(const GradedCharacter& x, const GradedCharacter& y) {
  if (x.group() != y.group()) throw GroupMismatch("kunneth: different groups");
  GradedCharacter out(x.group());
  for (int p = 0; p <= x.top_degree(); ++p)
    for (int q = 0; q <= y.top_degree(); ++q) out.add(p + q, x.at(p) * y.at(q));
  return out;
}

std::vector<long> invariant_dims(const GradedCharacter& x) {
  std::vector<long> dims;
  const ClassFunction one = ClassFunction::trivial(x.group());
  for (int n = 0; n <= x.top_degree(); ++n) {
    const Rational m = inner_product(x.at(n), one);
    if (!is_integer(m) || sgn(m) < 0)
      throw NotACharacter("invariant dimension in degree " + std::to_string(n) + " is " + m.get_str());
    dims.push_back(m.get_num().get_si());
  }
  return dims;
}

std::vector<Decomposition> decompose(const GradedCharacter& x, const IrreducibleCatalog& catalog) {
  std::vector<Decomposition> out;
  for (int n = 0; n <= x.top_degree(); ++n) out.push_back(decompose(x.at(n), catalog));
  return out;
}

GradedCharacter torus_character(const WeylDatum& d) {
  const auto& grp = d.group();
  const int r = static_cast<int>(d.rank());
  std::vector<std::vector<Rational>> values(static_cast<std::size_t>(r) + 1);
  for (std::size_t c = 0; c < grp->class_count(); ++c) {
    const RationalPolynomial p = char_matrix_poly(grp->class_representative(c), +1);
    for (int n = 0; n <= r; ++n) values[static_cast<std::size_t>(n)].push_back(p.coefficient(n));
  }
  GradedCharacter out(grp);
  for (int n = 0; n <= r; ++n) out.add(n, ClassFunction(grp, values[static_cast<std::size_t>(n)]));
  return out;
}

GradedCharacter flag_character(const WeylDatum& d, Convention convention) {
  const auto& grp = d.group();
  std::vector<RationalPolynomial> per_class;
  for (std::size_t c = 0; c < grp->class_count(); ++c) {
    const QMatrix& g = grp->class_representative(c);
    RationalPolynomial total = RationalPolynomial::constant(1);
    for (std::size_t i = 0; i < d.factors().size(); ++i) {
      const LieFactor& f = d.factors()[i];
      if (f.kind == FactorKind::Circle) continue;
      RationalPolynomial num = RationalPolynomial::constant(1);
      for (int deg : f.degrees) num = num * RationalPolynomial::one_minus_power(deg);
      const QMatrix block = g.block(d.offset(i), d.offset(i), f.rank, f.rank);
      total = total * poly_div_exact(num, char_matrix_poly(block, -1));
    }
    per_class.push_back(std::move(total));
  }
  GradedCharacter out(grp);
  int top = 0;
  for (const auto& p : per_class) top = std::max(top, p.degree());
  for (int j = 0; j <= top; ++j) {
    std::vector<Rational> v;
    for (const auto& p : per_class) v.push_back(p.coefficient(j));
    out.add(2 * j, ClassFunction(grp, std::move(v)));
  }
  if (convention == Convention::Paper && d.has_noncircle_factor()) {
    GradedCharacter circle = GradedCharacter::concentrated(ClassFunction::trivial(grp), 0);
    circle.add(1, ClassFunction::trivial(grp));
    for (const auto& f : d.factors())
      if (f.kind == FactorKind::Circle) out = kunneth(out, circle);
  }
  return out;
}

}  // namespace commconf
