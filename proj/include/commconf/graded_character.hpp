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

#include <vector>

#include "commconf/catalog.hpp"
#include "commconf/finite_group.hpp"
#include "commconf/weyl.hpp"

namespace commconf {

/// Graded W-module character: cohomological degree -> class function.
/// Trailing zero degrees are trimmed.
class GradedCharacter {
 public:
  explicit GradedCharacter(GroupPtr group) : group_(std::move(group)) {}
  static GradedCharacter concentrated(const ClassFunction& chi, int degree);

  const GroupPtr& group() const { return group_; }
  /// -1 when empty.
  int top_degree() const { return static_cast<int>(degrees_.size()) - 1; }
  ClassFunction at(int degree) const;
  void add(int degree, const ClassFunction& chi);

  GradedCharacter shifted(int by) const;
  /// Keeps only the degrees < bound.
  GradedCharacter truncated_below(int bound) const;
  GradedCharacter operator+(const GradedCharacter& o) const;

  /// Identity-class values per degree.
  std::vector<long> dimensions() const;
  long euler_characteristic() const;

  bool operator==(const GradedCharacter& o) const;

 private:
  void trim();
  GroupPtr group_;
  std::vector<ClassFunction> degrees_;
};

/// Graded convolution of pointwise products. Throws GroupMismatch.
GradedCharacter kunneth(const GradedCharacter& x, const GradedCharacter& y);

/// <chi_n, 1> per degree. Throws NotACharacter when a pairing is not a
/// nonnegative integer.
std::vector<long> invariant_dims(const GradedCharacter& x);

std::vector<Decomposition> decompose(const GradedCharacter& x, const IrreducibleCatalog& catalog);

/// H*(T) = exterior algebra on the reflection representation: the degree-n
/// value at g is the t^n coefficient of det(I + t g).
GradedCharacter torus_character(const WeylDatum& d);

/// H*(G/T) from the Molien quotient prod(1 - q^d_i) / det(I - q g) per
/// non-circle factor (cohomological degree = 2 * polynomial degree), with the
/// circle-factor treatment selected by the convention.
/// Throws NonZeroRemainder for a malformed degree catalog.
GradedCharacter flag_character(const WeylDatum& d, Convention convention = Convention::Derived);

}  // namespace commconf
