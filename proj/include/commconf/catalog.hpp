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

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "commconf/finite_group.hpp"

namespace commconf {

using MatrixFunction = std::function<Rational(const QMatrix&)>;

struct Irreducible {
  std::string label;
  ClassFunction character;
  MatrixFunction evaluate;  // character as a function of the group element
};

/// Named irreducible characters of one of the Weyl groups in scope, given as
/// functions of the matrix. Construction checks orthonormality and
/// sum of squared dimensions = |G| and throws CatalogError on failure.
class IrreducibleCatalog {
 public:
  IrreducibleCatalog(std::string tag, GroupPtr group,
                     std::vector<std::pair<std::string, MatrixFunction>> irreducibles);

  /// Outer tensor product on the block-diagonal product group. Labels pair
  /// up as "x⊠y"; the trivial label of a trivial group is dropped.
  static IrreducibleCatalog product(const IrreducibleCatalog& a, const IrreducibleCatalog& b,
                                    const GroupPtr& product);

  const std::string& tag() const { return tag_; }
  const GroupPtr& group() const { return group_; }
  const std::vector<Irreducible>& irreducibles() const { return irreducibles_; }
  const Irreducible& at(std::string_view label) const;

 private:
  std::string tag_;
  GroupPtr group_;
  std::vector<Irreducible> irreducibles_;
};

// Catalogs for the concrete reflection representations used by weyl-data.
IrreducibleCatalog trivial_catalog(const GroupPtr& group);
/// Z/2 acting by a matrix of determinant -1: 1, σ = det.
IrreducibleCatalog z2_catalog(const GroupPtr& group);
/// Σ3 as 3x3 permutation matrices: 1, std = trace - 1, sgn = det.
IrreducibleCatalog s3_permutation_catalog(const GroupPtr& group);
/// Σ3 on its 2-dimensional reflection representation: 1, std = trace, sgn = det.
IrreducibleCatalog s3_reflection_catalog(const GroupPtr& group);
/// D8 as signed 2x2 permutation matrices, with s the coordinate swap and r the
/// quarter turn: a, b, c have kernels <s, r^2>, <sr, r^2>, <r>; d is the
/// defining representation.
IrreducibleCatalog d8_catalog(const GroupPtr& group);

struct Multiplicity {
  std::string label;
  long mult = 0;
  bool operator==(const Multiplicity&) const = default;
};
using Decomposition = std::vector<Multiplicity>;

/// Multiplicities of every irreducible with nonzero multiplicity, in catalog
/// order. Throws NotACharacter for negative or fractional multiplicities and
/// GroupMismatch when f lives on another group.
Decomposition decompose(const ClassFunction& f, const IrreducibleCatalog& catalog);

ClassFunction reassemble(const Decomposition& d, const IrreducibleCatalog& catalog);

/// "2 ⊕ 3σ" style; the trivial representation renders as its multiplicity
/// and the zero module as "0".
std::string render_decomposition(const Decomposition& d);

/// Inverse of render_decomposition, order-insensitive. Throws ParseError.
Decomposition parse_decomposition(std::string_view text);

/// Multiset equality (ignores order and zero multiplicities).
bool same_multiset(const Decomposition& a, const Decomposition& b);

}  // namespace commconf
