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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commconf/catalog.hpp"
#include "commconf/finite_group.hpp"

namespace commconf {

enum class FactorKind { Circle, U, SU, Sp };

/// How a Circle factor enters G/T. Derived: the coset space of a circle by
/// itself is a point. Paper: when the group also has a non-circle factor,
/// each circle contributes an S^1 (with trivial Weyl action) to G/T.
enum class Convention { Derived, Paper };

std::string to_string(Convention c);
Convention parse_convention(std::string_view s);

/// Fundamental degrees per factor tag ("Sp2", "U3", ...). The standard table
/// is U(n): 1..n, SU(n): 2..n, Sp(n): 2,4,..,2n, Circle: none; entries in
/// `overrides` replace it, which is how a corrupted catalog is injected.
struct DegreeCatalog {
  std::map<std::string, std::vector<int>> overrides;
  std::vector<int> degrees(FactorKind kind, int n) const;
};

struct LieFactor {
  FactorKind kind = FactorKind::Circle;
  int n = 1;
  std::size_t rank = 1;
  std::vector<QMatrix> weyl_generators;  // on Q^rank
  std::vector<int> degrees;
  int pi1_rank = 0;

  std::string tag() const;
};

/// Builds a catalog factor. Throws CatalogError when the degrees do not
/// multiply to |W| (or their count differs from the rank).
LieFactor make_factor(FactorKind kind, int n, const DegreeCatalog& degrees = {});

/// A product of catalog factors. The Weyl group acts on Q^rank through the
/// block-diagonal reflection representation, which is also how its elements
/// are stored, so every element matrix is its own reflection matrix.
class WeylDatum {
 public:
  explicit WeylDatum(std::vector<LieFactor> factors);

  const std::vector<LieFactor>& factors() const { return factors_; }
  const GroupPtr& group() const { return group_; }
  std::size_t rank() const { return rank_; }
  int pi1_rank() const { return pi1_rank_; }
  std::string tag() const;
  /// Offset of factor i inside the block-diagonal representation.
  std::size_t offset(std::size_t i) const { return offsets_[i]; }
  /// Catalog of named irreducibles when every factor has one.
  const std::optional<IrreducibleCatalog>& catalog() const { return catalog_; }
  bool has_noncircle_factor() const;

 private:
  std::vector<LieFactor> factors_;
  std::vector<std::size_t> offsets_;
  GroupPtr group_;
  std::size_t rank_ = 0;
  int pi1_rank_ = 0;
  std::optional<IrreducibleCatalog> catalog_;
};

/// Parses tags such as "U2", "SU3", "Sp2", "S1xSU2", "U2xSp2"
/// (case-insensitive). Throws ParseError.
WeylDatum parse_datum(std::string_view tag, const DegreeCatalog& degrees = {});

}  // namespace commconf
