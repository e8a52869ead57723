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

#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "commconf/qmatrix.hpp"
#include "commconf/rational.hpp"

namespace commconf {

struct ConjugacyClass {
  std::vector<std::size_t> members;  // element indices, ascending
  std::size_t representative = 0;    // smallest member index
  std::size_t size() const { return members.size(); }
};

/// A finite group of invertible rational matrices, stored as an explicit
/// element list. Element 0 is the identity and class 0 is {identity}.
/// Classes are ordered by (size, smallest element index).
class FiniteMatrixGroup {
 public:
  FiniteMatrixGroup(std::size_t dimension, std::vector<QMatrix> elements,
                    std::vector<std::size_t> generator_indices);

  std::size_t dimension() const { return dimension_; }
  std::size_t order() const { return elements_.size(); }
  const std::vector<QMatrix>& elements() const { return elements_; }
  const QMatrix& element(std::size_t i) const { return elements_[i]; }
  const std::vector<std::size_t>& generator_indices() const { return generators_; }
  std::optional<std::size_t> index_of(const QMatrix& m) const;

  std::size_t class_count() const { return classes_.size(); }
  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  const ConjugacyClass& conjugacy_class(std::size_t c) const { return classes_[c]; }
  const QMatrix& class_representative(std::size_t c) const {
    return elements_[classes_[c].representative];
  }
  std::size_t class_of(std::size_t element) const { return class_of_[element]; }
  /// Class containing the inverses of class c.
  std::size_t inverse_class(std::size_t c) const { return inverse_class_[c]; }

 private:
  std::size_t dimension_;
  std::vector<QMatrix> elements_;
  std::vector<std::size_t> generators_;
  std::map<QMatrix, std::size_t> index_;
  std::vector<ConjugacyClass> classes_;
  std::vector<std::size_t> class_of_;
  std::vector<std::size_t> inverse_class_;
};

using GroupPtr = std::shared_ptr<const FiniteMatrixGroup>;

inline constexpr std::size_t kDefaultClosureCap = 10000;

/// Breadth-first closure of the generators under multiplication, starting
/// from the identity. Generators are applied in sorted matrix order, so the
/// element order does not depend on how the generator list is permuted.
/// Throws CapExceeded when more than `cap` elements appear.
GroupPtr close_group(std::size_t dimension, const std::vector<QMatrix>& generators,
                     std::size_t cap = kDefaultClosureCap);

/// Block-diagonal outer product g1 x g2. Element (i, j) sits at index
/// i * |g2| + j.
GroupPtr product_group(const GroupPtr& g1, const GroupPtr& g2);

/// The trivial group acting on Q^dimension.
GroupPtr trivial_group(std::size_t dimension);

/// Rational-valued class function, one value per conjugacy class.
class ClassFunction {
 public:
  ClassFunction() = default;
  ClassFunction(GroupPtr group, std::vector<Rational> values);

  static ClassFunction zero(const GroupPtr& group);
  static ClassFunction trivial(const GroupPtr& group);
  static ClassFunction regular(const GroupPtr& group);
  /// Evaluates f on each class representative.
  static ClassFunction from_matrix_function(const GroupPtr& group,
                                            const std::function<Rational(const QMatrix&)>& f);

  const GroupPtr& group() const { return group_; }
  const std::vector<Rational>& values() const { return values_; }
  const Rational& operator[](std::size_t c) const { return values_[c]; }
  /// Value at the identity class.
  const Rational& degree() const { return values_.front(); }
  bool is_zero() const;

  ClassFunction operator+(const ClassFunction& o) const;
  ClassFunction operator-(const ClassFunction& o) const;
  /// Pointwise product (character of the tensor product).
  ClassFunction operator*(const ClassFunction& o) const;
  ClassFunction operator*(const Rational& c) const;
  bool operator==(const ClassFunction& o) const;

 private:
  void require_same_group(const ClassFunction& o) const;
  GroupPtr group_;
  std::vector<Rational> values_;
};

/// (1/|G|) sum over classes of |C| f(C) g(C^-1). Throws GroupMismatch.
Rational inner_product(const ClassFunction& f, const ClassFunction& g);

/// Character of an explicit representation: traces of rep at class
/// representatives. rep is checked to be a homomorphism against every
/// (generator, element) pair; throws NotAHomomorphism otherwise.
ClassFunction matrix_rep_character(const GroupPtr& group,
                                   const std::function<QMatrix(std::size_t element)>& rep);

}  // namespace commconf
