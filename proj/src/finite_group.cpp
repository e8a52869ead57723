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

#include "commconf/finite_group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "commconf/errors.hpp"

namespace commconf {

FiniteMatrixGroup::FiniteMatrixGroup(std::size_t dimension, std::vector<QMatrix> elements,
                                     std::vector<std::size_t> generator_indices)
    : dimension_(dimension), elements_(std::move(elements)), generators_(std::move(generator_indices)) {
  if (elements_.empty() || !(elements_.front() == QMatrix::identity(dimension_)))
    throw CatalogError("FiniteMatrixGroup: element 0 must be the identity");
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i].rows() != dimension_ || elements_[i].cols() != dimension_)
      throw DimensionMismatch("FiniteMatrixGroup: element of wrong size");
    if (!index_.emplace(elements_[i], i).second)
      throw CatalogError("FiniteMatrixGroup: repeated element");
  }

  // Conjugacy classes: orbits of x -> g x g^-1 over the generators.
  std::vector<QMatrix> gen_inv;
  for (auto g : generators_) gen_inv.push_back(elements_[g].inverse());
  const std::size_t none = elements_.size();
  std::vector<std::size_t> orbit_of(elements_.size(), none);
  std::vector<ConjugacyClass> raw;
  for (std::size_t start = 0; start < elements_.size(); ++start) {
    if (orbit_of[start] != none) continue;
    ConjugacyClass cls;
    std::deque<std::size_t> queue{start};
    orbit_of[start] = raw.size();
    while (!queue.empty()) {
      const std::size_t x = queue.front();
      queue.pop_front();
      cls.members.push_back(x);
      for (std::size_t k = 0; k < generators_.size(); ++k) {
        const auto y = index_of(elements_[generators_[k]] * elements_[x] * gen_inv[k]);
        if (!y) throw CatalogError("FiniteMatrixGroup: element list not closed under conjugation");
        if (orbit_of[*y] == none) {
          orbit_of[*y] = raw.size();
          queue.push_back(*y);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    cls.representative = cls.members.front();
    raw.push_back(std::move(cls));
  }

  std::vector<std::size_t> order(raw.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (raw[a].representative == 0 || raw[b].representative == 0)
      return raw[a].representative == 0 && raw[b].representative != 0;
    if (raw[a].size() != raw[b].size()) return raw[a].size() < raw[b].size();
    return raw[a].representative < raw[b].representative;
  });
  class_of_.assign(elements_.size(), 0);
  for (std::size_t c = 0; c < order.size(); ++c) {
    classes_.push_back(std::move(raw[order[c]]));
    for (auto m : classes_.back().members) class_of_[m] = c;
  }
  for (const auto& cls : classes_) {
    const auto inv = index_of(elements_[cls.representative].inverse());
    if (!inv) throw CatalogError("FiniteMatrixGroup: element list not closed under inverses");
    inverse_class_.push_back(class_of_[*inv]);
  }
}

std::optional<std::size_t> FiniteMatrixGroup::index_of(const QMatrix& m) const {
  auto it = index_.find(m);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

GroupPtr close_group(std::size_t dimension, const std::vector<QMatrix>& generators, std::size_t cap) {
  for (const auto& g : generators) {
    if (g.rows() != dimension || g.cols() != dimension)
      throw DimensionMismatch("close_group: generator of wrong size");
    g.inverse();  // throws Singular
  }
  std::vector<QMatrix> sorted = generators;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  std::vector<QMatrix> elements{QMatrix::identity(dimension)};
  std::map<QMatrix, std::size_t> seen{{elements.front(), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : sorted) {
      QMatrix next = elements[head] * g;
      if (seen.count(next)) continue;
      if (elements.size() >= cap)
        throw CapExceeded("close_group: more than " + std::to_string(cap) + " elements");
      seen.emplace(next, elements.size());
      elements.push_back(std::move(next));
    }
  }
  std::vector<std::size_t> gen_idx;
  for (const auto& g : generators) gen_idx.push_back(seen.at(g));
  return std::make_shared<FiniteMatrixGroup>(dimension, std::move(elements), std::move(gen_idx));
}

GroupPtr product_group(const GroupPtr& g1, const GroupPtr& g2) {
  std::vector<QMatrix> elements;
  elements.reserve(g1->order() * g2->order());
  for (const auto& a : g1->elements())
    for (const auto& b : g2->elements()) elements.push_back(QMatrix::block_diagonal(a, b));
  std::vector<std::size_t> gens;
  for (auto i : g1->generator_indices()) gens.push_back(i * g2->order());
  for (auto j : g2->generator_indices()) gens.push_back(j);
  return std::make_shared<FiniteMatrixGroup>(g1->dimension() + g2->dimension(), std::move(elements),
                                             std::move(gens));
}

GroupPtr trivial_group(std::size_t dimension) { return close_group(dimension, {}); }

// ---------------------------------------------------------------------------

ClassFunction::ClassFunction(GroupPtr group, std::vector<Rational> values)
    : group_(std::move(group)), values_(std::move(values)) {
  if (!group_ || values_.size() != group_->class_count())
    throw DimensionMismatch("ClassFunction: one value per conjugacy class required");
}

ClassFunction ClassFunction::zero(const GroupPtr& group) {
  return ClassFunction(group, std::vector<Rational>(group->class_count()));
}

ClassFunction ClassFunction::trivial(const GroupPtr& group) {
  return ClassFunction(group, std::vector<Rational>(group->class_count(), Rational(1)));
}

ClassFunction ClassFunction::regular(const GroupPtr& group) {
  std::vector<Rational> v(group->class_count());
  v[0] = static_cast<unsigned long>(group->order());
  return ClassFunction(group, std::move(v));
}

ClassFunction ClassFunction::from_matrix_function(const GroupPtr& group,
                                                  const std::function<Rational(const QMatrix&)>& f) {
  std::vector<Rational> v;
  for (std::size_t c = 0; c < group->class_count(); ++c) v.push_back(f(group->class_representative(c)));
  return ClassFunction(group, std::move(v));
}

bool ClassFunction::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

void ClassFunction::require_same_group(const ClassFunction& o) const {
  if (group_ != o.group_) throw GroupMismatch("class functions live on different groups");
}

ClassFunction ClassFunction::operator+(const ClassFunction& o) const {
  require_same_group(o);
  ClassFunction r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] += o.values_[i];
  return r;
}

ClassFunction ClassFunction::operator-(const ClassFunction& o) const { return *this + o * Rational(-1); }

ClassFunction ClassFunction::operator*(const ClassFunction& o) const {
  require_same_group(o);
  ClassFunction r = *this;
  for (std::size_t i = 0; i < values_.size(); ++i) r.values_[i] *= o.values_[i];
  return r;
}

ClassFunction ClassFunction::operator*(const Rational& c) const {
  ClassFunction r = *this;
  for (auto& x : r.values_) x *= c;
  return r;
}

bool ClassFunction::operator==(const ClassFunction& o) const {
  return group_ == o.group_ && values_ == o.values_;
}

Rational inner_product(const ClassFunction& f, const ClassFunction& g) {
  if (f.group() != g.group()) throw GroupMismatch("inner_product: different groups");
  const auto& grp = *f.group();
  Rational sum = 0;
  for (std::size_t c = 0; c < grp.class_count(); ++c)
    sum += Rational(static_cast<unsigned long>(grp.conjugacy_class(c).size())) * f[c] * g[grp.inverse_class(c)];
  return sum / Rational(static_cast<unsigned long>(grp.order()));
}

ClassFunction matrix_rep_character(const GroupPtr& group,
                                   const std::function<QMatrix(std::size_t element)>& rep) {
  const QMatrix id = rep(0);
  if (!id.is_square() || !(id == QMatrix::identity(id.rows())))
    throw NotAHomomorphism("representation does not send the identity to the identity");
  for (auto g : group->generator_indices()) {
    const QMatrix rg = rep(g);
    for (std::size_t h = 0; h < group->order(); ++h) {
      const auto gh = group->index_of(group->element(g) * group->element(h));
      if (!(rep(*gh) == rg * rep(h)))
        throw NotAHomomorphism("rep(g h) != rep(g) rep(h) for a generator g");
    }
  }
  std::vector<Rational> v;
  for (std::size_t c = 0; c < group->class_count(); ++c) v.push_back(rep(group->conjugacy_class(c).representative).trace());
  return ClassFunction(group, std::move(v));
}

}  // namespace commconf
