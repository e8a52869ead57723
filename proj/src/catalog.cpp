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

#include "commconf/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "commconf/errors.hpp"

namespace commconf {

IrreducibleCatalog::IrreducibleCatalog(std::string tag, GroupPtr group,
                                       std::vector<std::pair<std::string, MatrixFunction>> irreducibles)
    : tag_(std::move(tag)), group_(std::move(group)) {
  for (auto& [label, fn] : irreducibles) {
    ClassFunction chi = ClassFunction::from_matrix_function(group_, fn);
    irreducibles_.push_back(Irreducible{std::move(label), std::move(chi), std::move(fn)});
  }
  Rational dim_squares = 0;
  for (std::size_t i = 0; i < irreducibles_.size(); ++i) {
    dim_squares += irreducibles_[i].character.degree() * irreducibles_[i].character.degree();
    for (std::size_t j = 0; j < irreducibles_.size(); ++j) {
      const Rational ip = inner_product(irreducibles_[i].character, irreducibles_[j].character);
      if (ip != (i == j ? 1 : 0))
        throw CatalogError("catalog " + tag_ + ": characters " + irreducibles_[i].label + ", " +
                           irreducibles_[j].label + " are not orthonormal");
    }
  }
  if (dim_squares != Rational(static_cast<unsigned long>(group_->order())))
    throw CatalogError("catalog " + tag_ + ": sum of squared dimensions != group order");
}

IrreducibleCatalog IrreducibleCatalog::product(const IrreducibleCatalog& a, const IrreducibleCatalog& b,
                                               const GroupPtr& product) {
  const bool a_trivial = a.group()->order() == 1;
  const bool b_trivial = b.group()->order() == 1;
  std::string tag = a_trivial ? b.tag() : b_trivial ? a.tag() : a.tag() + "x" + b.tag();
  const std::size_t da = a.group()->dimension();
  const std::size_t db = b.group()->dimension();
  std::vector<std::pair<std::string, MatrixFunction>> irr;
  for (const auto& x : a.irreducibles())
    for (const auto& y : b.irreducibles()) {
      std::string label = a_trivial ? y.label : b_trivial ? x.label : x.label + "⊠" + y.label;
      irr.emplace_back(std::move(label), [fx = x.evaluate, fy = y.evaluate, da, db](const QMatrix& m) -> Rational {
        return fx(m.block(0, 0, da, da)) * fy(m.block(da, da, db, db));
      });
    }
  return IrreducibleCatalog(std::move(tag), product, std::move(irr));
}

const Irreducible& IrreducibleCatalog::at(std::string_view label) const {
  for (const auto& i : irreducibles_)
    if (i.label == label) return i;
  throw CatalogError("catalog " + tag_ + " has no irreducible labelled " + std::string(label));
}

namespace {

Rational det(const QMatrix& m) { return char_matrix_poly(m, 1).coefficient(static_cast<int>(m.rows())); }

Rational one(const QMatrix&) { return 1; }

// For a signed permutation matrix: the sign of the underlying permutation and
// the product of the nonzero entries.
Rational underlying_permutation_sign(const QMatrix& m) {
  QMatrix p = m;
  for (std::size_t r = 0; r < p.rows(); ++r)
    for (std::size_t c = 0; c < p.cols(); ++c) p(r, c) = abs(m(r, c));
  return det(p);
}

Rational entry_sign_product(const QMatrix& m) {
  Rational s = 1;
  for (const auto& x : m.entries())
    if (sgn(x) != 0) s *= x;
  return s;
}

}  // namespace

IrreducibleCatalog trivial_catalog(const GroupPtr& group) {
  return IrreducibleCatalog("trivial", group, {{"1", one}});
}

IrreducibleCatalog z2_catalog(const GroupPtr& group) {
  return IrreducibleCatalog("Z2", group, {{"1", one}, {"σ", det}});
}

IrreducibleCatalog s3_permutation_catalog(const GroupPtr& group) {
  return IrreducibleCatalog("S3", group,
                            {{"1", one}, {"std", [](const QMatrix& m) -> Rational { return m.trace() - 1; }}, {"sgn", det}});
}

IrreducibleCatalog s3_reflection_catalog(const GroupPtr& group) {
  return IrreducibleCatalog("S3", group,
                            {{"1", one}, {"std", [](const QMatrix& m) -> Rational { return m.trace(); }}, {"sgn", det}});
}

IrreducibleCatalog d8_catalog(const GroupPtr& group) {
  return IrreducibleCatalog("D8", group,
                            {{"1", one},
                             {"a", entry_sign_product},
                             {"b", underlying_permutation_sign},
                             {"c", det},
                             {"d", [](const QMatrix& m) -> Rational { return m.trace(); }}});
}

Decomposition decompose(const ClassFunction& f, const IrreducibleCatalog& catalog) {
  if (f.group() != catalog.group()) throw GroupMismatch("decompose: character and catalog on different groups");
  Decomposition out;
  for (const auto& irr : catalog.irreducibles()) {
    const Rational m = inner_product(f, irr.character);
    if (!is_integer(m) || sgn(m) < 0)
      throw NotACharacter("decompose: multiplicity of " + irr.label + " is " + m.get_str());
    if (sgn(m) > 0) out.push_back({irr.label, m.get_num().get_si()});
  }
  return out;
}

ClassFunction reassemble(const Decomposition& d, const IrreducibleCatalog& catalog) {
  ClassFunction sum = ClassFunction::zero(catalog.group());
  for (const auto& [label, mult] : d) sum = sum + catalog.at(label).character * Rational(mult);
  return sum;
}

std::string render_decomposition(const Decomposition& d) {
  std::string out;
  for (const auto& [label, mult] : d) {
    if (mult == 0) continue;
    if (!out.empty()) out += " ⊕ ";
    if (label == "1")
      out += std::to_string(mult);
    else
      out += (mult == 1 ? "" : std::to_string(mult)) + label;
  }
  return out.empty() ? "0" : out;
}

Decomposition parse_decomposition(std::string_view text) {
  static constexpr std::string_view kSum = "⊕";
  Decomposition out;
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  std::size_t pos = 0;
  while (true) {
    const std::size_t next = text.find(kSum, pos);
    std::string_view term = trim(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
    if (term.empty()) throw ParseError("empty term in decomposition '" + std::string(text) + "'");
    std::size_t digits = 0;
    while (digits < term.size() && std::isdigit(static_cast<unsigned char>(term[digits]))) ++digits;
    std::string label(trim(term.substr(digits)));
    long mult = digits ? std::stol(std::string(term.substr(0, digits))) : 1;
    if (label.empty()) label = "1";
    if (mult != 0) out.push_back({label, mult});
    if (next == std::string_view::npos) break;
    pos = next + kSum.size();
  }
  return out;
}

bool same_multiset(const Decomposition& a, const Decomposition& b) {
  auto tally = [](const Decomposition& d) {
    std::map<std::string, long> m;
    for (const auto& [label, mult] : d) m[label] += mult;
    std::erase_if(m, [](const auto& kv) { return kv.second == 0; });
    return m;
  };
  return tally(a) == tally(b);
}

}  // namespace commconf
