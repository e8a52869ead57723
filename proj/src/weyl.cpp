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

#include "commconf/weyl.hpp"

#include <algorithm>
#include <cctype>

#include "commconf/errors.hpp"

namespace commconf {

std::string to_string(Convention c) { return c == Convention::Paper ? "paper" : "derived"; }

Convention parse_convention(std::string_view s) {
  if (s == "paper") return Convention::Paper;
  if (s == "derived") return Convention::Derived;
  throw ParseError("unknown convention '" + std::string(s) + "'");
}

namespace {

std::string kind_tag(FactorKind kind, int n) {
  switch (kind) {
    case FactorKind::Circle: return "S1";
    case FactorKind::U: return "U" + std::to_string(n);
    case FactorKind::SU: return "SU" + std::to_string(n);
    case FactorKind::Sp: return "Sp" + std::to_string(n);
  }
  return "?";
}

QMatrix transposition(std::size_t n, std::size_t i, std::size_t j) {
  QMatrix m = QMatrix::identity(n);
  m(i, i) = 0;
  m(j, j) = 0;
  m(i, j) = 1;
  m(j, i) = 1;
  return m;
}

// Simple reflection s_j of type A_{n-1} in the simple-root basis:
// s_j(a_j) = -a_j, s_j(a_{j±1}) = a_{j±1} + a_j.
QMatrix root_reflection(std::size_t rank, std::size_t j) {
  QMatrix m = QMatrix::identity(rank);
  m(j, j) = -1;
  if (j > 0) m(j, j - 1) = 1;
  if (j + 1 < rank) m(j, j + 1) = 1;
  return m;
}

unsigned long factorial(int n) {
  unsigned long f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<unsigned long>(i);
  return f;
}

unsigned long weyl_order(FactorKind kind, int n) {
  switch (kind) {
    case FactorKind::Circle: return 1;
    case FactorKind::U: return factorial(n);
    case FactorKind::SU: return factorial(n);
    case FactorKind::Sp: return factorial(n) << n;
  }
  return 0;
}

}  // namespace

std::vector<int> DegreeCatalog::degrees(FactorKind kind, int n) const {
  if (auto it = overrides.find(kind_tag(kind, n)); it != overrides.end()) return it->second;
  std::vector<int> d;
  switch (kind) {
    case FactorKind::Circle: break;
    case FactorKind::U: for (int i = 1; i <= n; ++i) d.push_back(i); break;
    case FactorKind::SU: for (int i = 2; i <= n; ++i) d.push_back(i); break;
    case FactorKind::Sp: for (int i = 1; i <= n; ++i) d.push_back(2 * i); break;
  }
  return d;
}

std::string LieFactor::tag() const { return kind_tag(kind, n); }

LieFactor make_factor(FactorKind kind, int n, const DegreeCatalog& catalog) {
  if (kind == FactorKind::Circle) n = 1;
  if (n < 1 || (kind == FactorKind::SU && n < 2))
    throw ParseError("factor " + kind_tag(kind, n) + " is not in the catalog");
  LieFactor f;
  f.kind = kind;
  f.n = n;
  const auto un = static_cast<std::size_t>(n);
  switch (kind) {
    case FactorKind::Circle:
      f.rank = 1;
      f.pi1_rank = 1;
      break;
    case FactorKind::U:
      f.rank = un;
      f.pi1_rank = 1;
      for (std::size_t i = 0; i + 1 < un; ++i) f.weyl_generators.push_back(transposition(un, i, i + 1));
      break;
    case FactorKind::SU:
      f.rank = un - 1;
      for (std::size_t j = 0; j < f.rank; ++j) f.weyl_generators.push_back(root_reflection(f.rank, j));
      break;
    case FactorKind::Sp: {
      f.rank = un;
      for (std::size_t i = 0; i + 1 < un; ++i) f.weyl_generators.push_back(transposition(un, i, i + 1));
      QMatrix flip = QMatrix::identity(un);
      flip(un - 1, un - 1) = -1;
      f.weyl_generators.push_back(flip);
      break;
    }
  }
  f.degrees = catalog.degrees(kind, n);
  if (kind != FactorKind::Circle && f.degrees.size() != f.rank)
    throw CatalogError(f.tag() + ": number of fundamental degrees differs from the rank");
  unsigned long prod = 1;
  for (int d : f.degrees) {
    if (d < 1) throw CatalogError(f.tag() + ": fundamental degrees must be positive");
    prod *= static_cast<unsigned long>(d);
  }
  if (prod != weyl_order(kind, n))
    throw CatalogError(f.tag() + ": product of fundamental degrees " + std::to_string(prod) +
                       " != |W| = " + std::to_string(weyl_order(kind, n)));
  return f;
}

namespace {

std::optional<IrreducibleCatalog> factor_catalog(const LieFactor& f, const GroupPtr& g) {
  switch (f.kind) {
    case FactorKind::Circle: return trivial_catalog(g);
    case FactorKind::U:
      if (f.n == 1) return trivial_catalog(g);
      if (f.n == 2) return z2_catalog(g);
      if (f.n == 3) return s3_permutation_catalog(g);
      return std::nullopt;
    case FactorKind::SU:
      if (f.n == 2) return z2_catalog(g);
      if (f.n == 3) return s3_reflection_catalog(g);
      return std::nullopt;
    case FactorKind::Sp:
      if (f.n == 1) return z2_catalog(g);
      if (f.n == 2) return d8_catalog(g);
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

WeylDatum::WeylDatum(std::vector<LieFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ParseError("a Weyl datum needs at least one factor");
  for (const auto& f : factors_) {
    offsets_.push_back(rank_);
    GroupPtr g = close_group(f.rank, f.weyl_generators);
    auto cat = factor_catalog(f, g);
    if (!group_) {
      group_ = g;
      catalog_ = std::move(cat);
    } else {
      GroupPtr prod = product_group(group_, g);
      if (catalog_ && cat)
        catalog_ = IrreducibleCatalog::product(*catalog_, *cat, prod);
      else
        catalog_.reset();
      group_ = prod;
    }
    rank_ += f.rank;
    pi1_rank_ += f.pi1_rank;
  }
}

std::string WeylDatum::tag() const {
  std::string t;
  for (const auto& f : factors_) t += (t.empty() ? "" : "x") + f.tag();
  return t;
}

bool WeylDatum::has_noncircle_factor() const {
  return std::any_of(factors_.begin(), factors_.end(),
                     [](const LieFactor& f) { return f.kind != FactorKind::Circle; });
}

WeylDatum parse_datum(std::string_view tag, const DegreeCatalog& degrees) {
  std::string lower;
  for (char c : tag) lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::vector<LieFactor> factors;
  std::size_t pos = 0;
  while (pos <= lower.size()) {
    std::size_t end = lower.find('x', pos);
    if (end == std::string::npos) end = lower.size();
    const std::string tok = lower.substr(pos, end - pos);
    std::size_t split = 0;
    while (split < tok.size() && std::isalpha(static_cast<unsigned char>(tok[split]))) ++split;
    const std::string name = tok.substr(0, split);
    const std::string num = tok.substr(split);
    if (name.empty() || num.empty() || !std::all_of(num.begin(), num.end(), ::isdigit) || num.size() > 3)
      throw ParseError("cannot parse group factor '" + tok + "' in '" + std::string(tag) + "'");
    const int n = std::stoi(num);
    if (name == "s" && n == 1)
      factors.push_back(make_factor(FactorKind::Circle, 1, degrees));
    else if (name == "u")
      factors.push_back(make_factor(FactorKind::U, n, degrees));
    else if (name == "su")
      factors.push_back(make_factor(FactorKind::SU, n, degrees));
    else if (name == "sp")
      factors.push_back(make_factor(FactorKind::Sp, n, degrees));
    else
      throw ParseError("unknown group factor '" + tok + "'");
    pos = end + 1;
  }
  return WeylDatum(std::move(factors));
}

}  // namespace commconf
