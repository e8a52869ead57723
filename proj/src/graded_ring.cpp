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

#include "commconf/graded_ring.hpp"

#include <algorithm>
#include <bit>

#include "commconf/errors.hpp"

namespace commconf {

RingPresentation::RingPresentation(std::vector<RingGenerator> generators,
                                   const std::vector<std::pair<std::string, std::string>>& forbidden)
    : generators_(std::move(generators)) {
  if (generators_.size() > 63) throw DimensionMismatch("RingPresentation: at most 63 generators");
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].degree < 1) throw ParseError("generator " + generators_[i].label + " needs degree >= 1");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[i].label == generators_[j].label)
        throw ParseError("duplicate generator label " + generators_[i].label);
  }
  for (const auto& [x, y] : forbidden) {
    std::size_t i = index_of(x), j = index_of(y);
    if (i > j) std::swap(i, j);
    forbidden_.emplace_back(i, j);
  }
}

std::size_t RingPresentation::index_of(const std::string& label) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].label == label) return i;
  throw ParseError("unknown generator '" + label + "'");
}

int RingPresentation::default_max_degree() const {
  int s = 1;
  for (const auto& g : generators_) s += g.degree;
  return s;
}

nlohmann::json RingPresentation::to_json() const {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : generators_) gens.push_back({{"label", g.label}, {"degree", g.degree}});
  nlohmann::json forb = nlohmann::json::array();
  for (const auto& [i, j] : forbidden_) forb.push_back({generators_[i].label, generators_[j].label});
  return {{"generators", gens}, {"forbidden", forb}};
}

RingPresentation RingPresentation::from_json(const nlohmann::json& j) {
  try {
    std::vector<RingGenerator> gens;
    for (const auto& g : j.at("generators")) gens.push_back({g.at("label").get<std::string>(), g.at("degree").get<int>()});
    std::vector<std::pair<std::string, std::string>> forb;
    if (j.contains("forbidden"))
      for (const auto& f : j.at("forbidden")) {
        if (f.size() != 2) throw ParseError("forbidden entries must be label pairs");
        forb.emplace_back(f[0].get<std::string>(), f[1].get<std::string>());
      }
    return RingPresentation(std::move(gens), forb);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed ring presentation: ") + e.what());
  }
}

namespace {

int monomial_degree(const RingPresentation& p, Monomial m) {
  int d = 0;
  for (std::size_t i = 0; i < p.generators().size(); ++i)
    if (m >> i & 1) d += p.generators()[i].degree;
  return d;
}

bool admissible(const RingPresentation& p, Monomial m) {
  for (const auto& [i, j] : p.forbidden())
    if ((m >> i & 1) && (m >> j & 1)) return false;
  return true;
}

// Sign of (ordered a)(ordered b) -> ordered (a|b): each generator j of b
// moves past every generator i > j of a.
int koszul_sign(const RingPresentation& p, Monomial a, Monomial b) {
  int parity = 0;
  const auto& g = p.generators();
  for (std::size_t j = 0; j < g.size(); ++j) {
    if (!(b >> j & 1) || g[j].degree % 2 == 0) continue;
    for (std::size_t i = j + 1; i < g.size(); ++i)
      if ((a >> i & 1) && g[i].degree % 2 != 0) parity ^= 1;
  }
  return parity ? -1 : 1;
}

void add_term(RingElement& e, Monomial m, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = e.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) e.erase(it);
  }
}

}  // namespace

std::vector<std::vector<Monomial>> monomial_basis(const RingPresentation& p, int max_degree) {
  std::vector<std::vector<Monomial>> buckets(static_cast<std::size_t>(std::max(max_degree, 0)) + 1);
  const std::size_t n = p.generators().size();
  if (n > 24) throw DimensionMismatch("monomial_basis: too many generators to enumerate");
  std::vector<Monomial> all;
  for (Monomial m = 0; m < (Monomial{1} << n); ++m)
    if (admissible(p, m) && monomial_degree(p, m) <= max_degree) all.push_back(m);
  // Lexicographic by the ascending list of generator indices.
  auto key = [n](Monomial m) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (m >> i & 1) idx.push_back(i);
    return idx;
  };
  std::sort(all.begin(), all.end(), [&](Monomial a, Monomial b) { return key(a) < key(b); });
  for (Monomial m : all) buckets[static_cast<std::size_t>(monomial_degree(p, m))].push_back(m);
  return buckets;
}

std::vector<long> hilbert_series(const RingPresentation& p, int max_degree) {
  std::vector<long> out;
  for (const auto& b : monomial_basis(p, max_degree)) out.push_back(static_cast<long>(b.size()));
  return out;
}

std::string monomial_label(const RingPresentation& p, Monomial m) {
  std::string s;
  for (std::size_t i = 0; i < p.generators().size(); ++i)
    if (m >> i & 1) s += p.generators()[i].label;
  return s.empty() ? "1" : s;
}

RingElement multiply(const RingPresentation& p, const RingElement& a, const RingElement& b) {
  RingElement out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      if (ma & mb) continue;
      const Monomial m = ma | mb;
      if (!admissible(p, m)) continue;
      add_term(out, m, ca * cb * koszul_sign(p, ma, mb));
    }
  return out;
}

GeneratorAutomorphism GeneratorAutomorphism::identity(const RingPresentation& p) {
  GeneratorAutomorphism a;
  const std::size_t n = p.generators().size();
  for (std::size_t i = 0; i < n; ++i) {
    QVector v(n);
    v[i] = 1;
    a.images.push_back(std::move(v));
  }
  return a;
}

GeneratorAutomorphism GeneratorAutomorphism::from_labels(
    const RingPresentation& p, const std::map<std::string, std::vector<std::pair<std::string, long>>>& images) {
  GeneratorAutomorphism a = identity(p);
  for (const auto& [label, terms] : images) {
    QVector v(p.generators().size());
    for (const auto& [target, coeff] : terms) v[p.index_of(target)] += coeff;
    a.images[p.index_of(label)] = std::move(v);
  }
  return a;
}

namespace {

RingElement generator_image(const GeneratorAutomorphism& a, std::size_t i) {
  RingElement e;
  for (std::size_t j = 0; j < a.images[i].size(); ++j) add_term(e, Monomial{1} << j, a.images[i][j]);
  return e;
}

}  // namespace

void check_well_defined(const RingPresentation& p, const GeneratorAutomorphism& a) {
  const auto& g = p.generators();
  if (a.images.size() != g.size()) throw InvariantViolation("automorphism: one image per generator required");
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (a.images[i].size() != g.size()) throw InvariantViolation("automorphism: image vector of wrong length");
    for (std::size_t j = 0; j < g.size(); ++j)
      if (sgn(a.images[i][j]) != 0 && g[j].degree != g[i].degree)
        throw InvariantViolation("automorphism does not preserve the degree of " + g[i].label);
    const RingElement img = generator_image(a, i);
    if (!multiply(p, img, img).empty())
      throw InvariantViolation("image of " + g[i].label + " does not square to zero");
  }
  for (const auto& [i, j] : p.forbidden())
    if (!multiply(p, generator_image(a, i), generator_image(a, j)).empty())
      throw InvariantViolation("image of the relation " + g[i].label + g[j].label + " is nonzero");
}

RingElement apply(const RingPresentation& p, const GeneratorAutomorphism& a, Monomial m) {
  RingElement acc{{0, Rational(1)}};
  for (std::size_t i = 0; i < p.generators().size(); ++i)
    if (m >> i & 1) acc = multiply(p, acc, generator_image(a, i));
  return acc;
}

QMatrix action_matrix(const RingPresentation& p, const GeneratorAutomorphism& a, const std::vector<Monomial>& basis) {
  QMatrix mat(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (const auto& [m, coeff] : apply(p, a, basis[c])) {
      const auto it = std::find(basis.begin(), basis.end(), m);
      if (it == basis.end()) throw InvariantViolation("automorphism leaves the degree-n basis");
      mat(static_cast<std::size_t>(it - basis.begin()), c) = coeff;
    }
  return mat;
}

std::vector<long> invariant_subring_dims(const RingPresentation& p, const GeneratorAutomorphism& a, int max_degree) {
  check_well_defined(p, a);
  std::vector<long> out;
  for (const auto& basis : monomial_basis(p, max_degree)) {
    const QMatrix m = action_matrix(p, a, basis);
    const QMatrix id = QMatrix::identity(basis.size());
    if (!(m * m == id)) throw NotInvolution("automorphism is not an involution");
    out.push_back(static_cast<long>(kernel_basis(m - id).size()));
  }
  return out;
}

std::vector<long> joint_invariant_dims(const RingPresentation& p, const std::vector<GeneratorAutomorphism>& involutions,
                                       int max_degree) {
  for (const auto& a : involutions) check_well_defined(p, a);
  std::vector<long> out;
  for (const auto& basis : monomial_basis(p, max_degree)) {
    const QMatrix id = QMatrix::identity(basis.size());
    std::vector<QMatrix> mats;
    for (const auto& a : involutions) {
      mats.push_back(action_matrix(p, a, basis));
      if (!(mats.back() * mats.back() == id)) throw NotInvolution("automorphism is not an involution");
    }
    for (std::size_t i = 0; i < mats.size(); ++i)
      for (std::size_t j = i + 1; j < mats.size(); ++j)
        if (!(mats[i] * mats[j] == mats[j] * mats[i])) throw InvariantViolation("involutions do not commute");
    QMatrix proj = id;
    for (const auto& m : mats) proj = proj * ((id + m) * Rational(1, 2));
    out.push_back(static_cast<long>(rank(proj)));
  }
  return out;
}

RingPresentation u2_ring() {
  return RingPresentation({{"b1", 1}, {"c1", 1}, {"d2", 2}, {"e3", 3}, {"f3", 3}},
                          {{"c1", "d2"}, {"c1", "f3"}, {"d2", "e3"}, {"d2", "f3"}, {"e3", "f3"}});
}

GeneratorAutomorphism u2_ring_swap() {
  const RingPresentation p = u2_ring();
  return GeneratorAutomorphism::from_labels(p, {{"b1", {{"b1", 1}, {"c1", 1}}},
                                                {"c1", {{"c1", -1}}},
                                                {"d2", {{"d2", -1}}},
                                                {"e3", {{"e3", 1}, {"f3", 1}}},
                                                {"f3", {{"f3", -1}}}});
}

RingPresentation s1xsu2_ring(bool with_a1) {
  std::vector<RingGenerator> gens;
  if (with_a1) gens.push_back({"a1", 1});
  for (RingGenerator g : std::vector<RingGenerator>{{"x1", 1}, {"z1", 1}, {"c2", 2}, {"d3", 3}, {"e3", 3}})
    gens.push_back(g);
  return RingPresentation(std::move(gens),
                          {{"z1", "c2"}, {"z1", "e3"}, {"c2", "d3"}, {"c2", "e3"}, {"d3", "e3"}});
}

GeneratorAutomorphism s1xsu2_ring_swap(const RingPresentation& ring) {
  return GeneratorAutomorphism::from_labels(ring, {{"x1", {{"x1", 1}, {"z1", 1}}},
                                                   {"z1", {{"z1", -1}}},
                                                   {"c2", {{"c2", -1}}},
                                                   {"d3", {{"d3", 1}, {"e3", 1}}},
                                                   {"e3", {{"e3", -1}}}});
}

RingPresentation exterior_ring(const std::vector<RingGenerator>& generators) { return RingPresentation(generators, {}); }

}  // namespace commconf
