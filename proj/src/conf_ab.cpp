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

#include "commconf/conf_ab.hpp"

#include <algorithm>
#include <map>

#include "commconf/conf_characters.hpp"
#include "commconf/errors.hpp"
#include "commconf/graded_ring.hpp"

namespace commconf {

std::vector<long> CohomologyTable::dimensions() const {
  std::vector<long> d;
  for (const auto& r : rows) d.push_back(r.dimension);
  return d;
}

GradedCharacter conf_torus_character(const WeylDatum& d, int k) {
  if (k == 2) return conf2_torus(d);
  if (k == 3) return conf3_torus_rank2(d);
  throw UnsupportedDatum("only k = 2 and k = 3 are available, got k = " + std::to_string(k));
}

CohomologyTable conf_ab_table(const WeylDatum& d, int k, Convention convention) {
  const GradedCharacter total = kunneth(flag_character(d, convention), conf_torus_character(d, k));
  std::vector<long> dims = invariant_dims(total);
  while (!dims.empty() && dims.back() == 0) dims.pop_back();

  CohomologyTable t;
  t.group = d.tag();
  t.k = k;
  t.convention = convention;
  for (int n = 0; n < static_cast<int>(dims.size()); ++n) {
    TableRow row{n, dims[static_cast<std::size_t>(n)], std::nullopt};
    if (d.catalog()) row.decomposition = decompose(total.at(n), *d.catalog());
    t.euler_characteristic += (n % 2 ? -1 : 1) * row.dimension;
    t.rows.push_back(std::move(row));
  }
  return t;
}

std::vector<long> shortcut_dims(const WeylDatum& d, Convention convention) {
  // label -> degree shifts, read off from the flag-manifold columns.
  using Formula = std::vector<std::pair<std::string, std::vector<int>>>;
  static const std::map<std::string, Formula> formulas = {
      {"S1xS1", {{"1", {0}}}},
      {"U2", {{"1", {0}}, {"σ", {2}}}},
      {"S1xSU2", {{"1", {0}}, {"σ", {2}}}},
      {"SU3", {{"1", {0}}, {"std", {2, 4}}, {"sgn", {6}}}},
      {"Sp2", {{"1", {0}}, {"d", {2, 6}}, {"a", {4}}, {"b", {4}}, {"c", {8}}}},
  };
  static const Formula s1xsu2_paper = {{"1", {0, 1}}, {"σ", {2, 3}}};

  const auto it = formulas.find(d.tag());
  if (it == formulas.end() || !d.catalog())
    throw UnsupportedDatum("no multiplicity shortcut for " + d.tag());
  const Formula& f = (d.tag() == "S1xSU2" && convention == Convention::Paper) ? s1xsu2_paper : it->second;

  const GradedCharacter a = conf2_torus(d);
  const auto decomp = decompose(a, *d.catalog());
  auto mult = [&](const std::string& label, int degree) -> long {
    if (degree < 0 || degree >= static_cast<int>(decomp.size())) return 0;
    for (const auto& m : decomp[static_cast<std::size_t>(degree)])
      if (m.label == label) return m.mult;
    return 0;
  };
  int max_shift = 0;
  for (const auto& [label, shifts] : f) max_shift = std::max(max_shift, *std::max_element(shifts.begin(), shifts.end()));
  std::vector<long> dims(static_cast<std::size_t>(a.top_degree() + max_shift + 1));
  for (int n = 0; n < static_cast<int>(dims.size()); ++n)
    for (const auto& [label, shifts] : f)
      for (int s : shifts) dims[static_cast<std::size_t>(n)] += mult(label, n - s);
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  return dims;
}

long first_cohomology_dim(const WeylDatum& d, int k) {
  if (d.rank() < 2)
    throw RankTooSmall("H^1 = Hom(pi_1(G)^k, F) needs rank >= 2; " + d.tag() + " has rank " + std::to_string(d.rank()));
  return static_cast<long>(k) * d.pi1_rank();
}

Family parse_family(const std::string& s) {
  std::string l;
  for (char c : s) l += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (l == "u") return Family::U;
  if (l == "su") return Family::SU;
  if (l == "sp") return Family::Sp;
  throw ParseError("unknown family '" + s + "' (expected u, su or sp)");
}

namespace {

// ceil(a / 2) for any sign of a.
long ceil_half(long a) { return a >= 0 ? (a + 1) / 2 : -((-a) / 2); }

}  // namespace

long stable_bound(const StabilityQuery& q) {
  const long n = q.degree, k = q.k;
  switch (q.family) {
    case Family::Sp: return n + 2;
    case Family::U: return std::max(ceil_half(n + k - 1), n + 2);
    case Family::SU: return std::max(ceil_half(n + k - 3), n + 2);
  }
  return n + 2;
}

std::vector<long> unordered_conf2_dims(const WeylDatum& d, Convention convention) {
  const auto& grp = d.group();
  if (d.rank() != 2 || grp->order() != 2 || flag_character(d).dimensions() != std::vector<long>{1, 0, 1})
    throw UnsupportedDatum("unordered Conf_2 model needs rank 2, W = Z/2 and G/T = S^2; got " + d.tag());

  std::vector<RingGenerator> gens{{"f2", 2}};
  const bool with_circle = convention == Convention::Paper && d.has_noncircle_factor();
  std::size_t circles = 0;
  if (with_circle)
    for (const auto& f : d.factors())
      if (f.kind == FactorKind::Circle) gens.push_back({"a" + std::to_string(++circles), 1});
  for (const char* g : {"x1", "y1", "z1", "w1"}) gens.push_back({g, 1});
  const RingPresentation model(gens, {{"z1", "w1"}});

  // Weyl involution: ρ on (x1, y1) and on (z1, w1), sign on the flag class.
  const QMatrix& rho = grp->element(1);
  std::map<std::string, std::vector<std::pair<std::string, long>>> weyl{{"f2", {{"f2", -1}}}};
  const std::string xs[2] = {"x1", "y1"}, zs[2] = {"z1", "w1"};
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t i = 0; i < 2; ++i) {
      const long c = rho(i, j).get_num().get_si();
      if (c == 0) continue;
      weyl[xs[j]].push_back({xs[i], c});
      weyl[zs[j]].push_back({zs[i], c});
    }
  // Coordinate swap of Conf_2(T) = T x (T - {1}).
  const std::map<std::string, std::vector<std::pair<std::string, long>>> swap{
      {"x1", {{"x1", 1}, {"z1", 1}}}, {"y1", {{"y1", 1}, {"w1", 1}}}, {"z1", {{"z1", -1}}}, {"w1", {{"w1", -1}}}};

  std::vector<long> dims = joint_invariant_dims(
      model, {GeneratorAutomorphism::from_labels(model, weyl), GeneratorAutomorphism::from_labels(model, swap)},
      model.default_max_degree());
  while (!dims.empty() && dims.back() == 0) dims.pop_back();
  return dims;
}

}  // namespace commconf
