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

#include "commconf/conf_characters.hpp"

#include <algorithm>
#include <numeric>

#include "commconf/errors.hpp"

namespace commconf {

GradedCharacter conf2_torus(const WeylDatum& d) {
  if (d.rank() == 0) throw RankTooSmall("conf2_torus needs a torus of rank >= 1");
  const GradedCharacter torus = torus_character(d);
  return kunneth(torus, torus.truncated_below(static_cast<int>(d.rank())));
}

namespace {

PuncturedTorusData build_punctured_torus_data() {
  PuncturedTorusData data;

  // pi_1(Conf_2(T - {1})) from the torus braid presentation.
  auto& pres = data.fundamental_group;
  pres.generators = {"a2", "a3", "b2", "b3", "B23"};
  auto w = [&](std::string_view s) { return parse_word(s, pres.generators); };
  const std::vector<std::string> as{"a2", "a3"}, bs{"b2", "b3"};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = i + 1; j < 2; ++j) {
      pres.relators.push_back(commutator(w(as[i]), w(as[j])));
      pres.relators.push_back(commutator(w(bs[i]), w(bs[j])));
    }
  for (std::size_t i = 0; i < 2; ++i) {
    pres.relators.push_back(commutator(w(as[i]), w("B23")));
    pres.relators.push_back(commutator(w(bs[i]), w("B23")));
  }
  // [b3, a3 a2^-1] = [b3 b2^-1, a3] = B23
  pres.relators.push_back(concat(commutator(w("b3"), w("a3 a2^-1")), w("B23^-1")));
  pres.relators.push_back(concat(commutator(w("b3 b2^-1"), w("a3")), w("B23^-1")));

  // The swap exchanges a_j and b_j and inverts B23.
  WordAction swap{pres.generators, {{"alpha", {"b2", "b3", "a2", "a3", "B23^-1"}}}};
  data.swap_on_generators = abelianized_matrix(swap, "alpha");

  // Monodromy of the fibration Conf_2(T - {1}) -> T - {1} on the fiber
  // pi_1(T - {1, x1}) = F<h~, v~, r~>.
  data.fiber_monodromy.generators = {"h", "v", "r"};
  data.fiber_monodromy.images = {
      {"h", {"h", "r h v h^-1", "r"}},
      {"v", {"r^-1 v h v^-1", "v", "r"}},
  };
  data.fiber_swap.generators = data.fiber_monodromy.generators;
  data.fiber_swap.images = {{"alpha", {"v", "h", "r^-1"}}};

  // Cohomology coefficients: the dual of the H_1 action.
  auto& m = data.coefficient_module;
  m.a = contragredient(abelianized_matrix(data.fiber_monodromy, "h"));
  m.b = contragredient(abelianized_matrix(data.fiber_monodromy, "v"));
  m.involution = contragredient(abelianized_matrix(data.fiber_swap, "alpha"));
  m.basis_labels = {"e_h", "e_v", "e_r"};
  return data;
}

// Trace of the nontrivial element on a Z/2-module given by an involution
// matrix, packaged as a class function on z2.
ClassFunction z2_character(const GroupPtr& z2, const QMatrix& involution) {
  std::vector<Rational> v(2);
  v[0] = static_cast<unsigned long>(involution.rows());
  v[1] = involution.trace();
  return ClassFunction(z2, std::move(v));
}

}  // namespace

const PuncturedTorusData& punctured_torus_data() {
  static const PuncturedTorusData data = build_punctured_torus_data();
  return data;
}

GradedCharacter conf2_torus_minus_point_rank2(const GroupPtr& z2) {
  if (z2->order() != 2) throw UnsupportedDatum("Conf_2(T - {1}) is computed for the Z/2 swap only");
  const auto& data = punctured_torus_data();

  // H^1 = Hom(H_1, Q); H_1 is the cokernel of the relator matrix, and the
  // swap has the same (real) character on H_1 and on its dual.
  const QMatrix rel = relator_matrix(data.fundamental_group);
  std::vector<QVector> rows;
  for (std::size_t r = 0; r < rel.rows(); ++r) {
    QVector v(rel.cols());
    for (std::size_t c = 0; c < rel.cols(); ++c) v[c] = rel(r, c);
    rows.push_back(std::move(v));
  }
  const QuotientAction h1 = quotient_action(data.swap_on_generators, rows);

  const FreeGroupH1 h2 = h1_f2(data.coefficient_module);

  GradedCharacter out = GradedCharacter::concentrated(ClassFunction::trivial(z2), 0);
  out.add(1, z2_character(z2, h1.matrix));
  out.add(2, z2_character(z2, *h2.involution));
  return out;
}

GradedCharacter conf3_torus_rank2(const WeylDatum& d) {
  if (d.factors().size() != 1 || d.factors()[0].kind != FactorKind::U || d.factors()[0].n != 2)
    throw UnsupportedDatum("Conf_3(T) is only available for U2, got " + d.tag());
  return kunneth(torus_character(d), conf2_torus_minus_point_rank2(d.group()));
}

namespace {

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// The involution on Σ_{k-1} induced by t -> 1 - t on ordered configurations.
std::vector<int> bar(const std::vector<int>& sigma, int k) {
  std::vector<int> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[i] = k - sigma[i];
  return out;
}

}  // namespace

CircleConfSummary circle_conf_enumerated(int k) {
  if (k < 2) throw RankTooSmall("circle_conf needs k >= 2");
  std::vector<int> sigma(static_cast<std::size_t>(k - 1));
  std::iota(sigma.begin(), sigma.end(), 1);
  long components = 0, fixed = 0;
  do {
    ++components;
    if (bar(sigma, k) == sigma) ++fixed;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  CircleConfSummary s;
  s.k = k;
  s.components = components;
  s.free_involution = fixed == 0;
  s.orbits = (components - fixed) / 2 + fixed;
  s.b0 = s.components;
  s.b1 = s.components;
  return s;
}

CircleConfSummary circle_conf(int k) {
  if (k < 2) throw RankTooSmall("circle_conf needs k >= 2");
  if (k <= 8) return circle_conf_enumerated(k);
  CircleConfSummary s;
  s.k = k;
  s.components = factorial(k - 1);
  s.free_involution = true;  // σ̄ = σ would force σ(i) = k/2 for every i
  s.orbits = s.components / 2;
  s.b0 = s.components;
  s.b1 = s.components;
  return s;
}

std::string to_string(SU2ConfSummary::Shape s) {
  switch (s) {
    case SU2ConfSummary::Shape::Group: return "SU2";
    case SU2ConfSummary::Shape::SU2Equivalent: return "homotopy equivalent to SU2";
    case SU2ConfSummary::Shape::CopiesOfS2xS1: return "disjoint copies of S2xS1";
  }
  return "?";
}

SU2ConfSummary su2_conf(int k) {
  if (k < 1) throw RankTooSmall("su2_conf needs k >= 1");
  SU2ConfSummary s;
  s.k = k;
  if (k <= 2) {
    s.shape = k == 1 ? SU2ConfSummary::Shape::Group : SU2ConfSummary::Shape::SU2Equivalent;
    s.copies = 1;
    s.betti = {1, 0, 0, 1};
    return s;
  }
  const CircleConfSummary circle = circle_conf(k);
  if (!circle.free_involution) throw InvariantViolation("component involution is not free");
  s.shape = SU2ConfSummary::Shape::CopiesOfS2xS1;
  s.copies = circle.orbits;
  s.betti = {s.copies, s.copies, s.copies, s.copies};
  return s;
}

}  // namespace commconf
