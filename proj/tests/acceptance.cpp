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

// One line per acceptance criterion; exits 1 if any criterion fails.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "commconf/conf_ab.hpp"
#include "commconf/conf_characters.hpp"
#include "commconf/free_group.hpp"
#include "commconf/graded_ring.hpp"
#include "commconf/verify.hpp"

using namespace commconf;

namespace {

using Longs = std::vector<long>;
using Column = std::vector<std::string>;

Longs trimmed(Longs v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

// Empty string = pass, otherwise the first failure.
using Criterion = std::function<std::string()>;

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

#define REQUIRE_THAT(cond, what)                  \
  do {                                            \
    if (!(cond)) return std::string(what);        \
  } while (0)

bool column_matches(const GradedCharacter& x, const IrreducibleCatalog& cat, const Column& expected) {
  const auto got = decompose(x, cat);
  if (got.size() > expected.size()) return false;
  for (std::size_t n = 0; n < expected.size(); ++n)
    if (!same_multiset(n < got.size() ? got[n] : Decomposition{}, parse_decomposition(expected[n]))) return false;
  return true;
}

Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

std::string table1() {
  struct Cell {
    const char* group;
    Column conf2, flag;
  };
  const std::vector<Cell> cells = {
      {"U2", {"1", "2 ⊕ 2σ", "2 ⊕ 3σ", "1 ⊕ σ"}, {"1", "0", "σ"}},
      {"SU3", {"1", "2std", "1 ⊕ std ⊕ 2sgn", "std"}, {"1", "0", "std", "0", "std", "0", "sgn"}},
      {"Sp2", {"1", "2d", "a ⊕ b ⊕ 2c ⊕ 1", "d"}, {"1", "0", "d", "0", "a ⊕ b", "0", "d", "0", "c"}},
      {"S1xSU2", {"1", "2 ⊕ 2σ", "2 ⊕ 3σ", "1 ⊕ σ"}, {"1", "0", "σ"}},
  };
  for (const auto& c : cells) {
    const WeylDatum d = parse_datum(c.group);
    REQUIRE_THAT(column_matches(conf2_torus(d), *d.catalog(), c.conf2), std::string(c.group) + " Conf2(T)");
    REQUIRE_THAT(column_matches(flag_character(d), *d.catalog(), c.flag), std::string(c.group) + " G/T");
  }
  const WeylDatum s = parse_datum("S1xSU2");
  REQUIRE_THAT(column_matches(flag_character(s, Convention::Paper), *s.catalog(), {"1", "1", "σ", "σ"}),
               "S1xSU2 G/T under paper convention");
  const auto report = verify_all(Convention::Derived);
  std::size_t warns = 0;
  for (const auto& c : report.checks)
    if (c.status == CheckStatus::Warn) warns += c.name.find("S1xSU2") != std::string::npos;
  return expect(warns == 1 && report.count(CheckStatus::Warn) == 1, "expected exactly one S1xSU2 WARN");
}

std::string table2() {
  const std::vector<std::pair<const char*, Longs>> cols = {{"S1xS1", {1, 4, 5, 2}},
                                                           {"U2", {1, 2, 2, 3, 3, 1}},
                                                           {"SU3", {1, 0, 1, 2, 1, 3, 1, 1, 2}},
                                                           {"Sp2", {1, 0, 1, 2, 0, 1, 2, 2, 0, 1, 2}}};
  for (const auto& [g, v] : cols) REQUIRE_THAT(conf_ab_table(parse_datum(g), 2).dimensions() == v, g);
  const WeylDatum s = parse_datum("S1xSU2");
  REQUIRE_THAT(conf_ab_table(s, 2, Convention::Paper).dimensions() == Longs({1, 3, 4, 5, 6, 4, 1}), "S1xSU2 paper");
  REQUIRE_THAT(conf_ab_table(s, 2, Convention::Derived).dimensions() == Longs({1, 2, 2, 3, 3, 1}), "S1xSU2 derived");
  return "";
}

std::string conf3() {
  return expect(conf_ab_table(parse_datum("U2"), 3).dimensions() == Longs({1, 3, 7, 10, 9, 7, 3}), "dimensions");
}

std::string free_group() {
  const auto& m = punctured_torus_data().coefficient_module;
  const auto h = h1_f2(m);
  REQUIRE_THAT(h.dim == 5, "h1_f2 dimension");
  REQUIRE_THAT(h.involution && h.involution->trace() == 1, "involution type 3 ⊕ 2σ");
  REQUIRE_THAT(h1_f2_euler_dim(m) == 5, "Euler oracle");
  const WeylDatum u2 = parse_datum("U2");
  REQUIRE_THAT(column_matches(conf2_torus_minus_point_rank2(u2.group()), *u2.catalog(), {"1", "2 ⊕ 2σ", "3 ⊕ 2σ"}),
               "Conf2(T - {1})");
  return expect(column_matches(conf3_torus_rank2(u2), *u2.catalog(), {"1", "3 ⊕ 3σ", "7 ⊕ 7σ", "7 ⊕ 7σ", "2 ⊕ 3σ"}),
                "Conf3(T)");
}

std::string rings() {
  const auto r = u2_ring();
  REQUIRE_THAT(trimmed(hilbert_series(r, 8)) == Longs({1, 2, 2, 3, 3, 1}), "U2 ring series");
  const auto lambda = exterior_ring({{"r1", 1}, {"s3", 3}});
  const Longs target{1, 1, 0, 1, 1};
  REQUIRE_THAT(trimmed(hilbert_series(lambda, 8)) == target, "exterior series");
  REQUIRE_THAT(trimmed(invariant_subring_dims(r, u2_ring_swap(), 8)) == target, "invariant subring");
  return expect(unordered_conf2_dims(parse_datum("U2")) == target, "unordered model");
}

std::string shortcut() {
  const std::vector<std::pair<const char*, Convention>> cases = {
      {"U2", Convention::Derived}, {"SU3", Convention::Derived}, {"Sp2", Convention::Derived},
      {"S1xSU2", Convention::Derived}, {"S1xSU2", Convention::Paper}, {"S1xS1", Convention::Derived}};
  for (const auto& [g, c] : cases) {
    const WeylDatum d = parse_datum(g);
    REQUIRE_THAT(shortcut_dims(d, c) == conf_ab_table(d, 2, c).dimensions(), g);
  }
  return "";
}

std::string closed_form() {
  const std::vector<std::tuple<const char*, int, long>> cases = {{"U2", 2, 2}, {"U2", 3, 3}, {"SU3", 2, 0}, {"Sp2", 2, 0}};
  for (const auto& [g, k, v] : cases) {
    const WeylDatum d = parse_datum(g);
    REQUIRE_THAT(first_cohomology_dim(d, k) == v, std::string(g) + " closed form");
    REQUIRE_THAT(conf_ab_table(d, k).dimensions().at(1) == v, std::string(g) + " table entry");
  }
  for (int k = 3; k <= 8; ++k) {
    const auto c = circle_conf(k);
    REQUIRE_THAT(c.b1 == factorial(k - 1) && c.b1 != k, "b1(Conf_k(S1)) at k=" + std::to_string(k));
  }
  return "";
}

std::string stability() {
  REQUIRE_THAT(stable_bound({Family::Sp, 3, 5}) == 5, "Sp n=3");
  REQUIRE_THAT(stable_bound({Family::U, 2, 9}) == 5, "U n=2 k=9");
  REQUIRE_THAT(stable_bound({Family::SU, 0, 3}) == 2, "SU n=0 k=3");
  for (int n = 0; n <= 10; ++n)
    for (int k = 1; k <= 10; ++k) {
      const long u = std::max<long>((n + k - 1 + 1) / 2, n + 2);
      const long su = std::max<long>(n + k - 3 <= 0 ? 0 : (n + k - 3 + 1) / 2, n + 2);
      REQUIRE_THAT(stable_bound({Family::Sp, n, k}) == n + 2, "Sp table");
      REQUIRE_THAT(stable_bound({Family::U, n, k}) == u, "U table");
      REQUIRE_THAT(stable_bound({Family::SU, n, k}) == su, "SU table");
      for (Family f : {Family::U, Family::SU, Family::Sp}) {
        if (n < 10) REQUIRE_THAT(stable_bound({f, n + 1, k}) >= stable_bound({f, n, k}), "monotone in n");
        if (k < 10) REQUIRE_THAT(stable_bound({f, n, k + 1}) >= stable_bound({f, n, k}), "monotone in k");
      }
    }
  return "";
}

std::string combinatorics() {
  for (int k = 3; k <= 8; ++k) {
    const auto c = circle_conf_enumerated(k);
    REQUIRE_THAT(c.components == factorial(k - 1), "components");
    REQUIRE_THAT(c.free_involution && c.orbits == factorial(k - 1) / 2, "orbits");
    const auto s = su2_conf(k);
    REQUIRE_THAT(s.betti == std::vector<Integer>(4, factorial(k - 1) / 2), "SU2 betti");
  }
  return expect(su2_conf(2).betti == std::vector<Integer>{1, 0, 0, 1}, "SU2 k=2");
}

std::string structural() {
  for (const char* f : {"U1", "U2", "U3", "U4", "SU2", "SU3", "SU4", "Sp1", "Sp2", "Sp3"}) {
    const WeylDatum d = parse_datum(f);
    const auto dims = flag_character(d).dimensions();  // throws if a Molien quotient does not divide
    REQUIRE_THAT(std::equal(dims.begin(), dims.end(), dims.rbegin()), std::string(f) + " palindromic");
  }
  for (const char* g : {"U2", "SU3", "Sp2", "S1xSU2", "U2xSp2"}) {
    const WeylDatum d = parse_datum(g);
    Rational squares = 0;
    for (const auto& a : d.catalog()->irreducibles()) {
      squares += a.character.degree() * a.character.degree();
      for (const auto& b : d.catalog()->irreducibles())
        REQUIRE_THAT(inner_product(a.character, b.character) == Rational(a.label == b.label ? 1 : 0),
                     std::string(g) + " orthonormality");
    }
    REQUIRE_THAT(squares == Rational(static_cast<unsigned long>(d.group()->order())), std::string(g) + " sum dim^2");
  }
  for (const char* g : {"S1xS1", "U2", "S1xSU2", "SU3", "Sp2", "U3", "U4"})
    REQUIRE_THAT(conf_ab_table(parse_datum(g), 2).euler_characteristic == 0, std::string(g) + " Euler characteristic");
  REQUIRE_THAT(conf_ab_table(parse_datum("U2"), 3).euler_characteristic == 0, "Conf3 Euler characteristic");
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> e(-3, 3), s(1, 5);
  for (int t = 0; t < 100; ++t) {
    const auto r = static_cast<std::size_t>(s(rng)), c = static_cast<std::size_t>(s(rng));
    QMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = t % 3 == 0 && i == r - 1 ? m(0, j) : Rational(e(rng));
    const auto ker = kernel_basis(m);
    REQUIRE_THAT(rank(m) + ker.size() == c, "rank-nullity");
    REQUIRE_THAT(rref(rref(m)) == rref(m), "rref idempotent");
    for (const auto& v : ker)
      for (const auto& x : m * v) REQUIRE_THAT(sgn(x) == 0, "kernel");
  }
  return "";
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, Criterion>> criteria = {
      {"Conf2(T) and G/T decompositions", table1},
      {"Conf2^ab dimension columns", table2},
      {"Conf3^ab(U2) dimensions", conf3},
      {"free-group cohomology", free_group},
      {"ring Hilbert series", rings},
      {"shortcut formulas = invariant pairing", shortcut},
      {"closed-form H^1", closed_form},
      {"stability bounds", stability},
      {"combinatorics", combinatorics},
      {"structural properties", structural},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    try {
      why = criteria[i].second();
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    std::cout << (why.empty() ? "PASS" : "FAIL") << "  criterion " << i + 1 << ": " << criteria[i].first;
    if (!why.empty()) std::cout << " (" << why << ")";
    std::cout << "\n";
    failed += !why.empty();
  }
  return failed ? 1 : 0;
}
