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

#include <doctest.h>

#include "commconf/errors.hpp"
#include "commconf/graded_character.hpp"
#include "commconf/weyl.hpp"

using namespace commconf;

namespace {

// Poincaré polynomial of G/T in q = t^2: prod (1 + q + ... + q^(d-1)).
std::vector<long> poincare(const std::vector<int>& degrees) {
  std::vector<long> p{1};
  for (int d : degrees) {
    std::vector<long> next(p.size() + static_cast<std::size_t>(d) - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (int j = 0; j < d; ++j) next[i + static_cast<std::size_t>(j)] += p[i];
    p = next;
  }
  std::vector<long> doubled;
  for (std::size_t i = 0; i < p.size(); ++i) {
    doubled.push_back(p[i]);
    if (i + 1 < p.size()) doubled.push_back(0);
  }
  return doubled;
}

}  // namespace

TEST_CASE("standard degree table") {
  const DegreeCatalog c;
  CHECK(c.degrees(FactorKind::U, 3) == std::vector<int>{1, 2, 3});
  CHECK(c.degrees(FactorKind::SU, 3) == std::vector<int>{2, 3});
  CHECK(c.degrees(FactorKind::Sp, 2) == std::vector<int>{2, 4});
  CHECK(c.degrees(FactorKind::Circle, 1).empty());
}

TEST_CASE("factor Weyl groups have the right order and rank") {
  struct Case {
    const char* tag;
    std::size_t order, rank;
    int pi1;
  };
  for (const Case& c : {Case{"U1", 1, 1, 1}, Case{"U2", 2, 2, 1}, Case{"U3", 6, 3, 1}, Case{"U4", 24, 4, 1},
                        Case{"SU2", 2, 1, 0}, Case{"SU3", 6, 2, 0}, Case{"SU4", 24, 3, 0}, Case{"Sp1", 2, 1, 0},
                        Case{"Sp2", 8, 2, 0}, Case{"Sp3", 48, 3, 0}, Case{"S1", 1, 1, 1}}) {
    const WeylDatum d = parse_datum(c.tag);
    CHECK(d.group()->order() == c.order);
    CHECK(d.rank() == c.rank);
    CHECK(d.pi1_rank() == c.pi1);
  }
}

TEST_CASE("parse_datum on products") {
  const WeylDatum d = parse_datum("S1xSU2");
  CHECK(d.tag() == "S1xSU2");
  CHECK(d.rank() == 2);
  CHECK(d.pi1_rank() == 1);
  CHECK(d.has_noncircle_factor());
  CHECK_FALSE(parse_datum("s1xs1").has_noncircle_factor());
  CHECK(parse_datum("u2xsp2").group()->order() == 16);
  CHECK(parse_datum("u2xsp2").catalog()->irreducibles().size() == 10);
  CHECK_FALSE(parse_datum("U4").catalog().has_value());
  CHECK_THROWS_AS(parse_datum("G2"), ParseError);
  CHECK_THROWS_AS(parse_datum("SU1"), ParseError);
  CHECK_THROWS_AS(parse_datum(""), ParseError);
}

TEST_CASE("degree catalogs are checked against |W|") {
  DegreeCatalog bad;
  bad.overrides["Sp2"] = {2, 3};
  CHECK_THROWS_AS(parse_datum("Sp2", bad), CatalogError);
  bad.overrides["Sp2"] = {8};
  CHECK_THROWS_AS(parse_datum("Sp2", bad), CatalogError);
  // Right product, wrong degrees: accepted here, rejected by the Molien division.
  bad.overrides["Sp2"] = {1, 8};
  const WeylDatum d = parse_datum("Sp2", bad);
  CHECK_THROWS_AS(flag_character(d), NonZeroRemainder);
}

TEST_CASE("flag character dimensions equal the Poincaré polynomial") {
  for (const char* tag : {"U2", "U3", "U4", "SU2", "SU3", "SU4", "Sp1", "Sp2", "Sp3", "U2xSp2"}) {
    const WeylDatum d = parse_datum(tag);
    std::vector<int> degrees;
    for (const auto& f : d.factors())
      for (int x : f.degrees) degrees.push_back(x);
    CHECK(flag_character(d).dimensions() == poincare(degrees));
  }
}

TEST_CASE("flag character is the regular representation") {
  for (const char* tag : {"U3", "SU3", "Sp2", "Sp3"}) {
    const WeylDatum d = parse_datum(tag);
    const auto x = flag_character(d);
    ClassFunction total = ClassFunction::zero(d.group());
    for (int n = 0; n <= x.top_degree(); ++n) total = total + x.at(n);
    CHECK(total == ClassFunction::regular(d.group()));
  }
}

TEST_CASE("circle factors under the two conventions") {
  const WeylDatum d = parse_datum("S1xSU2");
  CHECK(flag_character(d, Convention::Derived).dimensions() == std::vector<long>{1, 0, 1});
  CHECK(flag_character(d, Convention::Paper).dimensions() == std::vector<long>{1, 1, 1, 1});
  const WeylDatum torus = parse_datum("S1xS1");
  CHECK(flag_character(torus, Convention::Paper).dimensions() == std::vector<long>{1});
  CHECK(parse_convention("paper") == Convention::Paper);
  CHECK(to_string(Convention::Derived) == "derived");
  CHECK_THROWS_AS(parse_convention("other"), ParseError);
}

TEST_CASE("torus character is the exterior algebra") {
  const WeylDatum d = parse_datum("Sp2");
  const auto t = torus_character(d);
  CHECK(t.dimensions() == std::vector<long>{1, 2, 1});
  CHECK(render_decomposition(decompose(t.at(1), *d.catalog())) == "d");
  CHECK(render_decomposition(decompose(t.at(2), *d.catalog())) == "c");
}
