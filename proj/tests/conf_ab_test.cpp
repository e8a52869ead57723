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

#include "commconf/conf_ab.hpp"
#include "commconf/errors.hpp"

using namespace commconf;

namespace {

std::vector<long> dims(const char* tag, int k = 2, Convention c = Convention::Derived) {
  return conf_ab_table(parse_datum(tag), k, c).dimensions();
}

}  // namespace

TEST_CASE("Conf_2^ab dimension columns") {
  CHECK(dims("S1xS1") == std::vector<long>{1, 4, 5, 2});
  CHECK(dims("U2") == std::vector<long>{1, 2, 2, 3, 3, 1});
  CHECK(dims("SU3") == std::vector<long>{1, 0, 1, 2, 1, 3, 1, 1, 2});
  CHECK(dims("Sp2") == std::vector<long>{1, 0, 1, 2, 0, 1, 2, 2, 0, 1, 2});
  CHECK(dims("S1xSU2") == std::vector<long>{1, 2, 2, 3, 3, 1});
  CHECK(dims("S1xSU2", 2, Convention::Paper) == std::vector<long>{1, 3, 4, 5, 6, 4, 1});
}

TEST_CASE("Conf_3^ab(U2)") {
  const auto t = conf_ab_table(parse_datum("U2"), 3);
  CHECK(t.dimensions() == std::vector<long>{1, 3, 7, 10, 9, 7, 3});
  CHECK(t.euler_characteristic == 0);
  CHECK(t.k == 3);
  CHECK_THROWS_AS(conf_ab_table(parse_datum("SU3"), 3), UnsupportedDatum);
  CHECK_THROWS_AS(conf_ab_table(parse_datum("U2"), 4), UnsupportedDatum);
}

TEST_CASE("row decompositions carry the dimension as trivial multiplicity") {
  const auto t = conf_ab_table(parse_datum("Sp2"), 2);
  for (const auto& row : t.rows) {
    REQUIRE(row.decomposition.has_value());
    long trivial = 0;
    for (const auto& m : *row.decomposition)
      if (m.label == "1") trivial = m.mult;
    CHECK(trivial == row.dimension);
  }
  // No catalog for U4: dimensions only.
  const auto u4 = conf_ab_table(parse_datum("U4"), 2);
  CHECK_FALSE(u4.rows.front().decomposition.has_value());
  CHECK(u4.euler_characteristic == 0);
}

TEST_CASE("shortcut formulas equal the invariant pairing") {
  for (const char* tag : {"S1xS1", "U2", "S1xSU2", "SU3", "Sp2"})
    for (Convention c : {Convention::Derived, Convention::Paper})
      CHECK(shortcut_dims(parse_datum(tag), c) == dims(tag, 2, c));
  CHECK_THROWS_AS(shortcut_dims(parse_datum("U3")), UnsupportedDatum);
}

TEST_CASE("first cohomology closed form") {
  CHECK(first_cohomology_dim(parse_datum("U2"), 2) == 2);
  CHECK(first_cohomology_dim(parse_datum("U2"), 3) == 3);
  CHECK(first_cohomology_dim(parse_datum("SU3"), 2) == 0);
  CHECK(first_cohomology_dim(parse_datum("Sp2"), 2) == 0);
  CHECK(first_cohomology_dim(parse_datum("U3"), 2) == dims("U3")[1]);
  CHECK_THROWS_AS(first_cohomology_dim(parse_datum("SU2"), 2), RankTooSmall);
}

TEST_CASE("stability bounds") {
  CHECK(stable_bound({Family::Sp, 3, 5}) == 5);
  CHECK(stable_bound({Family::U, 2, 9}) == 5);
  CHECK(stable_bound({Family::SU, 0, 3}) == 2);
  CHECK(stable_bound({Family::U, 0, 1}) == 2);
  CHECK(stable_bound({Family::U, 0, 8}) == 4);
  CHECK(stable_bound({Family::SU, 1, 10}) == 4);
  for (Family f : {Family::U, Family::SU, Family::Sp})
    for (int n = 0; n < 10; ++n)
      for (int k = 1; k < 10; ++k) {
        CHECK(stable_bound({f, n + 1, k}) >= stable_bound({f, n, k}));
        CHECK(stable_bound({f, n, k + 1}) >= stable_bound({f, n, k}));
        CHECK(stable_bound({f, n, k}) >= n + 2);
      }
  CHECK(parse_family("sp") == Family::Sp);
  CHECK_THROWS_AS(parse_family("so"), ParseError);
}

TEST_CASE("unordered configurations") {
  CHECK(unordered_conf2_dims(parse_datum("U2")) == std::vector<long>{1, 1, 0, 1, 1});
  CHECK(unordered_conf2_dims(parse_datum("S1xSU2")) == std::vector<long>{1, 1, 0, 1, 1});
  CHECK(unordered_conf2_dims(parse_datum("S1xSU2"), Convention::Paper) == std::vector<long>{1, 2, 1, 1, 2, 1});
  CHECK_THROWS_AS(unordered_conf2_dims(parse_datum("Sp2")), UnsupportedDatum);
}
