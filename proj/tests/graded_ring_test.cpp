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

#include <algorithm>
#include <random>

#include "commconf/errors.hpp"
#include "commconf/graded_ring.hpp"

using namespace commconf;

namespace {

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<long> trimmed(std::vector<long> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

RingElement gen(const RingPresentation& p, const std::string& label) {
  return {{Monomial{1} << p.index_of(label), 1}};
}

}  // namespace

TEST_CASE("exterior algebra Hilbert series is binomial") {
  for (int n = 0; n <= 6; ++n) {
    std::vector<RingGenerator> g;
    for (int i = 0; i < n; ++i) g.push_back({"x" + std::to_string(i), 1});
    const auto h = hilbert_series(exterior_ring(g), n);
    for (int k = 0; k <= n; ++k) CHECK(h[static_cast<std::size_t>(k)] == binomial(n, k));
  }
}

TEST_CASE("Koszul signs") {
  const RingPresentation p({{"x1", 1}, {"y1", 1}, {"d2", 2}}, {});
  const auto x = gen(p, "x1"), y = gen(p, "y1"), d = gen(p, "d2");
  const auto xy = multiply(p, x, y), yx = multiply(p, y, x);
  REQUIRE(xy.size() == 1);
  CHECK(xy.begin()->second == -yx.begin()->second);
  CHECK(multiply(p, x, d) == multiply(p, d, x));
  CHECK(multiply(p, x, x).empty());
  // Associativity on a triple product.
  CHECK(multiply(p, multiply(p, x, y), d) == multiply(p, x, multiply(p, y, d)));
}

TEST_CASE("forbidden pairs vanish") {
  const RingPresentation p({{"a", 1}, {"b", 1}, {"c", 1}}, {{"a", "b"}});
  CHECK(multiply(p, gen(p, "a"), gen(p, "b")).empty());
  CHECK(multiply(p, gen(p, "b"), gen(p, "a")).empty());
  CHECK(hilbert_series(p, 3) == std::vector<long>{1, 3, 2, 0});
  CHECK_THROWS(RingPresentation({{"a", 1}}, {{"a", "z"}}));
}

TEST_CASE("U2 ring series") {
  const auto r = u2_ring();
  CHECK(trimmed(hilbert_series(r, r.default_max_degree())) == std::vector<long>{1, 2, 2, 3, 3, 1});
  CHECK(monomial_basis(r, 5)[5].size() == 1);
  CHECK(monomial_label(r, monomial_basis(r, 0)[0].front()) == "1");
}

TEST_CASE("Hilbert series does not depend on generator order") {
  const auto r = u2_ring();
  std::vector<RingGenerator> gens = r.generators();
  std::vector<std::pair<std::string, std::string>> forbidden;
  for (const auto& [a, b] : r.forbidden()) forbidden.emplace_back(gens[a].label, gens[b].label);
  const auto reference = hilbert_series(r, 6);
  std::mt19937 rng(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::shuffle(gens.begin(), gens.end(), rng);
    CHECK(hilbert_series(RingPresentation(gens, forbidden), 6) == reference);
  }
}

TEST_CASE("presentation JSON round trip") {
  const auto r = u2_ring();
  const auto j = r.to_json();
  CHECK(j.at("generators").size() == 5);
  CHECK(j.at("generators")[0].at("label") == "b1");
  const auto back = RingPresentation::from_json(j);
  CHECK(back.to_json() == j);
  CHECK(hilbert_series(back, 6) == hilbert_series(r, 6));
  CHECK_THROWS(RingPresentation::from_json(nlohmann::json{{"generators", 3}}));
}

TEST_CASE("invariant subrings") {
  const auto e = exterior_ring({{"x", 1}, {"y", 1}, {"z", 1}});
  CHECK(invariant_subring_dims(e, GeneratorAutomorphism::identity(e), 3) == hilbert_series(e, 3));
  const auto neg = GeneratorAutomorphism::from_labels(e, {{"x", {{"x", -1}}}, {"y", {{"y", -1}}}, {"z", {{"z", -1}}}});
  CHECK(invariant_subring_dims(e, neg, 3) == std::vector<long>{1, 0, 3, 0});
  // Swapping x and y fixes x + y, z and xy changes sign.
  const auto swap = GeneratorAutomorphism::from_labels(e, {{"x", {{"y", 1}}}, {"y", {{"x", 1}}}});
  CHECK(invariant_subring_dims(e, swap, 3) == std::vector<long>{1, 2, 1, 0});
  CHECK(joint_invariant_dims(e, {neg, swap}, 3) == std::vector<long>{1, 0, 1, 0});
}

TEST_CASE("U2 ring swap invariants") {
  const auto r = u2_ring();
  const auto a = u2_ring_swap();
  CHECK_NOTHROW(check_well_defined(r, a));
  CHECK(trimmed(invariant_subring_dims(r, a, r.default_max_degree())) == std::vector<long>{1, 1, 0, 1, 1});
  const auto lambda = exterior_ring({{"r1", 1}, {"s3", 3}});
  CHECK(trimmed(hilbert_series(lambda, 4)) == std::vector<long>{1, 1, 0, 1, 1});
}

TEST_CASE("S1xSU2 rings") {
  const auto with = s1xsu2_ring(true), without = s1xsu2_ring(false);
  CHECK(trimmed(hilbert_series(without, without.default_max_degree())) == std::vector<long>{1, 2, 2, 3, 3, 1});
  CHECK(trimmed(hilbert_series(with, with.default_max_degree())) == std::vector<long>{1, 3, 4, 5, 6, 4, 1});
  CHECK(trimmed(invariant_subring_dims(with, s1xsu2_ring_swap(with), 7)) == std::vector<long>{1, 2, 1, 1, 2, 1});
  CHECK(trimmed(invariant_subring_dims(without, s1xsu2_ring_swap(without), 6)) == std::vector<long>{1, 1, 0, 1, 1});
}

TEST_CASE("ill-defined automorphisms are rejected") {
  const RingPresentation p({{"a", 1}, {"b", 1}, {"d", 2}}, {{"a", "b"}});
  // a -> d changes degree.
  CHECK_THROWS_AS(check_well_defined(p, GeneratorAutomorphism::from_labels(p, {{"a", {{"d", 1}}}})), InvariantViolation);
  // b -> c sends the forbidden product ab to ac, which is nonzero.
  const RingPresentation q({{"a", 1}, {"b", 1}, {"c", 1}}, {{"a", "b"}});
  CHECK_THROWS_AS(check_well_defined(q, GeneratorAutomorphism::from_labels(q, {{"b", {{"c", 1}}}})), InvariantViolation);
  const auto e = exterior_ring({{"x", 1}});
  CHECK_THROWS_AS(invariant_subring_dims(e, GeneratorAutomorphism::from_labels(e, {{"x", {{"x", 2}}}}), 1), NotInvolution);
}
