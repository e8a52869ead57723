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
#include <numeric>
#include <random>

#include "commconf/errors.hpp"
#include "commconf/polynomial.hpp"
#include "commconf/qmatrix.hpp"

using namespace commconf;

namespace {

// Leibniz expansion; only for tiny matrices.
Rational leibniz_det(const QMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  Rational total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    Rational term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// e_k(eigenvalues) = sum of k x k principal minors.
Rational principal_minor_sum(const QMatrix& m, std::size_t k) {
  const std::size_t n = m.rows();
  std::vector<bool> choose(n, false);
  std::fill(choose.end() - static_cast<long>(k), choose.end(), true);
  Rational total = 0;
  do {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (choose[i]) idx.push_back(i);
    QMatrix sub(k, k);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) sub(r, c) = m(idx[r], idx[c]);
    total += k == 0 ? Rational(1) : leibniz_det(sub);
  } while (std::next_permutation(choose.begin(), choose.end()));
  return total;
}

QMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo = -4, int hi = 4) {
  std::uniform_int_distribution<int> e(lo, hi);
  QMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = e(rng);
  return m;
}

RationalPolynomial random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<int> e(-5, 5);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(make_rational(e(rng), 1 + (i % 3)));
  if (sgn(c.back()) == 0) c.back() = 1;
  return RationalPolynomial(c);
}

}  // namespace

TEST_CASE("polynomial arithmetic and trimming") {
  RationalPolynomial p{1, -1};
  CHECK(p.degree() == 1);
  CHECK((p - p).is_zero());
  CHECK((p - p).degree() == RationalPolynomial::kZeroDegree);
  CHECK(RationalPolynomial::one_minus_power(3) == RationalPolynomial{1, 0, 0, -1});
  CHECK((p * RationalPolynomial{1, 1}) == RationalPolynomial{1, 0, -1});
  CHECK(RationalPolynomial{1, 2, 1}.evaluate(Rational(1, 2)) == Rational(9, 4));
  CHECK(p.coefficient(7) == 0);
  CHECK(RationalPolynomial{0, 0}.is_zero());
  // Non-canonical inputs compare equal to their reduced form.
  CHECK(RationalPolynomial({Rational(2, 2), Rational(0, 5)}) == RationalPolynomial{1});
  CHECK(QMatrix(1, 1, {Rational(4, 2)}) == QMatrix{{2}});
}

TEST_CASE("poly_div_exact on 1 - q^4 over 1 - q") {
  CHECK(poly_div_exact(RationalPolynomial::one_minus_power(4), RationalPolynomial{1, -1}) ==
        RationalPolynomial{1, 1, 1, 1});
  CHECK_THROWS_AS(poly_div_exact(RationalPolynomial{1, 0, 1}, RationalPolynomial{1, -1}), NonZeroRemainder);
  CHECK_THROWS_AS(poly_div_exact(RationalPolynomial{1}, RationalPolynomial{}), DimensionMismatch);
  CHECK(poly_div_exact(RationalPolynomial{}, RationalPolynomial{1, 1}).is_zero());
}

TEST_CASE("poly_div_exact inverts multiplication") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_poly(rng, trial % 6);
    const auto b = random_poly(rng, trial % 4);
    CHECK(poly_div_exact(a * b, b) == a);
    if (b.degree() > 0) CHECK_THROWS_AS(poly_div_exact(a * b + RationalPolynomial{1}, b), NonZeroRemainder);
  }
}

TEST_CASE("char_matrix_poly agrees with principal minors") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    const QMatrix g = random_matrix(rng, n, n);
    for (int sign : {1, -1}) {
      const auto p = char_matrix_poly(g, sign);
      for (std::size_t k = 0; k <= n; ++k) {
        const Rational expected = principal_minor_sum(g, k) * (sign < 0 && k % 2 ? -1 : 1);
        CHECK(p.coefficient(static_cast<int>(k)) == expected);
      }
    }
  }
}

TEST_CASE("char_matrix_poly of a reflection") {
  const QMatrix s{{0, 1}, {1, 0}};
  CHECK(char_matrix_poly(s, 1) == RationalPolynomial{1, 0, -1});
  CHECK(char_matrix_poly(s, -1) == RationalPolynomial{1, 0, -1});
  CHECK(char_matrix_poly(QMatrix::identity(3), -1) == RationalPolynomial{1, -3, 3, -1});
}

TEST_CASE("rref, rank and kernel on a fixed matrix") {
  const QMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  std::vector<std::size_t> pivots;
  const QMatrix r = rref(m, pivots);
  CHECK(r == QMatrix{{1, 0, 1}, {0, 1, 1}, {0, 0, 0}});
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(rank(m) == 2);
  const auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(m * ker[0] == QVector{0, 0, 0});
}

TEST_CASE("rref/rank/kernel identities on random matrices") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> size(1, 6);
  for (int trial = 0; trial < 150; ++trial) {
    const auto r = static_cast<std::size_t>(size(rng)), c = static_cast<std::size_t>(size(rng));
    // Low-rank products make rank deficiency common.
    const std::size_t inner = static_cast<std::size_t>(size(rng));
    const QMatrix m = random_matrix(rng, r, inner, -2, 2) * random_matrix(rng, inner, c, -2, 2);
    const auto ker = kernel_basis(m);
    CHECK(rank(m) + ker.size() == c);
    CHECK(rank(m) == rank(m.transpose()));
    CHECK(rank(m) <= std::min({r, c, inner}));
    for (const auto& v : ker)
      for (const auto& x : m * v) CHECK(sgn(x) == 0);
    CHECK(rref(rref(m)) == rref(m));
    if (!ker.empty()) CHECK(rank(QMatrix::from_rows(ker, c)) == ker.size());
  }
}

TEST_CASE("inverse and contragredient") {
  std::mt19937 rng(5);
  int tested = 0;
  while (tested < 40) {
    const QMatrix g = random_matrix(rng, 3, 3);
    if (leibniz_det(g) == 0) {
      CHECK_THROWS_AS(g.inverse(), Singular);
      continue;
    }
    CHECK(g * g.inverse() == QMatrix::identity(3));
    CHECK(contragredient(g) == g.inverse().transpose());
    ++tested;
  }
  CHECK_THROWS_AS(QMatrix({{1, 2}, {2, 4}}).inverse(), Singular);
}

TEST_CASE("quotient_action keeps low coordinates") {
  // Q^3 / span(e2 - e0): e2 is eliminated, the swap e0 <-> e2 becomes trivial.
  const QMatrix swap{{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
  const auto q = quotient_action(swap, {{-1, 0, 1}});
  CHECK(q.surviving == std::vector<std::size_t>{0, 1});
  CHECK(q.matrix == QMatrix::identity(2));
  CHECK(quotient_dimension(3, {{-1, 0, 1}, {1, 0, -1}}) == 2);
  CHECK_THROWS_AS(quotient_action(swap, {{1, 0, 0}}), InvariantViolation);
}

TEST_CASE("quotient_action is compatible with composition") {
  // Action of a signed permutation on Q^4 modulo an invariant subspace.
  const QMatrix g{{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}};
  const std::vector<QVector> rel{{1, 1, 0, 0}, {0, 0, 1, -1}};
  const auto q = quotient_action(g, rel);
  const auto q2 = quotient_action(g * g, rel);
  CHECK(q.matrix * q.matrix == q2.matrix);
  CHECK(q.matrix.trace() == g.trace() - Rational(2));  // both relations are fixed by g
}
