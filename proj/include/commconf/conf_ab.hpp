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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "commconf/catalog.hpp"
#include "commconf/graded_character.hpp"
#include "commconf/weyl.hpp"

namespace commconf {

struct TableRow {
  int degree = 0;
  long dimension = 0;
  /// W-decomposition of H^n(G/T x Conf_k(T)); the row dimension is the
  /// multiplicity of the trivial representation in it.
  std::optional<Decomposition> decomposition;
};

struct CohomologyTable {
  std::string group;
  int k = 2;
  Convention convention = Convention::Derived;
  std::vector<TableRow> rows;
  long euler_characteristic = 0;

  std::vector<long> dimensions() const;
};

/// H*(Conf_k(T)) as a W-character for k = 2 (any datum) or k = 3 (U2 only).
GradedCharacter conf_torus_character(const WeylDatum& d, int k);

/// dim H^n(Conf_k^ab(G)) = dim [H*(G/T) ⊗ H*(Conf_k(T))]^W_n.
/// Throws UnsupportedDatum for k outside {2, 3} or k = 3 away from U2.
CohomologyTable conf_ab_table(const WeylDatum& d, int k, Convention convention = Convention::Derived);

/// Evaluates the self-duality multiplicity formulas, e.g. for U2
/// dim H^n = mult_1 A^n + mult_σ A^(n-2) with A = H*(Conf_2(T)).
/// Supported: S1xS1, U2, S1xSU2, SU3, Sp2. Throws UnsupportedDatum.
std::vector<long> shortcut_dims(const WeylDatum& d, Convention convention = Convention::Derived);

/// k times the rank of pi_1(G). Throws RankTooSmall below rank 2.
long first_cohomology_dim(const WeylDatum& d, int k);

enum class Family { U, SU, Sp };
Family parse_family(const std::string& s);

struct StabilityQuery {
  Family family = Family::U;
  int degree = 0;
  int k = 1;
};

/// Smallest rank from which degree-n homology is stable:
/// Sp: n+2; U: max(ceil((n+k-1)/2), n+2); SU: max(ceil((n+k-3)/2), n+2).
long stable_bound(const StabilityQuery& q);

/// Σ2-invariants of H*(Conf_2^ab(G)) computed on the explicit model
/// H*(G/T) ⊗ Λ(x1, y1) ⊗ span(1, z1, w1) with the Weyl and swap involutions.
/// Supported: rank-2 data with Weyl group Z/2 and G/T = S^2 (U2, S1xSU2).
std::vector<long> unordered_conf2_dims(const WeylDatum& d, Convention convention = Convention::Derived);

}  // namespace commconf
