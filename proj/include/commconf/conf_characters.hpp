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

#include <string>
#include <vector>

#include "commconf/free_group.hpp"
#include "commconf/graded_character.hpp"
#include "commconf/weyl.hpp"

namespace commconf {

/// H*(Conf_2(T)) as a W-character. Conf_2(T) = T x (T - {1}), and T minus a
/// point has the cohomology of T truncated below the top degree, so this is
/// H*(T) ⊗ H^{<rank}(T). Throws RankTooSmall for rank 0.
GradedCharacter conf2_torus(const WeylDatum& d);

/// The pieces of the rank-2 computation of H*(Conf_2(T - {1})) with the
/// coordinate swap, kept separately so each can be checked.
struct PuncturedTorusData {
  GroupPresentation fundamental_group;  // generators a2 a3 b2 b3 B23
  QMatrix swap_on_generators;           // abelianized swap action on Q^5
  WordAction fiber_monodromy;           // h, v acting on the fiber free group <h~, v~, r~>
  WordAction fiber_swap;                // swap on the fiber generators
  FreeGroupModule coefficient_module;   // H^1 of the fiber with contragredient actions
};
const PuncturedTorusData& punctured_torus_data();

/// H*(Conf_2(T - {1})) for the rank-2 torus with the coordinate swap, as a
/// character of the given Z/2 group (which must have order 2).
GradedCharacter conf2_torus_minus_point_rank2(const GroupPtr& z2);

/// H*(Conf_3(T)) = H*(T) ⊗ H*(Conf_2(T - {1})); only the U2 datum is
/// supported. Throws UnsupportedDatum.
GradedCharacter conf3_torus_rank2(const WeylDatum& d);

struct CircleConfSummary {
  int k = 0;
  Integer components;
  Integer orbits;
  bool free_involution = false;
  Integer b0;
  Integer b1;
};

/// Conf_k(S^1) ~ S^1 x Σ_{k-1}. Orbits of the involution σ -> σ̄,
/// σ̄(i) = k - σ(i), are enumerated for k <= 8 and counted by formula above.
CircleConfSummary circle_conf(int k);
/// Enumeration path only; exposed so both paths can be compared.
CircleConfSummary circle_conf_enumerated(int k);

struct SU2ConfSummary {
  enum class Shape { Group, SU2Equivalent, CopiesOfS2xS1 };
  int k = 0;
  Shape shape = Shape::Group;
  Integer copies;
  std::vector<Integer> betti;  // b0..b3
};
std::string to_string(SU2ConfSummary::Shape s);

SU2ConfSummary su2_conf(int k);

}  // namespace commconf
