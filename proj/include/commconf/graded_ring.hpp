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

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "commconf/qmatrix.hpp"

namespace commconf {

struct RingGenerator {
  std::string label;
  int degree = 1;
};

/// Graded-commutative ring on square-zero generators modulo quadratic
/// monomial relations g_i g_j = 0. Its additive basis is the set of
/// squarefree monomials containing no forbidden pair.
class RingPresentation {
 public:
  RingPresentation() = default;
  RingPresentation(std::vector<RingGenerator> generators,
                   const std::vector<std::pair<std::string, std::string>>& forbidden);

  const std::vector<RingGenerator>& generators() const { return generators_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& forbidden() const { return forbidden_; }
  std::size_t index_of(const std::string& label) const;
  /// 1 + sum of generator degrees; every monomial vanishes beyond it.
  int default_max_degree() const;

  /// {"generators": [{"label", "degree"}], "forbidden": [[l, l]]}
  nlohmann::json to_json() const;
  static RingPresentation from_json(const nlohmann::json& j);

 private:
  std::vector<RingGenerator> generators_;
  std::vector<std::pair<std::size_t, std::size_t>> forbidden_;
};

/// Bit i set <=> generator i present, factors ordered by index.
using Monomial = std::uint64_t;
using RingElement = std::map<Monomial, Rational>;

/// Per degree 0..max_degree, admissible monomials in increasing mask order
/// of their generator subsets read lexicographically by index.
std::vector<std::vector<Monomial>> monomial_basis(const RingPresentation& p, int max_degree);
std::vector<long> hilbert_series(const RingPresentation& p, int max_degree);
std::string monomial_label(const RingPresentation& p, Monomial m);

/// Product with Koszul signs; squares and forbidden monomials vanish.
RingElement multiply(const RingPresentation& p, const RingElement& a, const RingElement& b);

/// Degree-preserving linear map on generators extended multiplicatively.
/// images[i] is the coefficient vector (over all generators) of the image of
/// generator i.
struct GeneratorAutomorphism {
  std::vector<QVector> images;

  static GeneratorAutomorphism identity(const RingPresentation& p);
  /// images given as label -> {(label, coefficient)}; unlisted generators are fixed.
  static GeneratorAutomorphism from_labels(
      const RingPresentation& p, const std::map<std::string, std::vector<std::pair<std::string, long>>>& images);
};

/// Checks degree preservation and that forbidden products and squares map to
/// zero. Throws InvariantViolation.
void check_well_defined(const RingPresentation& p, const GeneratorAutomorphism& a);

RingElement apply(const RingPresentation& p, const GeneratorAutomorphism& a, Monomial m);

/// Matrix of the induced map on the degree-n monomial basis (columns are images).
QMatrix action_matrix(const RingPresentation& p, const GeneratorAutomorphism& a,
                      const std::vector<Monomial>& basis);

/// Dimension of the +1 eigenspace of an involution, per degree.
/// Throws NotInvolution when the degreewise matrices do not square to I.
std::vector<long> invariant_subring_dims(const RingPresentation& p, const GeneratorAutomorphism& a, int max_degree);

/// Dimension of the subspace fixed by every given involution (which must
/// pairwise commute): rank of the product of the averaging projectors.
std::vector<long> joint_invariant_dims(const RingPresentation& p, const std::vector<GeneratorAutomorphism>& involutions,
                                       int max_degree);

// The cohomology ring presentations and swap actions for Conf_2^ab.
RingPresentation u2_ring();                ///< F[b1,c1,d2,e3,f3]/I
GeneratorAutomorphism u2_ring_swap();      ///< b->b+c, c->-c, d->-d, e->e+f, f->-f
RingPresentation s1xsu2_ring(bool with_a1);  ///< F[a1,x1,z1,c2,d3,e3]/J (optionally without a1)
GeneratorAutomorphism s1xsu2_ring_swap(const RingPresentation& ring);
RingPresentation exterior_ring(const std::vector<RingGenerator>& generators);

}  // namespace commconf
