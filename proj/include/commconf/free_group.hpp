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

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "commconf/qmatrix.hpp"

namespace commconf {

struct Letter {
  std::size_t generator = 0;
  int exponent = 1;  // +1 or -1
  bool operator==(const Letter&) const = default;
};
using Word = std::vector<Letter>;

/// Parses whitespace-separated letters "x" or "x^-1" over the given labels.
/// Throws MalformedWord.
Word parse_word(std::string_view text, const std::vector<std::string>& labels);
Word inverse(const Word& w);
Word concat(const Word& x, const Word& y);
/// [x, y] = x y x^-1 y^-1
Word commutator(const Word& x, const Word& y);
QVector exponent_sum(const Word& w, std::size_t generator_count);

/// Generators and relators; relators are words equal to 1.
struct GroupPresentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

/// Rows are the exponent-sum vectors of the relators; H_1 is the cokernel.
QMatrix relator_matrix(const GroupPresentation& p);

/// Endomorphisms of a free group on `generators`, one per outer label, given
/// by the image word of every generator.
struct WordAction {
  std::vector<std::string> generators;
  std::map<std::string, std::vector<std::string>> images;
};

/// Action on H_1 of the free group: column j is the exponent-sum vector of the
/// image of generator j. Throws MalformedWord.
QMatrix abelianized_matrix(const WordAction& w, std::string_view outer);

/// A rational module over the free group <a, b>, optionally with an
/// involution alpha compatible with the generator swap (alpha A = B alpha).
struct FreeGroupModule {
  QMatrix a;
  QMatrix b;
  std::optional<QMatrix> involution;
  std::vector<std::string> basis_labels;  // optional, for reporting

  std::size_t dim() const { return a.rows(); }
};

struct FreeGroupH1 {
  std::size_t dim = 0;
  /// Surviving basis vectors of (M + M)/N, as indices into the doubled basis
  /// (0..dim(M)-1 for the first copy, dim(M).. for the primed copy).
  std::vector<std::size_t> surviving;
  std::vector<std::string> surviving_labels;
  /// (m, n) -> (alpha n, alpha m) on the surviving basis.
  std::optional<QMatrix> involution;
};

/// H^1(F_2; M) = (M + M) / N with N = {((A - I) m, (B - I) m)}. The
/// quotient basis keeps the lowest-index coordinates. Throws
/// InvariantViolation when A or B is singular or the involution is
/// incompatible.
FreeGroupH1 h1_f2(const FreeGroupModule& module);

/// dim M + dim(ker(A - I) ∩ ker(B - I)), computed from a kernel basis.
std::size_t h1_f2_euler_dim(const FreeGroupModule& module);

}  // namespace commconf
