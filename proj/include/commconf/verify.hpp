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

#include "commconf/weyl.hpp"

namespace commconf {

enum class CheckStatus { Pass, Fail, Warn };
std::string to_string(CheckStatus s);

struct CheckResult {
  CheckStatus status = CheckStatus::Pass;
  std::string name;
  std::string expected;
  std::string got;
};

struct VerifyReport {
  Convention convention = Convention::Derived;
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus s) const;
  bool failed() const { return count(CheckStatus::Fail) > 0; }
};

/// Recomputes every published table and cross-check. Exceptions inside a
/// check (for instance NonZeroRemainder from a corrupted degree catalog) are
/// reported as FAIL. The S1xSU2 G/T disagreement is the only WARN.
VerifyReport verify_all(Convention convention, const DegreeCatalog& degrees = {});

}  // namespace commconf
