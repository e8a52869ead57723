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

#include <stdexcept>
#include <string>

namespace commconf {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define COMMCONF_ERROR(Name)          \
  class Name : public Error {         \
   public:                            \
    using Error::Error;               \
  };

// exact-kernel
COMMCONF_ERROR(NonZeroRemainder)
COMMCONF_ERROR(Singular)
COMMCONF_ERROR(DimensionMismatch)
// finite-groups
COMMCONF_ERROR(CapExceeded)
COMMCONF_ERROR(GroupMismatch)
COMMCONF_ERROR(NotACharacter)
COMMCONF_ERROR(NotAHomomorphism)
COMMCONF_ERROR(CatalogError)
// free-group-cohomology
COMMCONF_ERROR(MalformedWord)
COMMCONF_ERROR(InvariantViolation)
// conf-ab / weyl-data
COMMCONF_ERROR(UnsupportedDatum)
COMMCONF_ERROR(RankTooSmall)
COMMCONF_ERROR(ParseError)
// graded-ring
COMMCONF_ERROR(NotInvolution)

#undef COMMCONF_ERROR

}  // namespace commconf
