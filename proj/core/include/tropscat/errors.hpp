// Copyright 2026 The tropscat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace tropscat {

// All library failures derive from Error so callers can catch one type.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define TROPSCAT_DECLARE_ERROR(Name)          \
  class Name : public Error {                 \
   public:                                    \
    explicit Name(const std::string& what)    \
        : Error(#Name ": " + what) {}         \
  }

TROPSCAT_DECLARE_ERROR(ZeroVector);
TROPSCAT_DECLARE_ERROR(DegenerateSweep);
TROPSCAT_DECLARE_ERROR(NonGenericPath);
TROPSCAT_DECLARE_ERROR(NonNilpotent);
TROPSCAT_DECLARE_ERROR(InvalidFan);
TROPSCAT_DECLARE_ERROR(InvalidLieTerm);
TROPSCAT_DECLARE_ERROR(ForbiddenJoin);
TROPSCAT_DECLARE_ERROR(MarkCollision);
TROPSCAT_DECLARE_ERROR(InvalidTree);
TROPSCAT_DECLARE_ERROR(NonGenericConfiguration);
TROPSCAT_DECLARE_ERROR(NonGenericQuery);
TROPSCAT_DECLARE_ERROR(AmbiguousRealization);
TROPSCAT_DECLARE_ERROR(ParseError);

#undef TROPSCAT_DECLARE_ERROR

}  // namespace tropscat
