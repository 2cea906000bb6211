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

// Canonical JSON forms. Rationals are always written as "num/den" strings,
// integer vectors as JSON integer pairs, so documents reparse bit-exactly.

#include <nlohmann/json.hpp>

#include "tropscat/families.hpp"
#include "tropscat/scattering.hpp"

namespace tropscat {

using Json = nlohmann::ordered_json;

Json to_json(const Scalar& s);
Json to_json(const IntVec& v);
Json to_json(const Point& p);
Json to_json(const Fan& fan);
Json to_json(const Cell& c);
Json to_json(const PotentialElement& f);
Json to_json(const LieElement& h);
Json to_json(const DiskFamily& f);
Json to_json(const FamilySet& fs);
Json to_json(const Diagram& d);

Scalar scalar_from_json(const Json& j);
BigInt integer_from_json(const Json& j);
IntVec intvec_from_json(const Json& j);
Point point_from_json(const Json& j);
Fan fan_from_json(const Json& j);
Cell cell_from_json(const Json& j);
PotentialElement potential_from_json(const Json& j, std::size_t rays);
LieElement lie_from_json(const Fan& fan, const Json& j);
Diagram diagram_from_json(const Json& j);

/// Pretty-printed with two-space indentation and a trailing newline.
std::string dump(const Json& j);

}  // namespace tropscat
