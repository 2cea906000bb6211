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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tropscat/scattering.hpp"
#include "tropscat/serialize.hpp"

namespace tropscat::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kNonGeneric = 2, kVerificationFailed = 3 };

struct Config {
  Fan fan = projective_plane_fan();
  std::vector<Point> points;
  std::vector<Point> queries;
  std::vector<std::pair<Point, Point>> pairs;
  /// Seeds random query pairs and random oracle queries.
  std::uint64_t seed = 0;
  /// When set, marked points are nudged with perturb() before use.
  std::optional<std::uint64_t> perturb_seed;
  int pair_count = 20;
  unsigned threads = 1;
};

/// Accepts a fan as a list of integer pairs or the names "P2" / "F1";
/// points as pairs of "num/den" (or integer) strings.
Config parse_config(const Json& j);
Config load_config(const std::string& path);

/// "x/y,u/v" or "x,y".
Point parse_point(const std::string& text);

struct Box {
  Scalar xmin, ymin, xmax, ymax;
};

/// Integer box around the marked points and joints, padded by three times
/// the larger side and at least 10 units wide in each direction.
Box clipping_box(const Diagram& d);

/// Deterministic drawing of the walls, joints and marked points of d.
std::string render_svg(const Diagram& d, std::span<const Point> queries = {});

/// Random point in the box with denominator 997.
Point random_point(const Box& box, std::mt19937_64& rng);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace tropscat::cli
