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

#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tropscat/errors.hpp"

namespace tropscat::cli {

namespace {

Fan fan_from_config(const Json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    if (name == "P2") return projective_plane_fan();
    if (name == "F1") return hirzebruch_f1_fan();
    throw ParseError("unknown fan name \"" + name + "\" (known: P2, F1)");
  }
  return fan_from_json(j);
}

std::vector<Point> points_from_config(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a list of points");
  std::vector<Point> out;
  for (const auto& p : j) out.push_back(p.is_string() ? parse_point(p.get<std::string>()) : point_from_json(p));
  return out;
}

std::uint64_t seed_from_config(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_string()) {
    try {
      std::size_t used = 0;
      auto v = std::stoull(j.get<std::string>(), &used);
      if (used == j.get<std::string>().size()) return v;
    } catch (const std::exception&) {
    }
  }
  throw ParseError("seed must be a non-negative integer, got " + j.dump());
}

}  // namespace

Point parse_point(const std::string& text) {
  auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("point \"" + text + "\" must look like \"x/y,u/v\"");
  auto trim = [](std::string s) {
    s.erase(0, s.find_first_not_of(" \t"));
    s.erase(s.find_last_not_of(" \t") + 1);
    return s;
  };
  return {parse_scalar(trim(text.substr(0, comma))), parse_scalar(trim(text.substr(comma + 1)))};
}

Config parse_config(const Json& j) {
  if (!j.is_object()) throw ParseError("config must be a JSON object");
  Config c;
  for (const auto& [key, value] : j.items()) {
    if (key == "fan") {
      c.fan = fan_from_config(value);
    } else if (key == "points") {
      c.points = points_from_config(value);
    } else if (key == "queries") {
      c.queries = points_from_config(value);
    } else if (key == "pairs") {
      for (const auto& p : value) {
        auto two = points_from_config(p);
        if (two.size() != 2) throw ParseError("each pair must hold exactly two points");
        c.pairs.emplace_back(two[0], two[1]);
      }
    } else if (key == "seed") {
      c.seed = seed_from_config(value);
    } else if (key == "perturb_seed") {
      c.perturb_seed = seed_from_config(value);
    } else if (key == "pair_count") {
      c.pair_count = value.get<int>();
      if (c.pair_count < 0) throw ParseError("pair_count must be non-negative");
    } else if (key == "threads") {
      c.threads = value.get<unsigned>();
    } else {
      throw ParseError("unknown config key \"" + key + "\"");
    }
  }
  if (c.perturb_seed) c.points = perturb(c.points, *c.perturb_seed);
  return c;
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return parse_config(j);
}

}  // namespace tropscat::cli
