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

#include <CLI11.hpp>

#include <fstream>
#include <ostream>
#include <sstream>

#include "cli.hpp"
#include "tropscat/errors.hpp"

namespace tropscat::cli {

namespace {

struct Options {
  std::string config;
  std::string input;
  std::vector<std::string> q;
  std::optional<std::uint64_t> seed;
  std::string svg;
  std::string json;
  std::optional<std::size_t> drop_wall;
  std::optional<unsigned> threads;
};

std::string error_name(const std::exception& e) {
  std::string what = e.what();
  auto colon = what.find(':');
  return colon == std::string::npos ? "Error" : what.substr(0, colon);
}

std::string error_message(const std::exception& e) {
  std::string what = e.what();
  auto colon = what.find(": ");
  return colon == std::string::npos ? what : what.substr(colon + 2);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

// Writes to the file when a path is given, to `out` otherwise.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty())
    out << text;
  else
    write_file(path, text);
}

std::string describe(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

Config config_for(const Options& o) {
  Config c = o.config.empty() ? Config{} : load_config(o.config);
  if (o.seed) c.seed = *o.seed;
  if (o.threads) c.threads = *o.threads;
  for (const auto& q : o.q) c.queries.push_back(parse_point(q));
  return c;
}

struct Built {
  Config config;
  FamilySet families;
  Diagram diagram;
};

Built build(const Options& o) {
  Config c = config_for(o);
  FamilySet fs = enumerate_families(c.fan, c.points, {c.threads});
  Diagram d = build_diagram(fs);
  if (o.drop_wall) {
    if (*o.drop_wall >= d.walls.size())
      throw ParseError("--drop-wall " + std::to_string(*o.drop_wall) + " but the diagram has " +
                       std::to_string(d.walls.size()) + " walls");
    d = without_wall(d, *o.drop_wall);
  }
  return {std::move(c), std::move(fs), std::move(d)};
}

bool is_generic_query(const FamilySet& fs, const Point& q) {
  try {
    potential_at(fs, q);
    return true;
  } catch (const NonGenericQuery&) {
    return false;
  }
}

Point draw_query(const FamilySet& fs, const Box& box, std::mt19937_64& rng) {
  for (int attempt = 0; attempt < 100; ++attempt) {
    Point q = random_point(box, rng);
    if (is_generic_query(fs, q)) return q;
  }
  throw NonGenericQuery("no generic query point found in 100 draws");
}

std::vector<std::pair<Point, Point>> query_pairs(const Built& b) {
  if (!b.config.pairs.empty()) return b.config.pairs;
  std::mt19937_64 rng(b.config.seed);
  const Box box = clipping_box(b.diagram);
  std::vector<std::pair<Point, Point>> out;
  for (int i = 0; i < b.config.pair_count; ++i) {
    bool found = false;
    for (int attempt = 0; attempt < 100 && !found; ++attempt) {
      Point q = draw_query(b.families, box, rng);
      Point q2 = draw_query(b.families, box, rng);
      try {
        generic_path(b.diagram, q, q2);
        out.emplace_back(q, q2);
        found = true;
      } catch (const NonGenericPath&) {
      }
    }
    if (!found) throw NonGenericPath("no generic query pair found in 100 draws");
  }
  return out;
}

std::vector<Point> oracle_queries(const Built& b) {
  if (!b.config.queries.empty()) return b.config.queries;
  std::mt19937_64 rng(b.config.seed);
  const Box box = clipping_box(b.diagram);
  std::vector<Point> out;
  for (int i = 0; i < 10; ++i) out.push_back(draw_query(b.families, box, rng));
  return out;
}

int cmd_diagram(const Options& o, std::ostream& out) {
  Built b = build(o);
  emit(o.json, dump(to_json(b.diagram)), out);
  if (!o.svg.empty()) write_file(o.svg, render_svg(b.diagram, b.config.queries));
  return kOk;
}

int cmd_render(const Options& o, std::ostream& out) {
  std::optional<Diagram> d;
  std::vector<Point> queries;
  if (!o.input.empty()) {
    std::ifstream in(o.input);
    if (!in) throw ParseError("cannot open " + o.input);
    Json j;
    try {
      j = Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(o.input + ": " + e.what());
    }
    d = diagram_from_json(j);
    for (const auto& q : o.q) queries.push_back(parse_point(q));
  } else {
    Built b = build(o);
    d = std::move(b.diagram);
    queries = b.config.queries;
  }
  if (!o.json.empty()) write_file(o.json, dump(to_json(*d)));
  emit(o.svg, render_svg(*d, queries), out);
  return kOk;
}

int cmd_potential(const Options& o, std::ostream& out) {
  Built b = build(o);
  if (b.config.queries.empty()) throw ParseError("potential needs a query point (--q or \"queries\")");
  Json doc = Json::array();
  for (const auto& q : b.config.queries) {
    Json entry;
    entry["q"] = to_json(q);
    entry["terms"] = to_json(potential_at(b.families, q));
    doc.push_back(std::move(entry));
  }
  emit(o.json, dump(doc), out);
  return kOk;
}

int cmd_oracle_compare(const Options& o, std::ostream& out) {
  Built b = build(o);
  Json doc = Json::array();
  bool all = true;
  for (const auto& q : oracle_queries(b)) {
    PotentialElement fast = potential_at(b.families, q);
    PotentialElement slow = brute_force_potential(b.config.fan, b.config.points, q);
    const bool ok = fast == slow;
    all = all && ok;
    out << (ok ? "PASS" : "FAIL") << " oracle at " << describe(q) << "\n";
    Json entry;
    entry["q"] = to_json(q);
    entry["pass"] = ok;
    if (!ok) {
      entry["families"] = to_json(fast);
      entry["oracle"] = to_json(slow);
      out << "  families: " << fast << "\n  oracle:   " << slow << "\n";
    }
    doc.push_back(std::move(entry));
  }
  if (!o.json.empty()) write_file(o.json, dump(doc));
  return all ? kOk : kVerificationFailed;
}

int cmd_verify(const Options& o, std::ostream& out) {
  Built b = build(o);
  const Diagram& d = b.diagram;
  Json report;
  std::size_t checks = 0, failed = 0;
  auto record = [&](bool ok) {
    ++checks;
    if (!ok) ++failed;
    return ok;
  };

  Json joints = Json::array();
  for (std::size_t j = 0; j < d.joints.size(); ++j) {
    const bool ok = record(check_joint_consistency(d, j));
    out << (ok ? "PASS" : "FAIL") << " joint " << j << " at " << describe(d.joints[j].point) << "\n";
    Json entry;
    entry["point"] = to_json(d.joints[j].point);
    entry["walls"] = d.joints[j].walls;
    entry["pass"] = ok;
    joints.push_back(std::move(entry));
  }
  report["joints"] = std::move(joints);

  Json crossings = Json::array();
  const auto pairs = query_pairs(b);
  for (const auto& [q, q2] : pairs) {
    PotentialElement start = potential_at(b.families, q);
    PotentialElement target = potential_at(b.families, q2);
    auto path = generic_path(d, q, q2);
    PotentialElement moved = path_ordered_apply(d, path, start);
    const bool ok = record(moved == target);
    out << (ok ? "PASS" : "FAIL") << " wall-crossing " << describe(q) << " -> " << describe(q2) << "\n";
    Json entry;
    entry["q"] = to_json(q);
    entry["q2"] = to_json(q2);
    entry["pass"] = ok;
    if (!ok) {
      Json path_json = Json::array();
      for (const auto& p : path) path_json.push_back(to_json(p));
      entry["path"] = std::move(path_json);
      entry["expected"] = to_json(target);
      entry["transported"] = to_json(moved);
      out << "  expected:    " << target << "\n  transported: " << moved << "\n";
    }
    crossings.push_back(std::move(entry));
  }
  report["wall_crossing"] = std::move(crossings);

  Json oracle = Json::array();
  if (b.config.points.size() <= 2) {
    std::vector<Point> queries = b.config.queries;
    for (const auto& [q, q2] : pairs) {
      queries.push_back(q);
      queries.push_back(q2);
    }
    for (const auto& q : queries) {
      PotentialElement fast = potential_at(b.families, q);
      PotentialElement slow = brute_force_potential(b.config.fan, b.config.points, q);
      const bool ok = record(fast == slow);
      out << (ok ? "PASS" : "FAIL") << " oracle at " << describe(q) << "\n";
      Json entry;
      entry["q"] = to_json(q);
      entry["pass"] = ok;
      if (!ok) {
        entry["families"] = to_json(fast);
        entry["oracle"] = to_json(slow);
      }
      oracle.push_back(std::move(entry));
    }
  }
  report["oracle"] = std::move(oracle);
  report["checks"] = checks;
  report["failed"] = failed;
  report["pass"] = failed == 0;
  out << (failed == 0 ? "PASS" : "FAIL") << " " << checks - failed << "/" << checks << " checks\n";
  if (!o.json.empty()) write_file(o.json, dump(report));
  return failed == 0 ? kOk : kVerificationFailed;
}

void report_error(std::ostream& err, const std::exception& e) {
  Json j;
  j["error"] = error_name(e);
  j["message"] = error_message(e);
  err << j.dump() << "\n";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Tropical disk counts, pointed potentials and scattering diagrams on toric surfaces."};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config, "JSON configuration file");
    sub->add_option("--q", o.q, "query point \"x/y,u/v\" (repeatable)");
    sub->add_option("--seed", o.seed, "seed for random query points");
    sub->add_option("--json", o.json, "write the JSON document here instead of stdout");
    sub->add_option("--threads", o.threads, "worker threads for enumeration (0 = all cores)");
  };
  auto* diagram = app.add_subcommand("diagram", "write the scattering diagram");
  common(diagram);
  diagram->add_option("--svg", o.svg, "also render the diagram to this SVG file");
  diagram->add_option("--drop-wall", o.drop_wall, "remove wall K before output (test hook)");
  auto* potential = app.add_subcommand("potential", "evaluate W_n at the query points");
  common(potential);
  auto* verify = app.add_subcommand("verify", "check consistency, wall-crossing and the oracle");
  common(verify);
  verify->add_option("--drop-wall", o.drop_wall, "remove wall K before checking (test hook)");
  auto* oracle = app.add_subcommand("oracle-compare", "compare W_n with the brute-force disk count");
  common(oracle);
  auto* render = app.add_subcommand("render", "render a diagram to SVG");
  common(render);
  render->add_option("--input", o.input, "diagram JSON written by `diagram` (instead of --config)");
  render->add_option("--svg", o.svg, "SVG output path (stdout if omitted)");
  render->add_option("--drop-wall", o.drop_wall, "remove wall K before rendering (test hook)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return kUsage;
  }

  try {
    if (diagram->parsed()) return cmd_diagram(o, out);
    if (potential->parsed()) return cmd_potential(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (oracle->parsed()) return cmd_oracle_compare(o, out);
    return cmd_render(o, out);
  } catch (const NonGenericConfiguration& e) {
    report_error(err, e);
    return kNonGeneric;
  } catch (const NonGenericQuery& e) {
    report_error(err, e);
    return kNonGeneric;
  } catch (const NonGenericPath& e) {
    report_error(err, e);
    return kNonGeneric;
  } catch (const Error& e) {
    report_error(err, e);
    return kUsage;
  } catch (const nlohmann::json::exception& e) {
    Json j;
    j["error"] = "ParseError";
    j["message"] = e.what();
    err << j.dump() << "\n";
    return kUsage;
  }
}

}  // namespace tropscat::cli
