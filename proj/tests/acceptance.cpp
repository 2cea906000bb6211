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

// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "support.hpp"
#include "tropscat/serialize.hpp"

namespace tropscat {
namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double limit_seconds;  // 0: none
  std::function<Outcome()> body;
};

#define REQUIRE(cond, msg)            \
  do {                                \
    if (!(cond)) {                    \
      std::ostringstream os_;         \
      os_ << msg;                     \
      return Outcome{false, os_.str()}; \
    }                                 \
  } while (0)

std::string describe(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

struct Sample {
  std::string label;
  Fan fan;
  std::vector<Point> points;
  FamilySet fs;
  Diagram diagram;
  std::vector<std::pair<Point, Point>> pairs;
};

// Shared by criteria 3, 4 and 7: ten seeded configurations for each of
// (P2, F1) x (n = 2, 3), each with twenty generic query pairs.
std::vector<Sample>& samples() {
  static std::vector<Sample> all = [] {
    std::vector<Sample> out;
    for (int which = 0; which < 2; ++which) {
      const Fan fan = which ? hirzebruch_f1_fan() : projective_plane_fan();
      for (std::size_t n : {2u, 3u}) {
        for (int seed = 0; seed < 10; ++seed) {
          std::mt19937_64 rng(1000 * which + 100 * n + seed);
          FamilySet fs = enumerate_families(fan, {});
          auto pts = testing::random_configuration(fan, n, rng, &fs);
          Diagram d = build_diagram(fs);
          std::vector<std::pair<Point, Point>> pairs;
          while (pairs.size() < 20) {
            Point q = testing::random_query(fs, rng), q2 = testing::random_query(fs, rng);
            try {
              generic_path(d, q, q2);
              pairs.emplace_back(q, q2);
            } catch (const NonGenericPath&) {
            }
          }
          std::string label = std::string(which ? "F1" : "P2") + " n=" + std::to_string(n) + " seed " +
                              std::to_string(seed);
          out.push_back({label, fan, pts, std::move(fs), std::move(d), std::move(pairs)});
        }
      }
    }
    return out;
  }();
  return all;
}

bool consistent(const Diagram& d) {
  for (std::size_t j = 0; j < d.joints.size(); ++j)
    if (!check_joint_consistency(d, j)) return false;
  return true;
}

bool crossings_hold(const Sample& s, const Diagram& d) {
  for (const auto& [q, q2] : s.pairs) {
    try {
      if (!check_wall_crossing(s.fs, d, q, q2)) return false;
    } catch (const NonGenericPath&) {
      // A generic pair for the full diagram stays generic after dropping a
      // wall, so this cannot happen; treat it as a failure all the same.
      return false;
    }
  }
  return true;
}

Outcome hori_vafa_degeneration() {
  std::mt19937_64 rng(1);
  std::vector<std::pair<std::string, Fan>> fans{{"P2", projective_plane_fan()},
                                                 {"F1", hirzebruch_f1_fan()},
                                                 {"random 5-ray", testing::random_fan(rng, 5)}};
  int queries = 0;
  for (const auto& [name, fan] : fans) {
    FamilySet fs = enumerate_families(fan, {});
    Diagram d = build_diagram(fs);
    REQUIRE(d.walls.empty() && d.joints.empty(), name << ": diagram not empty");
    const PotentialElement hv = PotentialElement::hori_vafa(fan);
    for (int i = 0; i < 10; ++i, ++queries) {
      Point q = testing::random_query(fs, rng, 50);
      REQUIRE(potential_at(fs, q) == hv, name << ": W_0" << describe(q) << " != Hori-Vafa");
      REQUIRE(brute_force_potential(fan, {}, q) == hv, name << ": oracle differs at " << describe(q));
    }
  }
  return {true, std::to_string(fans.size()) + " fans, " + std::to_string(queries) + " queries, W_0 = sum z^{e_rho}"};
}

Outcome one_pointed_fixture() {
  const Fan fan = projective_plane_fan();
  const std::vector<Point> pts{Point(0, 0)};
  FamilySet fs = enumerate_families(fan, pts);
  Diagram d = build_diagram(fs);
  int two_leaf = 0;
  for (const auto& f : fs.maslov2) two_leaf += f.stats.k == 2;
  REQUIRE(fs.maslov0.size() == 3, fs.maslov0.size() << " Maslov index 0 families");
  REQUIRE(two_leaf == 6, two_leaf << " two-leaf Maslov index 2 families");
  REQUIRE(d.joints.empty(), d.joints.size() << " joints");

  std::vector<const DiskFamily*> ab;
  const PWeight e_ab(std::vector<BigInt>{1, 1, 0});
  for (const auto& f : fs.maslov2)
    if (f.stats.m == e_ab) ab.push_back(&f);
  REQUIRE(ab.size() == 2, ab.size() << " families with monomial z^{e_a+e_b} u1");
  auto meet = intersect(ab[0]->locus, ab[1]->locus);
  REQUIRE(meet && meet->cell.same_set(Cell::ray(Point(0, 0), IntVec(-1, -1))), "loci do not abut along the diagonal");
  for (const auto& w : d.walls) REQUIRE(!w.support.contains(Point(-1, -1), false), "the diagonal carries a wall");

  const PotentialElement hv = PotentialElement::hori_vafa(fan);
  auto plus = [&](std::vector<BigInt> m) { return hv + PotentialElement::monomial(PWeight(m), MarkSet::single(1)); };
  struct Row {
    const char* sector;
    Point q;
    PotentialElement expected;
  };
  std::vector<Row> table{
      {"upper", Point(-2, 1), plus({1, 0, 1})}, {"upper", Point(1, 2), plus({1, 0, 1})},
      {"upper", Point(-1, 5), plus({1, 0, 1})}, {"south-west", Point(-1, -2), plus({1, 1, 0})},
      {"south-west", Point(-2, -1), plus({1, 1, 0})}, {"east", Point(3, 1), plus({0, 1, 1})},
      {"east", Point(2, -1), plus({0, 1, 1})},
  };
  for (const auto& row : table) {
    REQUIRE(potential_at(fs, row.q) == row.expected, row.sector << " sector at " << describe(row.q));
    REQUIRE(brute_force_potential(fan, pts, row.q) == row.expected, "oracle, " << row.sector << " sector");
  }
  return {true, "3 MI-0, 6 two-leaf MI-2, 0 joints, diagonal not a wall, 7 chamber queries match table and oracle"};
}

Outcome consistency() {
  std::size_t joints = 0;
  for (const auto& s : samples()) {
    for (std::size_t j = 0; j < s.diagram.joints.size(); ++j, ++joints)
      REQUIRE(check_joint_consistency(s.diagram, j),
              s.label << ": loop around joint " << describe(s.diagram.joints[j].point) << " is not the identity");
  }
  REQUIRE(joints > 0, "no joints at all; the check would be vacuous");
  return {true, std::to_string(samples().size()) + " configurations, " + std::to_string(joints) + " joints"};
}

Outcome wall_crossing() {
  std::size_t pairs = 0;
  for (const auto& s : samples()) {
    for (const auto& [q, q2] : s.pairs) {
      ++pairs;
      REQUIRE(check_wall_crossing(s.fs, s.diagram, q, q2), s.label << ": " << describe(q) << " -> " << describe(q2));
    }
  }
  return {true, std::to_string(samples().size()) + " configurations, " + std::to_string(pairs) + " pairs"};
}

Outcome oracle_equivalence() {
  const Fan fan = projective_plane_fan();
  int queries = 0, configs = 0;
  for (std::size_t n : {1u, 2u}) {
    for (int seed = 0; seed < 5; ++seed, ++configs) {
      std::mt19937_64 rng(500 + 10 * n + seed);
      FamilySet fs = enumerate_families(fan, {});
      auto pts = testing::random_configuration(fan, n, rng, &fs);
      for (int i = 0; i < 10; ++i, ++queries) {
        Point q = testing::random_query(fs, rng);
        REQUIRE(potential_at(fs, q) == brute_force_potential(fan, pts, q),
                "n=" << n << " seed " << seed << " at " << describe(q));
      }
    }
  }
  return {true, std::to_string(configs) + " configurations, " + std::to_string(queries) + " queries"};
}

Outcome algebra() {
  int checks = 0;
  std::mt19937_64 rng(6);
  std::vector<Fan> fans{projective_plane_fan(), hirzebruch_f1_fan(), testing::random_fan(rng, 5)};
  for (int round = 0; round < 200; ++round) {
    const Fan& fan = fans[round % fans.size()];
    LieElement a = testing::random_lie(rng, fan, 4), b = testing::random_lie(rng, fan, 4),
               c = testing::random_lie(rng, fan, 4);
    LieElement anti = bracket(fan, a, b);
    anti += bracket(fan, b, a);
    REQUIRE(anti.is_zero(), "antisymmetry, round " << round);
    LieElement jacobi = bracket(fan, a, bracket(fan, b, c));
    jacobi += bracket(fan, b, bracket(fan, c, a));
    jacobi += bracket(fan, c, bracket(fan, a, b));
    REQUIRE(jacobi.is_zero(), "Jacobi, round " << round);
    PotentialElement f = testing::random_potential(rng, fan, 4), g = testing::random_potential(rng, fan, 4);
    const int s = round % 2 ? 1 : -1;
    REQUIRE(exp_apply(fan, a, f * g, s) == exp_apply(fan, a, f, s) * exp_apply(fan, a, g, s),
            "automorphism, round " << round);
    REQUIRE(exp_apply(fan, a, exp_apply(fan, a, f, s), -s) == f, "inverse, round " << round);
    LieElement h = testing::random_lie_term(rng, fan, 4);
    const LieTerm& t = h.terms()[0];
    LieElement h2 = LieElement::term(fan, testing::random_scalar(rng, 3, 4), t.m + t.m + t.m, t.n,
                                     testing::random_marks(rng, 4, false));
    REQUIRE(exp_apply(fan, h, exp_apply(fan, h2, f, 1), 1) == exp_apply(fan, h2, exp_apply(fan, h, f, 1), 1),
            "same-direction commutation, round " << round);
    checks += 5;
  }
  return {true, std::to_string(checks) + " exact checks (antisymmetry, Jacobi, automorphism, inverse, commutation)"};
}

Outcome negative_controls() {
  std::size_t dropped = 0, flipped = 0;
  for (const auto& s : samples()) {
    std::set<Point> marked(s.points.begin(), s.points.end());
    for (std::size_t i = 0; i < s.diagram.walls.size(); ++i) {
      if (marked.count(*s.diagram.walls[i].support.start())) continue;
      Diagram broken = without_wall(s.diagram, i);
      ++dropped;
      REQUIRE(!consistent(broken) || !crossings_hold(s, broken),
              s.label << ": dropping scattered wall " << s.diagram.walls[i].source_tree.encoding()
                      << " went unnoticed");
    }
    Diagram wrong = build_diagram(s.fs, NormalConvention::Counterclockwise);
    REQUIRE(!crossings_hold(s, wrong), s.label << ": counterclockwise normals pass the wall-crossing check");
    ++flipped;
  }
  REQUIRE(dropped > 0, "no scattered walls to drop");
  return {true, std::to_string(dropped) + " scattered walls dropped, each detected; flipped normals fail in " +
                    std::to_string(flipped) + "/" + std::to_string(samples().size()) + " configurations"};
}

Outcome determinism() {
  const Fan fan = projective_plane_fan();
  double worst = 0;
  for (int seed = 0; seed < 3; ++seed) {
    std::mt19937_64 rng(800 + seed);
    auto pts = testing::random_configuration(fan, 3, rng);
    std::string reference;
    for (unsigned threads : {1u, 1u, 4u, 0u}) {
      auto t0 = Clock::now();
      FamilySet fs = enumerate_families(fan, pts, {threads});
      worst = std::max(worst, std::chrono::duration<double>(Clock::now() - t0).count());
      std::string text = dump(to_json(fs)) + dump(to_json(build_diagram(fs)));
      if (reference.empty()) reference = text;
      REQUIRE(text == reference, "seed " << seed << ": output with " << threads << " threads differs");
    }
    REQUIRE(worst < 10, "enumeration took " << worst << " s");
  }
  char buf[128];
  std::snprintf(buf, sizeof buf, "3 configurations x 4 runs byte-identical; slowest enumeration %.3f s", worst);
  return {true, buf};
}

}  // namespace
}  // namespace tropscat

int main() {
  using namespace tropscat;
  std::vector<Criterion> criteria{
      {1, "Hori-Vafa degeneration", 1, hori_vafa_degeneration},
      {2, "one-pointed P2 fixture", 1, one_pointed_fixture},
      {3, "consistency at every joint", 60, consistency},
      {4, "wall-crossing", 60, wall_crossing},
      {5, "oracle equivalence", 120, oracle_equivalence},
      {6, "algebra suite", 10, algebra},
      {7, "negative controls", 0, negative_controls},
      {8, "determinism and performance", 10, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    auto t0 = Clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
    if (o.pass && c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail += "; over the time limit";
    }
    failed += !o.pass;
    char limit[32] = "no limit";
    if (c.limit_seconds > 0) std::snprintf(limit, sizeof limit, "limit %.0f s", c.limit_seconds);
    std::printf("%s [%d] %s: %s (%.3f s, %s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), o.detail.c_str(),
                seconds, limit);
    std::fflush(stdout);
  }
  std::printf("%s: %zu/%zu criteria\n", failed ? "FAIL" : "PASS", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
