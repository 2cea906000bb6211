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

#include "tropscat/scattering.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "tropscat/errors.hpp"

namespace tropscat {

namespace {

std::string describe(const Point& p) {
  std::ostringstream os;
  os << "(" << to_string(p.x) << ", " << to_string(p.y) << ")";
  return os.str();
}

// sign of det2(t, b - a) for a rational direction
int orientation(const IntVec& t, const Point& a, const Point& b) {
  Scalar v = Scalar(t.x) * (b.y - a.y) - Scalar(t.y) * (b.x - a.x);
  return sgn(v);
}

bool on_closed_segment(const Point& p, const Point& a, const Point& b) {
  Scalar dx = b.x - a.x, dy = b.y - a.y;
  Scalar px = p.x - a.x, py = p.y - a.y;
  if (dx * py - dy * px != 0) return false;
  Scalar s = dx * px + dy * py;
  return s >= 0 && s <= dx * dx + dy * dy;
}

struct Hit {
  Scalar time;
  std::size_t wall;
};

}  // namespace

Diagram build_diagram(const FamilySet& fs, NormalConvention convention) {
  Diagram d{fs.fan, {}, {}, fs.points};
  for (const auto& f : fs.maslov0) {
    const IntVec& t = *f.locus.tangent();
    IntVec n = clockwise_normal(t);
    if (convention == NormalConvention::Counterclockwise) n = -n;
    Scalar coeff(f.stats.k_div * f.stats.mult);
    LieElement log = LieElement::term(fs.fan, coeff, f.stats.m, n, f.stats.marks);
    d.walls.push_back(Wall{f.locus, f.stats.m, n, std::move(log), f.tree});
  }
  recompute_joints(d);
  return d;
}

void recompute_joints(Diagram& d) {
  std::set<Point> excluded(d.marked_points.begin(), d.marked_points.end());
  std::set<Point> points;
  for (std::size_t i = 0; i < d.walls.size(); ++i) {
    for (std::size_t j = i + 1; j < d.walls.size(); ++j) {
      auto meet = intersect(d.walls[i].support, d.walls[j].support);
      if (!meet || !meet->transversal || meet->cell.dim() != 0) continue;
      Point x = meet->cell.as_point();
      if (!excluded.count(x)) points.insert(x);
    }
  }
  d.joints.clear();
  for (const auto& x : points) {
    Joint j{x, {}};
    for (std::size_t w = 0; w < d.walls.size(); ++w)
      if (d.walls[w].support.contains(x, false)) j.walls.push_back(w);
    d.joints.push_back(std::move(j));
  }
}

Diagram without_wall(const Diagram& d, std::size_t index) {
  Diagram out = d;
  out.walls.erase(out.walls.begin() + static_cast<std::ptrdiff_t>(index));
  recompute_joints(out);
  return out;
}

PotentialElement path_ordered_apply(const Diagram& d, std::span<const Point> path, const PotentialElement& f) {
  PotentialElement out = f;
  for (std::size_t s = 0; s + 1 < path.size(); ++s) {
    const Point& a = path[s];
    const Point& b = path[s + 1];
    if (a == b) continue;
    for (const auto& p : d.marked_points)
      if (on_closed_segment(p, a, b)) throw NonGenericPath("path passes through marked point " + describe(p));
    for (const auto& j : d.joints)
      if (on_closed_segment(j.point, a, b)) throw NonGenericPath("path passes through joint " + describe(j.point));

    std::vector<Hit> hits;
    for (std::size_t w = 0; w < d.walls.size(); ++w)
      for (const auto& c : segment_crossings(a, b, d.walls[w].support)) hits.push_back({c.time, w});
    std::stable_sort(hits.begin(), hits.end(), [](const Hit& l, const Hit& r) { return l.time < r.time; });

    for (std::size_t i = 0; i < hits.size(); ++i) {
      // Simultaneous crossings must be overlapping walls; their factors commute.
      for (std::size_t k = i; k < hits.size() && hits[k].time == hits[i].time; ++k) {
        const IntVec& ti = *d.walls[hits[i].wall].support.tangent();
        const IntVec& tk = *d.walls[hits[k].wall].support.tangent();
        if (sgn(det2(ti, tk)) != 0) throw NonGenericPath("path crosses two transversal walls at once");
      }
      const Wall& w = d.walls[hits[i].wall];
      int sigma = orientation(*w.support.tangent(), a, b);
      out = exp_apply(d.fan, w.log_theta, out, sigma);
    }
  }
  return out;
}

bool check_joint_consistency(const Diagram& d, std::size_t joint_index) {
  const Joint& joint = d.joints.at(joint_index);
  struct Germ {
    IntVec dir;
    std::size_t wall;
    int sigma;
  };
  std::vector<Germ> germs;
  for (std::size_t w : joint.walls) {
    const Cell& support = d.walls[w].support;
    const IntVec& t = *support.tangent();
    Scalar v = dot(t, joint.point);
    auto lo = support.lower_bound();
    auto hi = support.upper_bound();
    bool at_start = lo && *lo == v;
    bool at_end = hi && *hi == v;
    if (!at_end) germs.push_back({t, w, 0});
    if (!at_start) germs.push_back({-t, w, 0});
  }
  for (auto& g : germs) {
    // A counterclockwise loop crosses the germ g moving in direction rot90(g).
    IntVec travel(BigInt(-g.dir.y), g.dir.x);
    g.sigma = sgn(det2(*d.walls[g.wall].support.tangent(), travel));
  }
  std::stable_sort(germs.begin(), germs.end(), [](const Germ& l, const Germ& r) { return angle_less(l.dir, r.dir); });

  for (std::size_t r = 0; r < d.fan.size(); ++r) {
    PotentialElement gen = PotentialElement::monomial(PWeight::unit(d.fan.size(), r), MarkSet());
    PotentialElement img = gen;
    for (const auto& g : germs) img = exp_apply(d.fan, d.walls[g.wall].log_theta, img, g.sigma);
    if (img != gen) return false;
  }
  return true;
}

namespace {

bool path_is_generic(const Diagram& d, std::span<const Point> path) {
  try {
    path_ordered_apply(d, path, PotentialElement());
    return true;
  } catch (const NonGenericPath&) {
    return false;
  }
}

}  // namespace

std::vector<Point> generic_path(const Diagram& d, const Point& q, const Point& q2) {
  if (q == q2) return {q};
  std::vector<Point> straight{q, q2};
  if (path_is_generic(d, straight)) return straight;
  Point mid((q.x + q2.x) / 2, (q.y + q2.y) / 2);
  Scalar px = q.y - q2.y, py = q2.x - q.x;
  for (int k = 1; k <= 12; ++k) {
    for (int side : {1, -1}) {
      Scalar f(side * k, 13);
      std::vector<Point> detour{q, Point(mid.x + f * px, mid.y + f * py), q2};
      if (path_is_generic(d, detour)) return detour;
    }
  }
  throw NonGenericPath("no generic path from " + describe(q) + " to " + describe(q2));
}

bool check_wall_crossing(const FamilySet& fs, const Diagram& d, const Point& q, const Point& q2) {
  PotentialElement target = potential_at(fs, q2);
  PotentialElement start = potential_at(fs, q);
  auto path = generic_path(d, q, q2);
  return path_ordered_apply(d, path, start) == target;
}

bool check_wall_crossing(const Fan& fan, std::span<const Point> points, const Point& q, const Point& q2) {
  FamilySet fs = enumerate_families(fan, points);
  Diagram d = build_diagram(fs);
  return check_wall_crossing(fs, d, q, q2);
}

}  // namespace tropscat
