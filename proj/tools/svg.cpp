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

#include <cstdio>
#include <set>
#include <sstream>

#include "cli.hpp"

namespace tropscat::cli {

namespace {

std::string num(const Scalar& v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v.get_d());
  std::string s = buf;
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      default: out += c;
    }
  }
  return out;
}

Scalar floor_of(const Scalar& v) {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return Scalar(q);
}

Scalar ceil_of(const Scalar& v) {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return Scalar(q);
}

// Clips {a + s t : lo <= s <= hi} to the box; lo / hi absent mean unbounded.
std::optional<std::pair<Point, Point>> clip(const Box& box, const Point& a, const IntVec& t, std::optional<Scalar> lo,
                                            std::optional<Scalar> hi) {
  auto limit = [&](const BigInt& dir, const Scalar& pos, const Scalar& mn, const Scalar& mx) {
    if (sgn(dir) == 0) return pos >= mn && pos <= mx;
    Scalar s1 = (mn - pos) / Scalar(dir), s2 = (mx - pos) / Scalar(dir);
    if (s1 > s2) std::swap(s1, s2);
    if (!lo || s1 > *lo) lo = s1;
    if (!hi || s2 < *hi) hi = s2;
    return true;
  };
  if (!limit(t.x, a.x, box.xmin, box.xmax) || !limit(t.y, a.y, box.ymin, box.ymax)) return std::nullopt;
  if (*lo > *hi) return std::nullopt;
  auto at = [&](const Scalar& s) { return Point(a.x + s * Scalar(t.x), a.y + s * Scalar(t.y)); };
  return std::make_pair(at(*lo), at(*hi));
}

}  // namespace

Box clipping_box(const Diagram& d) {
  std::vector<Point> pts = d.marked_points;
  for (const auto& j : d.joints) pts.push_back(j.point);
  if (pts.empty()) return {Scalar(-5), Scalar(-5), Scalar(5), Scalar(5)};
  Box b{pts[0].x, pts[0].y, pts[0].x, pts[0].y};
  for (const auto& p : pts) {
    b.xmin = std::min(b.xmin, p.x);
    b.xmax = std::max(b.xmax, p.x);
    b.ymin = std::min(b.ymin, p.y);
    b.ymax = std::max(b.ymax, p.y);
  }
  Scalar pad = 3 * std::max(b.xmax - b.xmin, b.ymax - b.ymin);
  Box out{floor_of(b.xmin - pad), floor_of(b.ymin - pad), ceil_of(b.xmax + pad), ceil_of(b.ymax + pad)};
  auto widen = [](Scalar& lo, Scalar& hi) {
    Scalar missing = Scalar(10) - (hi - lo);
    if (missing <= 0) return;
    lo -= ceil_of(missing / 2);
    hi += ceil_of(missing / 2);
  };
  widen(out.xmin, out.xmax);
  widen(out.ymin, out.ymax);
  return out;
}

Point random_point(const Box& box, std::mt19937_64& rng) {
  auto coord = [&](const Scalar& lo, const Scalar& hi) -> Scalar {
    const long span = static_cast<long>(Scalar((hi - lo) * 997).get_d());
    std::uniform_int_distribution<long> pick(1, span - 1);
    return lo + Scalar(pick(rng), 997);
  };
  Scalar x = coord(box.xmin, box.xmax);
  Scalar y = coord(box.ymin, box.ymax);
  return {x, y};
}

std::string render_svg(const Diagram& d, std::span<const Point> queries) {
  const Box box = clipping_box(d);
  const Scalar w = box.xmax - box.xmin, h = box.ymax - box.ymin;
  const Scalar unit = std::max(w, h) / 200;
  std::set<Point> marked(d.marked_points.begin(), d.marked_points.end());

  std::ostringstream os;
  // World coordinates with y negated so that up is up.
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"" << num(Scalar(800) * h / w)
     << "\" viewBox=\"" << num(box.xmin) << " " << num(-box.ymax) << " " << num(w) << " " << num(h) << "\">\n";
  os << "<rect x=\"" << num(box.xmin) << "\" y=\"" << num(-box.ymax) << "\" width=\"" << num(w) << "\" height=\""
     << num(h) << "\" fill=\"white\" stroke=\"#888\" stroke-width=\"" << num(unit / 2) << "\"/>\n";

  os << "<g id=\"walls\" font-family=\"monospace\" font-size=\"" << num(unit * 4) << "\">\n";
  for (std::size_t i = 0; i < d.walls.size(); ++i) {
    const Wall& wall = d.walls[i];
    const IntVec& t = *wall.support.tangent();
    auto start = wall.support.start();
    auto end = wall.support.end();
    Point anchor = start ? *start : end ? *end : wall.support.interior_point();
    std::optional<Scalar> lo, hi;
    if (start) lo = Scalar(0);
    if (end) {
      Scalar len = (dot(t, *end) - dot(t, anchor)) / Scalar(dot(t, t));
      hi = len;
    }
    auto seg = clip(box, anchor, t, lo, hi);
    if (!seg) continue;
    const bool scattered = start && !marked.count(*start);
    const char* colour = scattered ? "#c0392b" : "#1f5fa8";
    os << "<line x1=\"" << num(seg->first.x) << "\" y1=\"" << num(-seg->first.y) << "\" x2=\"" << num(seg->second.x)
       << "\" y2=\"" << num(-seg->second.y) << "\" stroke=\"" << colour << "\" stroke-width=\"" << num(unit * Scalar(3, 4))
       << "\"/>\n";
    Scalar f(1, 3);
    Point label(seg->first.x + f * (seg->second.x - seg->first.x), seg->first.y + f * (seg->second.y - seg->first.y));
    os << "<text x=\"" << num(label.x + unit * 2) << "\" y=\"" << num(-label.y - unit * 2) << "\" fill=\"" << colour
       << "\">" << escape(monomial_label(wall.m, wall.source_tree.marks())) << "</text>\n";
  }
  os << "</g>\n";

  os << "<g id=\"joints\" stroke=\"#333\" stroke-width=\"" << num(unit / 2) << "\">\n";
  for (const auto& j : d.joints) {
    const Scalar r = unit * 2;
    os << "<path d=\"M " << num(j.point.x - r) << " " << num(-j.point.y - r) << " L " << num(j.point.x + r) << " "
       << num(-j.point.y + r) << " M " << num(j.point.x - r) << " " << num(-j.point.y + r) << " L "
       << num(j.point.x + r) << " " << num(-j.point.y - r) << "\"/>\n";
  }
  os << "</g>\n";

  os << "<g id=\"points\" font-family=\"monospace\" font-size=\"" << num(unit * 4) << "\">\n";
  for (std::size_t i = 0; i < d.marked_points.size(); ++i) {
    const Point& p = d.marked_points[i];
    os << "<circle cx=\"" << num(p.x) << "\" cy=\"" << num(-p.y) << "\" r=\"" << num(unit * Scalar(3, 2))
       << "\" fill=\"black\"/>\n";
    os << "<text x=\"" << num(p.x - unit * 6) << "\" y=\"" << num(-p.y + unit * 5) << "\">P" << i + 1 << "</text>\n";
  }
  for (const auto& q : queries) {
    const Scalar r = unit * Scalar(3, 2);
    os << "<rect x=\"" << num(q.x - r) << "\" y=\"" << num(-q.y - r) << "\" width=\"" << num(2 * r) << "\" height=\""
       << num(2 * r) << "\" fill=\"none\" stroke=\"#2e7d32\" stroke-width=\"" << num(unit / 2) << "\"/>\n";
  }
  os << "</g>\n";

  // Fan legend in the top left corner.
  const Scalar cx = box.xmin + unit * 16, cy = box.ymax - unit * 16;
  os << "<g id=\"fan\" font-family=\"monospace\" font-size=\"" << num(unit * 4) << "\" stroke-width=\""
     << num(unit / 2) << "\">\n";
  for (std::size_t r = 0; r < d.fan.size(); ++r) {
    const IntVec& v = d.fan.ray(r);
    const Scalar len = unit * 10 / Scalar(std::max(BigInt(abs(v.x)), BigInt(abs(v.y))));
    Point tip(cx + len * Scalar(v.x), cy + len * Scalar(v.y));
    os << "<line x1=\"" << num(cx) << "\" y1=\"" << num(-cy) << "\" x2=\"" << num(tip.x) << "\" y2=\"" << num(-tip.y)
       << "\" stroke=\"#555\"/>\n";
    os << "<text x=\"" << num(tip.x + (sgn(v.x) > 0 ? Scalar(unit) : sgn(v.x) < 0 ? Scalar(-unit * 4) : Scalar(-unit))) << "\" y=\""
       << num(-tip.y + (sgn(v.y) > 0 ? Scalar(-unit) : Scalar(unit * 4))) << "\" fill=\"#555\">" << Fan::label(r) << "</text>\n";
  }
  std::ostringstream rays;
  for (std::size_t r = 0; r < d.fan.size(); ++r) {
    const IntVec& v = d.fan.ray(r);
    rays << (r ? " " : "") << Fan::label(r) << "=(" << v.x << "," << v.y << ")";
  }
  os << "<text x=\"" << num(box.xmin + unit * 3) << "\" y=\"" << num(-box.ymax + unit * 36) << "\" fill=\"#555\">"
     << escape(rays.str()) << "</text>\n";
  os << "</g>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace tropscat::cli
