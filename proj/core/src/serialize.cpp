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

#include "tropscat/serialize.hpp"

#include "tropscat/errors.hpp"

namespace tropscat {

namespace {

Json integer_json(const BigInt& v) {
  if (!v.fits_slong_p()) return v.get_str();
  return static_cast<std::int64_t>(v.get_si());
}

Json marks_json(MarkSet marks) {
  Json out = Json::array();
  for (int i : marks.indices()) out.push_back(i);
  return out;
}

MarkSet marks_from_json(const Json& j) {
  MarkSet m;
  for (const auto& v : j) {
    int i = v.get<int>();
    if (i < 1 || i > kMaxMarks) throw ParseError("mark index out of range");
    m = m | MarkSet::single(i);
  }
  return m;
}

Json weight_json(const PWeight& m) {
  Json out = Json::array();
  for (const auto& c : m.coords()) out.push_back(integer_json(c));
  return out;
}

PWeight weight_from_json(const Json& j) {
  std::vector<BigInt> coords;
  for (const auto& v : j) coords.push_back(integer_from_json(v));
  return PWeight(std::move(coords));
}

Json constraints_json(const std::vector<Constraint>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) out.push_back(Json::array({to_json(c.a), to_json(c.b)}));
  return out;
}

std::vector<Constraint> constraints_from_json(const Json& j) {
  std::vector<Constraint> out;
  for (const auto& c : j) {
    if (!c.is_array() || c.size() != 2) throw ParseError("constraint must be [[a1,a2], \"b\"]");
    out.push_back({intvec_from_json(c[0]), scalar_from_json(c[1])});
  }
  return out;
}

}  // namespace

Json to_json(const Scalar& s) { return to_string(s); }
Json to_json(const IntVec& v) { return Json::array({integer_json(v.x), integer_json(v.y)}); }
Json to_json(const Point& p) { return Json::array({to_json(p.x), to_json(p.y)}); }

Json to_json(const Fan& fan) {
  Json out = Json::array();
  for (const auto& r : fan.rays()) out.push_back(to_json(r));
  return out;
}

Json to_json(const Cell& c) {
  Json out;
  out["dim"] = c.dim();
  out["eq"] = constraints_json(c.equalities());
  out["ineq"] = constraints_json(c.inequalities());
  if (c.tangent()) out["t"] = to_json(*c.tangent());
  return out;
}

Json to_json(const PotentialElement& f) {
  Json out = Json::array();
  for (const auto& [key, c] : f.terms()) {
    Json t;
    t["m"] = weight_json(key.first);
    t["marks"] = marks_json(key.second);
    t["coeff"] = to_json(c);
    out.push_back(std::move(t));
  }
  return out;
}

Json to_json(const LieElement& h) {
  Json out = Json::array();
  for (const auto& term : h.terms()) {
    Json t;
    t["m"] = weight_json(term.m);
    t["marks"] = marks_json(term.marks);
    t["coeff"] = to_json(term.coeff);
    t["n"] = to_json(term.n);
    out.push_back(std::move(t));
  }
  return out;
}

Json to_json(const DiskFamily& f) {
  Json out;
  out["tree"] = f.tree.encoding();
  out["maslov"] = f.stats.maslov;
  out["k"] = f.stats.k;
  out["d"] = f.stats.d;
  out["marks"] = marks_json(f.stats.marks);
  out["m"] = weight_json(f.stats.m);
  out["mbar"] = to_json(f.stats.mbar);
  out["k_div"] = integer_json(f.stats.k_div);
  out["mult"] = integer_json(f.stats.mult);
  out["monomial"] = monomial_label(f.stats.m, f.stats.marks);
  out["locus"] = to_json(f.locus);
  return out;
}

Json to_json(const FamilySet& fs) {
  Json out;
  out["fan"] = to_json(fs.fan);
  Json pts = Json::array();
  for (const auto& p : fs.points) pts.push_back(to_json(p));
  out["points"] = std::move(pts);
  Json mi0 = Json::array(), mi2 = Json::array();
  for (const auto& f : fs.maslov0) mi0.push_back(to_json(f));
  for (const auto& f : fs.maslov2) mi2.push_back(to_json(f));
  out["maslov0"] = std::move(mi0);
  out["maslov2"] = std::move(mi2);
  return out;
}

Json to_json(const Diagram& d) {
  Json out;
  out["fan"] = to_json(d.fan);
  Json pts = Json::array();
  for (const auto& p : d.marked_points) pts.push_back(to_json(p));
  out["marked_points"] = std::move(pts);
  Json walls = Json::array();
  for (const auto& w : d.walls) {
    Json j;
    j["tree"] = w.source_tree.encoding();
    j["label"] = monomial_label(w.m, w.source_tree.marks());
    j["base"] = w.support.start() ? to_json(*w.support.start()) : Json();
    j["tangent"] = to_json(*w.support.tangent());
    j["m"] = weight_json(w.m);
    j["n"] = to_json(w.n);
    j["log"] = to_json(w.log_theta);
    j["support"] = to_json(w.support);
    walls.push_back(std::move(j));
  }
  out["walls"] = std::move(walls);
  Json joints = Json::array();
  for (const auto& jt : d.joints) {
    Json j;
    j["point"] = to_json(jt.point);
    j["walls"] = jt.walls;
    joints.push_back(std::move(j));
  }
  out["joints"] = std::move(joints);
  return out;
}

Scalar scalar_from_json(const Json& j) {
  if (j.is_string()) return parse_scalar(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(BigInt(std::to_string(j.get<std::int64_t>())));
  throw ParseError("rational must be a \"num/den\" string or an integer, got " + j.dump());
}

BigInt integer_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    Scalar s = parse_scalar(j.get<std::string>());
    if (s.get_den() != 1) throw ParseError("expected an integer, got " + j.dump());
    return s.get_num();
  }
  throw ParseError("expected an integer, got " + j.dump());
}

IntVec intvec_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("integer vector must be a pair, got " + j.dump());
  return {integer_from_json(j[0]), integer_from_json(j[1])};
}

Point point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("point must be a pair, got " + j.dump());
  return {scalar_from_json(j[0]), scalar_from_json(j[1])};
}

Fan fan_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("fan must be a list of rays");
  std::vector<IntVec> rays;
  for (const auto& r : j) rays.push_back(intvec_from_json(r));
  return Fan(std::move(rays));
}

Cell cell_from_json(const Json& j) {
  std::optional<IntVec> t;
  if (j.contains("t")) t = intvec_from_json(j.at("t"));
  auto c = Cell::from_constraints(constraints_from_json(j.at("eq")), constraints_from_json(j.at("ineq")), t);
  if (!c) throw ParseError("cell is empty");
  if (c->dim() != j.at("dim").get<int>()) throw ParseError("cell dimension does not match its constraints");
  return *c;
}

PotentialElement potential_from_json(const Json& j, std::size_t rays) {
  PotentialElement f;
  for (const auto& t : j) {
    PWeight m = weight_from_json(t.at("m"));
    if (m.size() != rays) throw ParseError("weight length does not match the fan");
    f.add_term(m, marks_from_json(t.at("marks")), scalar_from_json(t.at("coeff")));
  }
  return f;
}

LieElement lie_from_json(const Fan& fan, const Json& j) {
  LieElement h;
  for (const auto& t : j)
    h += LieElement::term(fan, scalar_from_json(t.at("coeff")), weight_from_json(t.at("m")), intvec_from_json(t.at("n")),
                          marks_from_json(t.at("marks")));
  return h;
}

Diagram diagram_from_json(const Json& j) {
  Diagram d{fan_from_json(j.at("fan")), {}, {}, {}};
  for (const auto& p : j.at("marked_points")) d.marked_points.push_back(point_from_json(p));
  for (const auto& w : j.at("walls")) {
    Cell support = cell_from_json(w.at("support"));
    if (support.dim() != 1) throw ParseError("wall support must be 1-dimensional");
    d.walls.push_back(Wall{std::move(support), weight_from_json(w.at("m")), intvec_from_json(w.at("n")),
                           lie_from_json(d.fan, w.at("log")), parse_tree(w.at("tree").get<std::string>())});
  }
  recompute_joints(d);
  return d;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace tropscat
