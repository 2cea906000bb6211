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

#include "tropscat/geom2d.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "tropscat/errors.hpp"

namespace tropscat {

std::string to_string(const Scalar& s) {
  return s.get_num().get_str() + "/" + s.get_den().get_str();
}

Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = start; i < text.size(); ++i) {
    char ch = text[i];
    if (ch == '/' && !seen_slash) {
      seen_slash = true;
    } else if (ch >= '0' && ch <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("bad rational '" + text + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after)) throw ParseError("bad rational '" + text + "'");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Scalar s;
  if (s.set_str(body, 10) != 0) throw ParseError("bad rational '" + text + "'");
  if (sgn(s.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
  s.canonicalize();
  return s;
}

std::ostream& operator<<(std::ostream& os, const IntVec& v) {
  return os << "(" << v.x.get_str() << "," << v.y.get_str() << ")";
}

std::ostream& operator<<(std::ostream& os, const Point& p) {
  return os << "(" << p.x.get_str() << "," << p.y.get_str() << ")";
}

BigInt det2(const IntVec& v, const IntVec& w) { return v.x * w.y - v.y * w.x; }
BigInt dot(const IntVec& v, const IntVec& w) { return v.x * w.x + v.y * w.y; }
Scalar dot(const IntVec& a, const Point& p) { return Scalar(a.x) * p.x + Scalar(a.y) * p.y; }

std::pair<IntVec, BigInt> primitive(const IntVec& v) {
  if (v.is_zero()) throw ZeroVector("primitive of (0,0)");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
  return {IntVec(BigInt(v.x / g), BigInt(v.y / g)), g};
}

namespace {

int half_plane(const IntVec& v) { return (sgn(v.y) > 0 || (sgn(v.y) == 0 && sgn(v.x) > 0)) ? 0 : 1; }

// Constraint a_x*x + a_y*y >= b (or > b when strict).
struct LinIneq {
  Scalar ax, ay, b;
  bool strict = false;
};

struct Bound {
  Scalar value;
  bool strict = false;
};

void tighten_lower(std::optional<Bound>& lo, const Scalar& v, bool strict) {
  if (!lo || v > lo->value || (v == lo->value && strict)) lo = Bound{v, strict};
}

void tighten_upper(std::optional<Bound>& hi, const Scalar& v, bool strict) {
  if (!hi || v < hi->value || (v == hi->value && strict)) hi = Bound{v, strict};
}

bool interval_ok(const std::optional<Bound>& lo, const std::optional<Bound>& hi) {
  if (!lo || !hi) return true;
  if (lo->value < hi->value) return true;
  return lo->value == hi->value && !lo->strict && !hi->strict;
}

Scalar pick(const std::optional<Bound>& lo, const std::optional<Bound>& hi) {
  if (lo && hi) return (lo->value + hi->value) / 2;
  if (lo) return lo->value + 1;
  if (hi) return hi->value - 1;
  return Scalar(0);
}

// Fourier-Motzkin in two variables with back substitution: returns a
// witness point of the system, or nullopt when it is infeasible.
std::optional<Point> solve_system(const std::vector<LinIneq>& sys) {
  std::vector<const LinIneq*> pos, neg;
  std::vector<LinIneq> xonly;
  for (const auto& c : sys) {
    int s = sgn(c.ay);
    if (s > 0) pos.push_back(&c);
    else if (s < 0) neg.push_back(&c);
    else xonly.push_back(c);
  }
  for (const auto* p : pos) {
    for (const auto* q : neg) {
      Scalar lp = -q->ay;
      Scalar lq = p->ay;
      xonly.push_back({p->ax * lp + q->ax * lq, Scalar(0), p->b * lp + q->b * lq, p->strict || q->strict});
    }
  }
  std::optional<Bound> xlo, xhi;
  for (const auto& c : xonly) {
    int s = sgn(c.ax);
    if (s == 0) {
      if (c.strict ? !(0 > c.b) : !(0 >= c.b)) return std::nullopt;
    } else if (s > 0) {
      tighten_lower(xlo, c.b / c.ax, c.strict);
    } else {
      tighten_upper(xhi, c.b / c.ax, c.strict);
    }
  }
  if (!interval_ok(xlo, xhi)) return std::nullopt;
  Scalar x = pick(xlo, xhi);
  std::optional<Bound> ylo, yhi;
  for (const auto* p : pos) tighten_lower(ylo, (p->b - p->ax * x) / p->ay, p->strict);
  for (const auto* q : neg) tighten_upper(yhi, (q->b - q->ax * x) / q->ay, q->strict);
  if (!interval_ok(ylo, yhi)) return std::nullopt;
  return Point(x, pick(ylo, yhi));
}

LinIneq as_ineq(const Constraint& c, bool strict = false) {
  return {Scalar(c.a.x), Scalar(c.a.y), c.b, strict};
}

LinIneq negated_strict(const Constraint& c) {
  return {Scalar(-c.a.x), Scalar(-c.a.y), -c.b, true};
}

std::vector<LinIneq> system_of(const Cell& c) {
  std::vector<LinIneq> sys;
  for (const auto& e : c.equalities()) {
    sys.push_back(as_ineq(e));
    sys.push_back({Scalar(-e.a.x), Scalar(-e.a.y), -e.b, false});
  }
  for (const auto& i : c.inequalities()) sys.push_back(as_ineq(i));
  return sys;
}

bool implies(const Cell& c, const Constraint& ineq) {
  auto sys = system_of(c);
  sys.push_back(negated_strict(ineq));
  return !solve_system(sys).has_value();
}

// Divide the normal by its content; returns false for a zero normal.
bool normalize(Constraint& c) {
  if (c.a.is_zero()) return false;
  auto [prim, g] = primitive(c.a);
  c.a = prim;
  c.b /= Scalar(g);
  return true;
}

IntVec canonical_direction(const IntVec& v) {
  IntVec t = primitive(v).first;
  return half_plane(t) == 0 ? t : -t;
}

// Solve <n1,x> = b1, <n2,x> = b2 for independent n1, n2.
Point solve2x2(const IntVec& n1, const Scalar& b1, const IntVec& n2, const Scalar& b2) {
  Scalar det(det2(n1, n2));
  Scalar x = (b1 * Scalar(n2.y) - b2 * Scalar(n1.y)) / det;
  Scalar y = (Scalar(n1.x) * b2 - Scalar(n2.x) * b1) / det;
  return {x, y};
}

}  // namespace

bool angle_less(const IntVec& a, const IntVec& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return sgn(det2(a, b)) > 0;
}

// ---------------------------------------------------------------------------
// Cell construction

namespace {

std::optional<Cell> make_point_cell(const Point& p, const std::vector<Constraint>& eqs,
                                    const std::vector<Constraint>& ineqs) {
  for (const auto& e : eqs)
    if (dot(e.a, p) != e.b) return std::nullopt;
  for (const auto& i : ineqs)
    if (!i.satisfied_by(p)) return std::nullopt;
  return Cell::point(p);
}

}  // namespace

Cell Cell::full_plane() { return Cell(); }

Cell Cell::point(const Point& p) {
  Cell c;
  c.dim_ = 0;
  c.eq_ = {{IntVec(1, 0), p.x}, {IntVec(0, 1), p.y}};
  return c;
}

Cell Cell::ray(const Point& base, const IntVec& direction) {
  IntVec t = primitive(direction).first;
  IntVec nu(-t.y, t.x);
  return *from_constraints({{nu, dot(nu, base)}}, {{t, dot(t, base)}}, t);
}

Cell Cell::line(const Point& through, const IntVec& direction) {
  IntVec t = primitive(direction).first;
  IntVec nu(-t.y, t.x);
  return *from_constraints({{nu, dot(nu, through)}}, {}, t);
}

Cell Cell::segment(const Point& a, const Point& b) {
  if (a == b) return point(a);
  Scalar dx = b.x - a.x, dy = b.y - a.y;
  BigInt l;
  mpz_lcm(l.get_mpz_t(), dx.get_den_mpz_t(), dy.get_den_mpz_t());
  IntVec dir(BigInt(dx.get_num() * (l / dx.get_den())), BigInt(dy.get_num() * (l / dy.get_den())));
  IntVec t = primitive(dir).first;
  IntVec nu(-t.y, t.x);
  return *from_constraints({{nu, dot(nu, a)}}, {{t, dot(t, a)}, {-t, -dot(t, b)}}, t);
}

std::optional<Cell> Cell::from_constraints(std::vector<Constraint> equalities,
                                           std::vector<Constraint> inequalities,
                                           const std::optional<IntVec>& preferred_tangent) {
  std::vector<Constraint> eqs, ineqs;
  for (auto& e : equalities) {
    if (!normalize(e)) {
      if (sgn(e.b) != 0) return std::nullopt;
      continue;
    }
    eqs.push_back(std::move(e));
  }
  for (auto& i : inequalities) {
    if (!normalize(i)) {
      if (sgn(i.b) > 0) return std::nullopt;
      continue;
    }
    ineqs.push_back(std::move(i));
  }

  if (eqs.empty()) {
    // Merge parallel halfplanes and expose opposite pairs as equalities.
    std::map<IntVec, Scalar> tightest;
    for (const auto& i : ineqs) {
      auto [it, fresh] = tightest.emplace(i.a, i.b);
      if (!fresh && i.b > it->second) it->second = i.b;
    }
    for (const auto& [a, b] : tightest) {
      auto opp = tightest.find(-a);
      if (opp == tightest.end()) continue;
      Scalar slack = b + opp->second;
      if (sgn(slack) > 0) return std::nullopt;
      if (sgn(slack) == 0) {
        eqs.push_back({a, b});
        break;
      }
    }
    ineqs.clear();
    for (const auto& [a, b] : tightest) ineqs.push_back({a, b});

    if (eqs.empty()) {
      std::vector<LinIneq> sys;
      for (const auto& i : ineqs) sys.push_back(as_ineq(i, true));
      if (solve_system(sys)) {
        // Full-dimensional: drop redundant halfplanes one at a time.
        std::vector<Constraint> kept = ineqs;
        for (std::size_t idx = 0; idx < kept.size();) {
          std::vector<LinIneq> probe;
          for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != idx) probe.push_back(as_ineq(kept[j]));
          probe.push_back(negated_strict(kept[idx]));
          if (!solve_system(probe)) {
            kept.erase(kept.begin() + static_cast<std::ptrdiff_t>(idx));
          } else {
            ++idx;
          }
        }
        std::sort(kept.begin(), kept.end(),
                  [](const Constraint& l, const Constraint& r) { return angle_less(l.a, r.a); });
        Cell c;
        c.dim_ = 2;
        c.ineq_ = std::move(kept);
        return c;
      }
      sys.clear();
      for (const auto& i : ineqs) sys.push_back(as_ineq(i));
      if (!solve_system(sys)) return std::nullopt;
      // Lower-dimensional: some halfplane is tight on the whole set.
      for (std::size_t idx = 0; idx < ineqs.size() && eqs.empty(); ++idx) {
        std::vector<LinIneq> probe;
        for (std::size_t j = 0; j < ineqs.size(); ++j) probe.push_back(as_ineq(ineqs[j], j == idx));
        if (!solve_system(probe)) eqs.push_back(ineqs[idx]);
      }
      if (eqs.empty()) throw std::logic_error("Cell::from_constraints: no implicit equality found");
    }
  }

  const Constraint base = eqs.front();
  for (std::size_t i = 1; i < eqs.size(); ++i) {
    if (sgn(det2(base.a, eqs[i].a)) != 0) {
      return make_point_cell(solve2x2(base.a, base.b, eqs[i].a, eqs[i].b), eqs, ineqs);
    }
    Scalar expected = base.a == eqs[i].a ? base.b : -base.b;
    if (eqs[i].b != expected) return std::nullopt;
  }

  IntVec t;
  if (preferred_tangent && !preferred_tangent->is_zero() && sgn(dot(base.a, *preferred_tangent)) == 0) {
    t = primitive(*preferred_tangent).first;
  } else {
    t = canonical_direction(IntVec(-base.a.y, base.a.x));
  }
  Point p0 = sgn(base.a.x) != 0 ? Point(base.b / Scalar(base.a.x), Scalar(0))
                                 : Point(Scalar(0), base.b / Scalar(base.a.y));
  Scalar tt(dot(t, t));
  Scalar tp0 = dot(t, p0);
  std::optional<Scalar> lo, hi;
  for (const auto& i : ineqs) {
    Scalar at(dot(i.a, t));
    Scalar ap = dot(i.a, p0);
    int s = sgn(at);
    if (s == 0) {
      if (ap < i.b) return std::nullopt;
      continue;
    }
    Scalar v = tp0 + (i.b - ap) * tt / at;
    if (s > 0) {
      if (!lo || v > *lo) lo = v;
    } else {
      if (!hi || v < *hi) hi = v;
    }
  }
  IntVec nu(-t.y, t.x);
  Scalar beta = dot(nu, p0);
  if (lo && hi) {
    if (*lo > *hi) return std::nullopt;
    if (*lo == *hi) return point(solve2x2(nu, beta, t, *lo));
  }
  Cell c;
  c.dim_ = 1;
  c.eq_ = {{nu, beta}};
  if (lo) c.ineq_.push_back({t, *lo});
  if (hi) c.ineq_.push_back({-t, -*hi});
  c.tangent_ = t;
  return c;
}

// ---------------------------------------------------------------------------
// Queries

bool Cell::contains(const Point& p, bool strict) const {
  for (const auto& e : eq_)
    if (dot(e.a, p) != e.b) return false;
  for (const auto& i : ineq_) {
    Scalar v = dot(i.a, p);
    if (strict ? !(v > i.b) : !(v >= i.b)) return false;
  }
  return true;
}

Point Cell::as_point() const {
  if (dim_ != 0) throw std::logic_error("Cell::as_point on a cell of positive dimension");
  return {eq_[0].b, eq_[1].b};
}

std::optional<Scalar> Cell::lower_bound() const {
  for (const auto& i : ineq_)
    if (i.a == *tangent_) return i.b;
  return std::nullopt;
}

std::optional<Scalar> Cell::upper_bound() const {
  for (const auto& i : ineq_)
    if (i.a == -*tangent_) return -i.b;
  return std::nullopt;
}

Point Cell::point_at(const Scalar& value) const {
  if (dim_ != 1) throw std::logic_error("Cell::point_at needs a 1-dimensional cell");
  return solve2x2(eq_[0].a, eq_[0].b, *tangent_, value);
}

std::optional<Point> Cell::start() const {
  if (dim_ == 0) return as_point();
  if (dim_ != 1) return std::nullopt;
  auto lo = lower_bound();
  if (!lo) return std::nullopt;
  return point_at(*lo);
}

std::optional<Point> Cell::end() const {
  if (dim_ == 0) return as_point();
  if (dim_ != 1) return std::nullopt;
  auto hi = upper_bound();
  if (!hi) return std::nullopt;
  return point_at(*hi);
}

Point Cell::interior_point() const {
  if (dim_ == 0) return as_point();
  if (dim_ == 1) {
    auto lo = lower_bound();
    auto hi = upper_bound();
    Scalar tt(dot(*tangent_, *tangent_));
    if (lo && hi) return point_at((*lo + *hi) / 2);
    if (lo) return point_at(*lo + tt);
    if (hi) return point_at(*hi - tt);
    return point_at(Scalar(0));
  }
  std::vector<LinIneq> sys;
  for (const auto& i : ineq_) sys.push_back(as_ineq(i, true));
  return *solve_system(sys);
}

bool Cell::same_set(const Cell& other) const {
  if (dim_ != other.dim_) return false;
  auto covers = [](const Cell& a, const Cell& b) {
    for (const auto& e : b.eq_) {
      if (!implies(a, e) || !implies(a, Constraint{-e.a, -e.b})) return false;
    }
    for (const auto& i : b.ineq_)
      if (!implies(a, i)) return false;
    return true;
  };
  return covers(*this, other) && covers(other, *this);
}

std::ostream& operator<<(std::ostream& os, const Cell& c) {
  os << "Cell{dim " << c.dim();
  for (const auto& e : c.equalities()) os << ", " << e.a << ".x = " << e.b.get_str();
  for (const auto& i : c.inequalities()) os << ", " << i.a << ".x >= " << i.b.get_str();
  if (c.tangent()) os << ", t " << *c.tangent();
  return os << "}";
}

// ---------------------------------------------------------------------------
// Operations

std::optional<Intersection> intersect(const Cell& c1, const Cell& c2) {
  std::vector<Constraint> eqs = c1.equalities();
  eqs.insert(eqs.end(), c2.equalities().begin(), c2.equalities().end());
  std::vector<Constraint> ineqs = c1.inequalities();
  ineqs.insert(ineqs.end(), c2.inequalities().begin(), c2.inequalities().end());
  auto pref = c1.tangent() ? c1.tangent() : c2.tangent();
  auto cell = Cell::from_constraints(std::move(eqs), std::move(ineqs), pref);
  if (!cell) return std::nullopt;
  bool transversal = true;
  if (c1.dim() == 1 && c2.dim() == 1) transversal = sgn(det2(*c1.tangent(), *c2.tangent())) != 0;
  return Intersection{std::move(*cell), transversal};
}

Cell sweep(const Cell& c, const IntVec& d) {
  if (d.is_zero()) throw ZeroVector("sweep direction is zero");
  if (c.dim() == 0) return Cell::ray(c.as_point(), -d);
  if (c.dim() == 2) throw DegenerateSweep("cannot sweep a 2-dimensional cell");

  const Constraint& line = c.equalities().front();
  const IntVec& t = *c.tangent();
  BigInt nd = dot(line.a, d);
  if (sgn(nd) == 0) throw DegenerateSweep("direction is parallel to the cell");

  std::vector<Constraint> ineqs;
  // Side of the supporting line the sweep moves into.
  if (sgn(nd) > 0) ineqs.push_back({-line.a, -line.b});
  else ineqs.push_back(line);

  // Endpoints become boundary lines parallel to d.
  IntVec w(-d.y, d.x);
  int wt = sgn(dot(w, t));
  if (auto lo = c.lower_bound()) {
    Scalar wv = dot(w, c.point_at(*lo));
    ineqs.push_back(wt > 0 ? Constraint{w, wv} : Constraint{-w, -wv});
  }
  if (auto hi = c.upper_bound()) {
    Scalar wv = dot(w, c.point_at(*hi));
    ineqs.push_back(wt > 0 ? Constraint{-w, -wv} : Constraint{w, wv});
  }
  return *Cell::from_constraints({}, std::move(ineqs));
}

std::vector<Crossing> segment_crossings(const Point& a, const Point& b, const Cell& c) {
  if (c.dim() != 1) throw std::invalid_argument("segment_crossings needs a 1-dimensional cell");
  const Constraint& line = c.equalities().front();
  const IntVec& t = *c.tangent();
  Scalar fa = dot(line.a, a) - line.b;
  Scalar fb = dot(line.a, b) - line.b;
  if (sgn(fa) == 0 && c.contains(a, false)) throw NonGenericPath("path endpoint lies on a wall");
  if (sgn(fb) == 0 && c.contains(b, false)) throw NonGenericPath("path endpoint lies on a wall");

  if (sgn(fa) == 0 && sgn(fb) == 0) {
    Scalar va = dot(t, a), vb = dot(t, b);
    Scalar smin = std::min(va, vb), smax = std::max(va, vb);
    auto lo = c.lower_bound();
    auto hi = c.upper_bound();
    bool disjoint = (lo && smax < *lo) || (hi && smin > *hi);
    if (!disjoint) throw NonGenericPath("path runs along a wall");
    return {};
  }
  if (sgn(fa) * sgn(fb) >= 0) return {};

  Scalar tau = fa / (fa - fb);
  Point p(a.x + tau * (b.x - a.x), a.y + tau * (b.y - a.y));
  Scalar v = dot(t, p);
  auto lo = c.lower_bound();
  auto hi = c.upper_bound();
  if ((lo && v < *lo) || (hi && v > *hi)) return {};
  if ((lo && v == *lo) || (hi && v == *hi)) throw NonGenericPath("path passes through the end of a wall");
  return {Crossing{tau, p}};
}

}  // namespace tropscat
