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

// Exact rational geometry in the plane. Cells are convex polyhedral sets
// kept in H-representation; nothing here ever touches floating point.

#include <gmpxx.h>

#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace tropscat {

using BigInt = mpz_class;
using Scalar = mpq_class;

/// Canonical "num/den" text form (denominator always present).
std::string to_string(const Scalar& s);
/// Accepts "num/den" or a plain integer; result is in lowest terms.
Scalar parse_scalar(const std::string& text);

struct IntVec {
  BigInt x;
  BigInt y;

  IntVec() = default;
  IntVec(BigInt x_, BigInt y_) : x(std::move(x_)), y(std::move(y_)) {}
  IntVec(long x_, long y_) : x(x_), y(y_) {}

  bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0; }
  IntVec operator-() const { return {-x, -y}; }
  friend IntVec operator+(const IntVec& a, const IntVec& b) { return {a.x + b.x, a.y + b.y}; }
  friend IntVec operator-(const IntVec& a, const IntVec& b) { return {a.x - b.x, a.y - b.y}; }
  friend IntVec operator*(const BigInt& k, const IntVec& v) { return {k * v.x, k * v.y}; }
  friend bool operator==(const IntVec& a, const IntVec& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const IntVec& a, const IntVec& b) { return !(a == b); }
  friend bool operator<(const IntVec& a, const IntVec& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

struct Point {
  Scalar x;
  Scalar y;

  Point() = default;
  Point(Scalar x_, Scalar y_) : x(std::move(x_)), y(std::move(y_)) {
    x.canonicalize();
    y.canonicalize();
  }
  Point(long x_, long y_) : x(x_), y(y_) {}

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b) {
    return a.x != b.x ? a.x < b.x : a.y < b.y;
  }
};

std::ostream& operator<<(std::ostream& os, const IntVec& v);
std::ostream& operator<<(std::ostream& os, const Point& p);

BigInt det2(const IntVec& v, const IntVec& w);
BigInt dot(const IntVec& v, const IntVec& w);
Scalar dot(const IntVec& a, const Point& p);

/// Splits v = k * v_hat with v_hat primitive and k > 0. Throws ZeroVector.
std::pair<IntVec, BigInt> primitive(const IntVec& v);

/// Counterclockwise angular order starting at the positive x-axis.
bool angle_less(const IntVec& a, const IntVec& b);

/// One linear constraint <a, x> (= or >=) b.
struct Constraint {
  IntVec a;
  Scalar b;

  friend bool operator==(const Constraint& l, const Constraint& r) { return l.a == r.a && l.b == r.b; }
  bool satisfied_by(const Point& p) const { return dot(a, p) >= b; }
};

/// A nonempty convex rational polyhedron of dimension 0, 1 or 2.
///
/// Canonical forms:
///  - dim 0: equalities x = px, y = py; no inequalities.
///  - dim 1: one equality <nu, x> = beta with nu the primitive
///    counterclockwise normal of the oriented tangent t, plus at most
///    two inequalities <t, x> >= lo and <-t, x> >= -hi.
///  - dim 2: irredundant inequalities with primitive normals, sorted by
///    normal angle.
class Cell {
 public:
  static Cell full_plane();
  static Cell point(const Point& p);
  static Cell ray(const Point& base, const IntVec& direction);
  static Cell line(const Point& through, const IntVec& direction);
  static Cell segment(const Point& a, const Point& b);

  /// Canonicalizes an arbitrary constraint system; nullopt when empty.
  /// The preferred tangent orients a 1-dimensional result when parallel.
  static std::optional<Cell> from_constraints(std::vector<Constraint> equalities,
                                              std::vector<Constraint> inequalities,
                                              const std::optional<IntVec>& preferred_tangent = {});

  int dim() const { return dim_; }
  const std::vector<Constraint>& equalities() const { return eq_; }
  const std::vector<Constraint>& inequalities() const { return ineq_; }
  /// Oriented primitive tangent; set iff dim() == 1.
  const std::optional<IntVec>& tangent() const { return tangent_; }

  bool contains(const Point& p, bool strict) const;

  // dim-0 accessor
  Point as_point() const;

  // dim-1 accessors: bounds on <t, x> along the tangent.
  std::optional<Scalar> lower_bound() const;
  std::optional<Scalar> upper_bound() const;
  /// Point of the supporting line with <t, x> = value.
  Point point_at(const Scalar& value) const;
  /// Start point of a ray / segment (the lower endpoint), if any.
  std::optional<Point> start() const;
  std::optional<Point> end() const;

  /// Some point of the relative interior.
  Point interior_point() const;

  /// Same point set (orientation of 1-dimensional cells ignored).
  bool same_set(const Cell& other) const;

  friend bool operator==(const Cell& a, const Cell& b) {
    return a.dim_ == b.dim_ && a.eq_ == b.eq_ && a.ineq_ == b.ineq_ && a.tangent_ == b.tangent_;
  }

 private:
  Cell() = default;

  int dim_ = 2;
  std::vector<Constraint> eq_;
  std::vector<Constraint> ineq_;
  std::optional<IntVec> tangent_;
};

std::ostream& operator<<(std::ostream& os, const Cell& c);

struct Intersection {
  Cell cell;
  bool transversal;
};

/// Intersection of two cells; nullopt when empty. Transversality refers to
/// the affine hulls: two 1-dimensional hulls are transversal iff their
/// tangents are independent, anything meeting a 0- or 2-dimensional hull is.
std::optional<Intersection> intersect(const Cell& c1, const Cell& c2);

/// The cell c - R_{>=0} d. Throws DegenerateSweep when d is parallel to the
/// affine hull of c (or c is 2-dimensional), ZeroVector when d = 0.
Cell sweep(const Cell& c, const IntVec& d);

inline bool contains(const Cell& c, const Point& p, bool strict) { return c.contains(p, strict); }

struct Crossing {
  Scalar time;
  Point point;
};

/// Parameters in (0,1) where the open segment a->b crosses the 1-dimensional
/// cell c, ascending. Throws NonGenericPath on tangential contact, on
/// passing through an endpoint of c, or when a or b lies on c.
std::vector<Crossing> segment_crossings(const Point& a, const Point& b, const Cell& c);

}  // namespace tropscat
