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

// The monoid of disk classes, the ring C[P] (x) R_n with R_n = C[u_1..u_n]/(u_i^2),
// the tropical Lie algebra of vector fields z^m d_n (n orthogonal to m-bar),
// and the automorphisms exp(+-ad) it generates.

#include <bit>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "tropscat/geom2d.hpp"

namespace tropscat {

/// Complete fan in the plane, given by its primitive ray generators in
/// counterclockwise order (any cyclic rotation accepted).
class Fan {
 public:
  explicit Fan(std::vector<IntVec> rays);

  std::size_t size() const { return rays_.size(); }
  const IntVec& ray(std::size_t i) const { return rays_.at(i); }
  const std::vector<IntVec>& rays() const { return rays_; }

  /// "a", "b", ... ; "r26", "r27", ... past the alphabet.
  static std::string label(std::size_t i);
  /// Inverse of label(); throws ParseError.
  static std::size_t parse_label(const std::string& s);

  friend bool operator==(const Fan& a, const Fan& b) { return a.rays_ == b.rays_; }

 private:
  std::vector<IntVec> rays_;
};

Fan projective_plane_fan();   // (1,0), (0,1), (-1,-1)
Fan hirzebruch_f1_fan();      // (0,1), (-1,0), (0,-1), (1,1)

/// Subset of {1..63} as a bitmask; bit i-1 stands for u_i.
class MarkSet {
 public:
  constexpr MarkSet() = default;
  static constexpr MarkSet single(int i) { return MarkSet(std::uint64_t{1} << (i - 1)); }
  static constexpr MarkSet from_bits(std::uint64_t bits) { return MarkSet(bits); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  int size() const { return std::popcount(bits_); }
  constexpr bool contains(int i) const { return (bits_ >> (i - 1)) & 1u; }
  constexpr bool disjoint(MarkSet o) const { return (bits_ & o.bits_) == 0; }
  constexpr MarkSet operator|(MarkSet o) const { return MarkSet(bits_ | o.bits_); }
  /// 1-based indices, ascending.
  std::vector<int> indices() const;

  friend constexpr bool operator==(MarkSet a, MarkSet b) { return a.bits_ == b.bits_; }
  friend constexpr bool operator!=(MarkSet a, MarkSet b) { return a.bits_ != b.bits_; }
  friend constexpr bool operator<(MarkSet a, MarkSet b) { return a.bits_ < b.bits_; }

 private:
  constexpr explicit MarkSet(std::uint64_t bits) : bits_(bits) {}
  std::uint64_t bits_ = 0;
};

inline constexpr int kMaxMarks = 63;

/// Element of the free monoid Z_{>=0}^{Sigma(1)}.
class PWeight {
 public:
  PWeight() = default;
  explicit PWeight(std::size_t rays) : coords_(rays) {}
  explicit PWeight(std::vector<BigInt> coords);
  static PWeight unit(std::size_t rays, std::size_t i);

  std::size_t size() const { return coords_.size(); }
  const BigInt& operator[](std::size_t i) const { return coords_.at(i); }
  const std::vector<BigInt>& coords() const { return coords_; }
  bool is_zero() const;

  friend PWeight operator+(const PWeight& a, const PWeight& b);
  friend bool operator==(const PWeight& a, const PWeight& b) { return a.coords_ == b.coords_; }
  friend bool operator<(const PWeight& a, const PWeight& b) { return a.coords_ < b.coords_; }

 private:
  std::vector<BigInt> coords_;
};

/// Boundary class m-bar = sum_rho m_rho * (ray generator).
IntVec theta(const Fan& fan, const PWeight& m);

/// Human-readable monomial such as "z^{e_a+e_b} u1 u2".
std::string monomial_label(const PWeight& m, MarkSet marks);

/// Finite sum of c * z^m * u_I with exact coefficients.
class PotentialElement {
 public:
  using Key = std::pair<PWeight, MarkSet>;
  using Terms = std::map<Key, Scalar>;

  PotentialElement() = default;
  static PotentialElement monomial(const PWeight& m, MarkSet marks, const Scalar& coeff = Scalar(1));
  /// The Hori-Vafa polynomial sum_rho z^{e_rho}.
  static PotentialElement hori_vafa(const Fan& fan);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Scalar coefficient(const PWeight& m, MarkSet marks) const;

  void add_term(const PWeight& m, MarkSet marks, const Scalar& coeff);
  PotentialElement& operator+=(const PotentialElement& o);
  PotentialElement& operator-=(const PotentialElement& o);
  PotentialElement scaled(const Scalar& c) const;
  /// Set every u_i to zero.
  PotentialElement without_marks() const;

  friend PotentialElement operator+(PotentialElement a, const PotentialElement& b) { return a += b; }
  friend PotentialElement operator-(PotentialElement a, const PotentialElement& b) { return a -= b; }
  /// u_I * u_J vanishes when I and J overlap.
  friend PotentialElement operator*(const PotentialElement& a, const PotentialElement& b);
  friend bool operator==(const PotentialElement& a, const PotentialElement& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const PotentialElement& a, const PotentialElement& b) { return !(a == b); }

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const PotentialElement& f);

/// coeff * z^m * d_n * u_marks with <n, m-bar> = 0 and m != 0.
struct LieTerm {
  Scalar coeff;
  PWeight m;
  IntVec n;
  MarkSet marks;
};

class LieElement {
 public:
  LieElement() = default;
  /// Single term; throws InvalidLieTerm unless <n, theta(m)> = 0 and m != 0.
  static LieElement term(const Fan& fan, const Scalar& coeff, const PWeight& m, const IntVec& n, MarkSet marks);

  const std::vector<LieTerm>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }

  /// Appends the terms of o (each already validated).
  LieElement& operator+=(const LieElement& o);
  LieElement scaled(const Scalar& c) const;

  /// Collect terms with equal (m, marks) into one rational vector field;
  /// two elements are equal as Lie algebra elements iff these agree.
  std::map<std::pair<PWeight, MarkSet>, std::pair<Scalar, Scalar>> normalized() const;
  bool is_zero() const { return normalized().empty(); }
  friend bool equivalent(const LieElement& a, const LieElement& b) { return a.normalized() == b.normalized(); }

 private:
  friend LieElement bracket(const Fan& fan, const LieElement& h1, const LieElement& h2);
  std::vector<LieTerm> terms_;
};

std::ostream& operator<<(std::ostream& os, const LieElement& h);

/// [z^m d_n, z^m' d_n'] = z^{m+m'} d_{<m-bar',n> n' - <m-bar,n'> n}, extended
/// bilinearly over R_n.
LieElement bracket(const Fan& fan, const LieElement& h1, const LieElement& h2);

/// The derivation D(f) = sum c z^m <n, m-bar_f> u_I * f of one Lie element.
PotentialElement derivation_apply(const Fan& fan, const LieElement& h, const PotentialElement& f);

/// exp(sign * D)(f). Throws NonNilpotent if a term of h has no marks.
PotentialElement exp_apply(const Fan& fan, const LieElement& log_theta, const PotentialElement& f, int sign);

/// Primitive clockwise rotation (t2, -t1) of a wall tangent.
IntVec clockwise_normal(const IntVec& t);

}  // namespace tropscat
