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

// Seeded generators shared by the property tests and the acceptance suite.

#include <random>
#include <vector>

#include "tropscat/errors.hpp"
#include "tropscat/families.hpp"
#include "tropscat/scattering.hpp"

namespace tropscat::testing {

inline Scalar random_scalar(std::mt19937_64& rng, long range = 20, long max_den = 9) {
  std::uniform_int_distribution<long> num(-range * max_den, range * max_den);
  std::uniform_int_distribution<long> den(1, max_den);
  Scalar s(num(rng), den(rng));
  s.canonicalize();
  return s;
}

inline Point random_point(std::mt19937_64& rng, long range = 20) {
  Scalar x = random_scalar(rng, range);
  Scalar y = random_scalar(rng, range);
  return {x, y};
}

inline IntVec random_nonzero(std::mt19937_64& rng, long range = 4) {
  std::uniform_int_distribution<long> c(-range, range);
  for (;;) {
    IntVec v(c(rng), c(rng));
    if (sgn(v.x) != 0 || sgn(v.y) != 0) return v;
  }
}

inline IntVec random_primitive(std::mt19937_64& rng, long range = 4) {
  return primitive(random_nonzero(rng, range)).first;
}

/// Complete fan with the given number of rays: draws primitive directions
/// until the sorted set has no gap of angle >= pi.
inline Fan random_fan(std::mt19937_64& rng, std::size_t rays) {
  for (;;) {
    std::vector<IntVec> v;
    while (v.size() < rays) {
      IntVec r = random_primitive(rng, 3);
      bool dup = false;
      for (const auto& w : v) dup = dup || (w == r);
      if (!dup) v.push_back(r);
    }
    std::sort(v.begin(), v.end(), [](const IntVec& a, const IntVec& b) { return angle_less(a, b); });
    try {
      return Fan(v);
    } catch (const InvalidFan&) {
    }
  }
}

inline PWeight random_weight(std::mt19937_64& rng, std::size_t rays, long max = 2) {
  std::uniform_int_distribution<long> c(0, max);
  for (;;) {
    std::vector<BigInt> v;
    for (std::size_t i = 0; i < rays; ++i) v.emplace_back(c(rng));
    PWeight m(std::move(v));
    if (!m.is_zero()) return m;
  }
}

inline MarkSet random_marks(std::mt19937_64& rng, int n, bool allow_empty) {
  std::uniform_int_distribution<std::uint64_t> c(allow_empty ? 0 : 1, (std::uint64_t{1} << n) - 1);
  return MarkSet::from_bits(c(rng));
}

/// One term c z^m d_n u_I with n a random multiple of the normal to m-bar.
inline LieElement random_lie_term(std::mt19937_64& rng, const Fan& fan, int n_marks, bool allow_empty_marks = false) {
  PWeight m = random_weight(rng, fan.size());
  IntVec mbar = theta(fan, m);
  IntVec n;
  if (sgn(mbar.x) == 0 && sgn(mbar.y) == 0) {
    n = random_nonzero(rng, 3);
  } else {
    std::uniform_int_distribution<long> k(-3, 3);
    long c = k(rng);
    if (c == 0) c = 1;
    IntVec normal = primitive(IntVec(BigInt(-mbar.y), mbar.x)).first;
    n = IntVec(BigInt(c * normal.x), BigInt(c * normal.y));
  }
  Scalar coeff;
  while (sgn(coeff) == 0) coeff = random_scalar(rng, 3, 4);
  return LieElement::term(fan, coeff, m, n, random_marks(rng, n_marks, allow_empty_marks));
}

inline LieElement random_lie(std::mt19937_64& rng, const Fan& fan, int n_marks, int max_terms = 3) {
  std::uniform_int_distribution<int> count(1, max_terms);
  LieElement h;
  for (int i = count(rng); i > 0; --i) h += random_lie_term(rng, fan, n_marks);
  return h;
}

inline PotentialElement random_potential(std::mt19937_64& rng, const Fan& fan, int n_marks, int max_terms = 4) {
  std::uniform_int_distribution<int> count(1, max_terms);
  PotentialElement f;
  for (int i = count(rng); i > 0; --i)
    f.add_term(random_weight(rng, fan.size()), random_marks(rng, n_marks, true), random_scalar(rng, 3, 4));
  return f;
}

/// Marked points in general position: integer sevenths nudged by perturb(),
/// redrawn until enumeration succeeds.
inline std::vector<Point> random_configuration(const Fan& fan, std::size_t n, std::mt19937_64& rng,
                                               FamilySet* out = nullptr) {
  std::uniform_int_distribution<long> c(-40, 40);
  for (;;) {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < n; ++i) pts.push_back(Point(Scalar(c(rng), 7), Scalar(c(rng), 7)));
    pts = perturb(pts, rng());
    try {
      FamilySet fs = enumerate_families(fan, pts);
      if (out) *out = std::move(fs);
      return pts;
    } catch (const NonGenericConfiguration&) {
    }
  }
}

/// Query point with denominator 997 in [-range, range]^2 avoiding walls and
/// region boundaries.
inline Point random_query(const FamilySet& fs, std::mt19937_64& rng, long range = 12) {
  std::uniform_int_distribution<long> c(-range * 997, range * 997);
  for (;;) {
    Point q(Scalar(c(rng), 997), Scalar(c(rng), 997));
    try {
      potential_at(fs, q);
      return q;
    } catch (const NonGenericQuery&) {
    }
  }
}

}  // namespace tropscat::testing
