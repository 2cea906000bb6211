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

// Families of Maslov index 0 and 2 tropical disks through marked points,
// their stop loci, and the pointed potential W_n(Q) they define.

#include <cstdint>
#include <span>
#include <vector>

#include "tropscat/geom2d.hpp"
#include "tropscat/ringalg.hpp"
#include "tropscat/trees.hpp"

namespace tropscat {

struct DiskFamily {
  Tree tree;
  TreeStats stats;
  /// Closure of the set of stops: a ray for Maslov index 0, a region for 2.
  Cell locus;
};

struct FamilySet {
  Fan fan;
  std::vector<Point> points;
  /// Sorted by canonical tree order.
  std::vector<DiskFamily> maslov0;
  std::vector<DiskFamily> maslov2;
};

struct EnumerateOptions {
  /// Worker threads for candidate evaluation; 0 = hardware concurrency,
  /// 1 = serial. The result does not depend on this.
  unsigned threads = 1;
};

/// Closure of the leaf seeds under the three productions
///   (i)   index-2 family + marked point inside its locus   -> index 0
///   (ii)  index-0 + index-0 meeting transversally           -> index 0
///   (iii) index-0 + index-2 overlapping along a ray/segment -> index 2
/// Throws NonGenericConfiguration with a geometric witness when the points
/// sit on a stratum where the count is not locally constant.
FamilySet enumerate_families(const Fan& fan, std::span<const Point> points, EnumerateOptions opts = {});

/// W_n(Q): sum of Mult * z^m * u_I over index-2 families whose locus contains
/// Q in its interior. Throws NonGenericQuery when Q is on a wall or on the
/// boundary of some index-2 locus.
PotentialElement potential_at(const FamilySet& fs, const Point& q);

/// Independent oracle for W_n(Q): enumerates every canonical tree with
/// k = d + 1 and nonzero multiplicity and solves for positive edge lengths
/// directly. Meant for small n.
PotentialElement brute_force_potential(const Fan& fan, std::span<const Point> points, const Point& q);

/// Nudges every coordinate by a rational with denominator 10^6 * p for a
/// small prime p chosen from the seed.
std::vector<Point> perturb(std::span<const Point> points, std::uint64_t seed);

}  // namespace tropscat
