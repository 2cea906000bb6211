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

// The scattering diagram swept out by Maslov index 0 disks, path-ordered
// products of its wall-crossing automorphisms, and executable checks of
// consistency around joints and of wall-crossing for W_n.

#include <cstddef>
#include <span>
#include <vector>

#include "tropscat/families.hpp"

namespace tropscat {

struct Wall {
  /// Ray with tangent t = primitive(-mbar).
  Cell support;
  PWeight m;
  IntVec n;
  /// Single term k * Mult * z^m d_n u_I.
  LieElement log_theta;
  Tree source_tree;
};

struct Joint {
  Point point;
  std::vector<std::size_t> walls;
};

struct Diagram {
  Fan fan;
  std::vector<Wall> walls;
  std::vector<Joint> joints;
  std::vector<Point> marked_points;
};

/// Which side of the wall tangent the normal n points to. Only the
/// clockwise choice is correct; the other exists as a negative control.
enum class NormalConvention { Clockwise, Counterclockwise };

Diagram build_diagram(const FamilySet& fs, NormalConvention convention = NormalConvention::Clockwise);

/// Recomputes the joints of a diagram from its walls and marked points.
void recompute_joints(Diagram& d);

/// Copy of d without wall `index`, joints recomputed.
Diagram without_wall(const Diagram& d, std::size_t index);

/// Applies the wall-crossing automorphisms met along the polyline, in order,
/// with sign +1 when (wall tangent, direction of travel) is positively
/// oriented. Throws NonGenericPath when the path touches Sing(D), a marked
/// point, or starts/ends on a wall.
PotentialElement path_ordered_apply(const Diagram& d, std::span<const Point> path, const PotentialElement& f);

/// Composite automorphism of a small counterclockwise loop around the joint,
/// evaluated on every generator z^{e_rho}; true iff all are fixed.
bool check_joint_consistency(const Diagram& d, std::size_t joint_index);

/// Polyline from q to q2 avoiding Sing(D): the straight segment if it is
/// generic, otherwise a two-leg detour through a deterministic waypoint.
/// Throws NonGenericPath when no candidate works.
std::vector<Point> generic_path(const Diagram& d, const Point& q, const Point& q2);

/// W_n(q2) == Theta_gamma(W_n(q)) with both sides computed independently.
bool check_wall_crossing(const FamilySet& fs, const Diagram& d, const Point& q, const Point& q2);
bool check_wall_crossing(const Fan& fan, std::span<const Point> points, const Point& q, const Point& q2);

}  // namespace tropscat
