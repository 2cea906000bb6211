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

// Brute-force evaluation of W_n(Q) straight from the definition of a tropical
// disk. Shares no code with the family enumeration beyond trees and rings.

#include <bit>
#include <map>
#include <set>
#include <sstream>

#include "tropscat/errors.hpp"
#include "tropscat/families.hpp"

namespace tropscat {

namespace {

// All canonical trees with k unmarked leaves and the given marks.
class TreeCatalog {
 public:
  explicit TreeCatalog(std::size_t rays) : rays_(rays) {}

  const std::vector<Tree>& trees(int k, std::uint64_t marks) {
    auto key = std::make_pair(k, marks);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<Tree> out;
    const int d = std::popcount(marks);
    if (k == 1 && d == 0) {
      for (std::size_t r = 0; r < rays_; ++r) out.insert(Tree::leaf(r));
    } else if (k == 0 && d == 1) {
      out.insert(Tree::mark(std::countr_zero(marks) + 1));
    }
    if (k + d >= 2) {
      // Enumerate the submask of the first child including the empty one.
      for (std::uint64_t sub = marks;; sub = (sub - 1) & marks) {
        for (int k1 = 0; k1 <= k; ++k1) {
          std::uint64_t rest = marks & ~sub;
          int k2 = k - k1;
          if (k1 + std::popcount(sub) == 0 || k2 + std::popcount(rest) == 0) continue;
          const auto left = trees(k1, sub);
          const auto& right = trees(k2, rest);
          for (const auto& a : left)
            for (const auto& b : right) {
              if ((a.is_leaf() && b.is_leaf()) || (a.is_mark() && b.is_mark())) continue;
              out.insert(Tree::join(a, b));
            }
        }
        if (sub == 0) break;
      }
    }
    return memo_[key] = std::vector<Tree>(out.begin(), out.end());
  }

 private:
  std::size_t rays_;
  std::map<std::pair<int, std::uint64_t>, std::vector<Tree>> memo_;
};

enum class SolveResult { Unique, Singular, Inconsistent };

// Gaussian elimination over Q on an augmented square system.
SolveResult solve_linear(std::vector<std::vector<Scalar>>& a, std::vector<Scalar>& x) {
  const std::size_t n = a.size();
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < n && row < n; ++col) {
    std::size_t p = row;
    while (p < n && sgn(a[p][col]) == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[row]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      Scalar f = a[r][col] / a[row][col];
      for (std::size_t c = col; c <= n; ++c) a[r][c] -= f * a[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < n; ++r)
    if (sgn(a[r][n]) != 0) return SolveResult::Inconsistent;
  if (row < n) return SolveResult::Singular;
  x.assign(n, Scalar(0));
  for (std::size_t r = 0; r < n; ++r) x[pivot_col[r]] = a[r][n] / a[r][pivot_col[r]];
  return SolveResult::Unique;
}

// Unknowns per internal vertex v: position (x_v, y_v) and length l_v of the
// edge leaving v. The edge leaving v runs from v in direction -mbar_v.
class Realizer {
 public:
  Realizer(const Fan& fan, std::span<const Point> points, const Point& q) : fan_(fan), points_(points), q_(q) {}

  // Returns true when the tree has a disk with stop q.
  bool realizable(const Tree& tree) {
    vertices_.clear();
    index(tree, -1);
    const std::size_t nv = vertices_.size();
    const std::size_t n = 3 * nv;
    std::vector<std::vector<Scalar>> a(n, std::vector<Scalar>(n + 1));
    std::size_t eq = 0;
    auto add_row = [&](std::size_t col_pos, std::size_t coord, std::size_t parent_pos, bool has_parent,
                       const BigInt& mbar_c, std::size_t col_len, const Scalar& rhs) {
      // pos(parent) - pos(v) + l_v * mbar = 0   or   pos(v) - l_v * mbar = Q
      auto& r = a.at(eq++);
      if (has_parent) {
        r[parent_pos + coord] += 1;
        r[col_pos + coord] -= 1;
        r[col_len] += Scalar(mbar_c);
      } else {
        r[col_pos + coord] += 1;
        r[col_len] -= Scalar(mbar_c);
      }
      r[n] = rhs;
    };
    for (std::size_t v = 0; v < nv; ++v) {
      const auto& vx = vertices_[v];
      const std::size_t pos = 3 * v, len = 3 * v + 2;
      const bool has_parent = vx.parent >= 0;
      const std::size_t ppos = has_parent ? 3 * static_cast<std::size_t>(vx.parent) : 0;
      add_row(pos, 0, ppos, has_parent, vx.mbar.x, len, has_parent ? Scalar(0) : q_.x);
      add_row(pos, 1, ppos, has_parent, vx.mbar.y, len, has_parent ? Scalar(0) : q_.y);
      if (vx.mark > 0) {
        const Point& p = points_[static_cast<std::size_t>(vx.mark - 1)];
        a.at(eq)[pos] = 1;
        a.at(eq)[n] = p.x;
        ++eq;
        a.at(eq)[pos + 1] = 1;
        a.at(eq)[n] = p.y;
        ++eq;
      }
    }
    if (eq != n) throw std::logic_error("realization system is not square; tree has Maslov index != 2");

    std::vector<Scalar> x;
    switch (solve_linear(a, x)) {
      case SolveResult::Inconsistent: return false;
      case SolveResult::Singular:
        throw AmbiguousRealization("tree " + tree.encoding() + " has a positive-dimensional family of disks");
      case SolveResult::Unique: break;
    }
    bool positive = true;
    for (std::size_t v = 0; v < nv; ++v) {
      int s = sgn(x[3 * v + 2]);
      if (s == 0) {
        std::ostringstream os;
        os << "stop (" << to_string(q_.x) << ", " << to_string(q_.y) << ") is reached by a degenerate disk of "
           << tree.encoding();
        throw NonGenericQuery(os.str());
      }
      if (s < 0) positive = false;
    }
    return positive;
  }

 private:
  struct Vertex {
    int parent;
    IntVec mbar;
    int mark = 0;
  };

  // Returns m-bar of the edge leaving t.
  IntVec index(const Tree& t, int parent) {
    if (t.is_leaf()) return fan_.ray(t.index());
    if (t.is_mark()) return IntVec(0, 0);
    const int self = static_cast<int>(vertices_.size());
    vertices_.push_back({parent, IntVec(0, 0)});
    IntVec a = index(t.first(), self);
    IntVec b = index(t.second(), self);
    auto& v = vertices_[static_cast<std::size_t>(self)];
    v.mbar = a + b;
    if (t.first().is_mark()) v.mark = static_cast<int>(t.first().index());
    if (t.second().is_mark()) v.mark = static_cast<int>(t.second().index());
    return v.mbar;
  }

  const Fan& fan_;
  std::span<const Point> points_;
  const Point& q_;
  std::vector<Vertex> vertices_;
};

}  // namespace

PotentialElement brute_force_potential(const Fan& fan, std::span<const Point> points, const Point& q) {
  const std::size_t n = points.size();
  if (n > 16) throw std::invalid_argument("brute_force_potential is meant for a handful of points");
  TreeCatalog catalog(fan.size());
  Realizer realizer(fan, points, q);
  PotentialElement w;
  const std::uint64_t all = (std::uint64_t{1} << n) - 1;
  for (std::uint64_t marks = all;; marks = (marks - 1) & all) {
    const int d = std::popcount(marks);
    for (const auto& tree : catalog.trees(d + 1, marks)) {
      TreeStats s = stats(fan, tree);
      if (sgn(s.mult) == 0) continue;
      if (tree.is_leaf() || realizer.realizable(tree)) w.add_term(s.m, s.marks, Scalar(s.mult));
    }
    if (marks == 0) break;
  }
  return w;
}

}  // namespace tropscat
