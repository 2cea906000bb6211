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

#include "tropscat/families.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_set>

#include "tropscat/errors.hpp"

namespace tropscat {

namespace {

struct Candidate {
  enum class Rule { MarkInside, WallWall, WallRegion };
  Rule rule;
  std::size_t a;  // maslov-2 index for MarkInside, maslov-0 index otherwise
  std::size_t b;  // mark index for MarkInside, maslov-0 / maslov-2 index otherwise
};

std::string describe(const Point& p) {
  std::ostringstream os;
  os << "(" << to_string(p.x) << ", " << to_string(p.y) << ")";
  return os.str();
}

DiskFamily make_family(const Fan& fan, Tree tree, Cell locus) {
  TreeStats s = stats(fan, tree);
  return DiskFamily{std::move(tree), std::move(s), std::move(locus)};
}

class Enumerator {
 public:
  Enumerator(const Fan& fan, std::span<const Point> points) : fan_(fan), points_(points.begin(), points.end()) {}

  FamilySet run(unsigned threads) {
    if (points_.size() > static_cast<std::size_t>(kMaxMarks)) {
      throw std::invalid_argument("at most 63 marked points are supported");
    }
    for (std::size_t i = 0; i < points_.size(); ++i)
      for (std::size_t j = i + 1; j < points_.size(); ++j)
        if (points_[i] == points_[j])
          throw NonGenericConfiguration("marked points " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                        " coincide at " + describe(points_[i]));

    for (std::size_t r = 0; r < fan_.size(); ++r) accept(make_family(fan_, Tree::leaf(r), Cell::full_plane()));

    std::size_t new0 = 0, new2 = 0;
    while (true) {
      auto cands = candidates(new0, new2);
      new0 = mi0_.size();
      new2 = mi2_.size();
      auto produced = evaluate_all(cands, threads);
      std::vector<DiskFamily> fresh;
      for (auto& f : produced)
        if (f && seen_.insert(f->tree).second) fresh.push_back(std::move(*f));
      if (fresh.empty()) break;
      std::sort(fresh.begin(), fresh.end(), [](const DiskFamily& l, const DiskFamily& r) { return l.tree < r.tree; });
      for (auto& f : fresh) (f.stats.maslov == 0 ? mi0_ : mi2_).push_back(std::move(f));
    }

    check_marks_off_walls();
    auto by_tree = [](const DiskFamily& l, const DiskFamily& r) { return l.tree < r.tree; };
    std::sort(mi0_.begin(), mi0_.end(), by_tree);
    std::sort(mi2_.begin(), mi2_.end(), by_tree);
    return FamilySet{fan_, points_, std::move(mi0_), std::move(mi2_)};
  }

 private:
  void accept(DiskFamily f) {
    seen_.insert(f.tree);
    (f.stats.maslov == 0 ? mi0_ : mi2_).push_back(std::move(f));
  }

  // Every pair (or family/mark combination) involving at least one family
  // from the latest generation.
  std::vector<Candidate> candidates(std::size_t new0, std::size_t new2) const {
    std::vector<Candidate> out;
    const int n = static_cast<int>(points_.size());
    for (std::size_t b = new2; b < mi2_.size(); ++b)
      for (int i = 1; i <= n; ++i)
        if (!mi2_[b].stats.marks.contains(i)) out.push_back({Candidate::Rule::MarkInside, b, static_cast<std::size_t>(i)});
    for (std::size_t b = new0; b < mi0_.size(); ++b)
      for (std::size_t a = 0; a < b; ++a)
        if (mi0_[a].stats.marks.disjoint(mi0_[b].stats.marks)) out.push_back({Candidate::Rule::WallWall, a, b});
    for (std::size_t a = 0; a < mi0_.size(); ++a)
      for (std::size_t b = 0; b < mi2_.size(); ++b) {
        if (a < new0 && b < new2) continue;
        if (mi0_[a].stats.marks.disjoint(mi2_[b].stats.marks)) out.push_back({Candidate::Rule::WallRegion, a, b});
      }
    return out;
  }

  std::vector<std::optional<DiskFamily>> evaluate_all(const std::vector<Candidate>& cands, unsigned threads) const {
    std::vector<std::optional<DiskFamily>> results(cands.size());
    std::vector<std::exception_ptr> errors(cands.size());
    auto work = [&](std::size_t i) {
      try {
        results[i] = evaluate(cands[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (threads <= 1 || cands.size() < 64) {
      for (std::size_t i = 0; i < cands.size(); ++i) work(i);
    } else {
      std::atomic<std::size_t> next{0};
      std::vector<std::jthread> pool;
      for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
          for (std::size_t i = next++; i < cands.size(); i = next++) work(i);
        });
    }
    // Report the first failure in candidate order so errors are schedule-independent.
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    return results;
  }

  std::optional<DiskFamily> evaluate(const Candidate& c) const {
    switch (c.rule) {
      case Candidate::Rule::MarkInside: return mark_inside(mi2_[c.a], static_cast<int>(c.b));
      case Candidate::Rule::WallWall: return wall_wall(mi0_[c.a], mi0_[c.b]);
      case Candidate::Rule::WallRegion: return wall_region(mi0_[c.a], mi2_[c.b]);
    }
    return std::nullopt;
  }

  std::optional<DiskFamily> mark_inside(const DiskFamily& f, int mark) const {
    const Point& p = points_[static_cast<std::size_t>(mark - 1)];
    if (!f.locus.contains(p, false)) return std::nullopt;
    if (!f.locus.contains(p, true))
      throw NonGenericConfiguration("marked point " + std::to_string(mark) + " at " + describe(p) +
                                    " lies on the boundary of the stop locus of " + f.tree.encoding());
    Tree t = Tree::join(f.tree, Tree::mark(mark));
    return make_family(fan_, std::move(t), sweep(Cell::point(p), f.stats.mbar));
  }

  std::optional<DiskFamily> wall_wall(const DiskFamily& f1, const DiskFamily& f2) const {
    auto meet = intersect(f1.locus, f2.locus);
    if (sgn(det2(f1.stats.mbar, f2.stats.mbar)) == 0) {
      if (meet)
        throw NonGenericConfiguration("walls of " + f1.tree.encoding() + " and " + f2.tree.encoding() +
                                      " overlap along a common line, e.g. at " +
                                      describe(meet->cell.interior_point()));
      return std::nullopt;
    }
    if (!meet) return std::nullopt;
    Point x = meet->cell.as_point();
    if (!f1.locus.contains(x, true) || !f2.locus.contains(x, true))
      throw NonGenericConfiguration("walls of " + f1.tree.encoding() + " and " + f2.tree.encoding() +
                                    " meet at the endpoint " + describe(x));
    Tree t = Tree::join(f1.tree, f2.tree);
    TreeStats s = stats(fan_, t);
    Cell locus = sweep(Cell::point(x), s.mbar);
    return DiskFamily{std::move(t), std::move(s), std::move(locus)};
  }

  std::optional<DiskFamily> wall_region(const DiskFamily& wall, const DiskFamily& region) const {
    if (sgn(det2(wall.stats.mbar, region.stats.mbar)) == 0) return std::nullopt;
    auto meet = intersect(wall.locus, region.locus);
    if (!meet) return std::nullopt;
    if (meet->cell.dim() == 0)
      throw NonGenericConfiguration("wall of " + wall.tree.encoding() + " touches the stop locus of " +
                                    region.tree.encoding() + " only at " + describe(meet->cell.as_point()));
    if (!region.locus.contains(meet->cell.interior_point(), true))
      throw NonGenericConfiguration("wall of " + wall.tree.encoding() + " runs along the boundary of the stop locus of " +
                                    region.tree.encoding() + ", e.g. at " + describe(meet->cell.interior_point()));
    Tree t = Tree::join(wall.tree, region.tree);
    TreeStats s = stats(fan_, t);
    Cell locus = sweep(meet->cell, s.mbar);
    return DiskFamily{std::move(t), std::move(s), std::move(locus)};
  }

  // A marked point may only sit on walls that start there because of it.
  void check_marks_off_walls() const {
    for (const auto& f : mi0_) {
      for (std::size_t j = 0; j < points_.size(); ++j) {
        const Point& p = points_[j];
        if (!f.locus.contains(p, false)) continue;
        const int mark = static_cast<int>(j + 1);
        auto is_this_mark = [&](const Tree& c) { return c.is_mark() && c.index() == j + 1; };
        bool born_here = f.tree.is_join() && (is_this_mark(f.tree.first()) || is_this_mark(f.tree.second())) &&
                         f.locus.start() == p;
        if (!born_here)
          throw NonGenericConfiguration("marked point " + std::to_string(mark) + " at " + describe(p) +
                                        " lies on the wall of " + f.tree.encoding());
      }
    }
  }

  const Fan& fan_;
  std::vector<Point> points_;
  std::vector<DiskFamily> mi0_, mi2_;
  std::unordered_set<Tree, TreeHash> seen_;
};

}  // namespace

FamilySet enumerate_families(const Fan& fan, std::span<const Point> points, EnumerateOptions opts) {
  return Enumerator(fan, points).run(opts.threads);
}

PotentialElement potential_at(const FamilySet& fs, const Point& q) {
  for (const auto& f : fs.maslov0)
    if (f.locus.contains(q, false)) throw NonGenericQuery(describe(q) + " lies on the wall of " + f.tree.encoding());
  PotentialElement w;
  for (const auto& f : fs.maslov2) {
    if (!f.locus.contains(q, false)) continue;
    if (!f.locus.contains(q, true))
      throw NonGenericQuery(describe(q) + " lies on the boundary of the stop locus of " + f.tree.encoding());
    w.add_term(f.stats.m, f.stats.marks, Scalar(f.stats.mult));
  }
  return w;
}

std::vector<Point> perturb(std::span<const Point> points, std::uint64_t seed) {
  static constexpr long kPrimes[] = {7, 11, 13, 17, 19, 23, 29, 31, 37, 41};
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> prime_pick(0, std::size(kPrimes) - 1);
  std::uniform_int_distribution<long> step(1, 5);
  std::bernoulli_distribution negative(0.5);
  auto nudge = [&] {
    long num = step(rng) * (negative(rng) ? -1 : 1);
    BigInt den = BigInt(1000000) * kPrimes[prime_pick(rng)];
    Scalar s(BigInt(num), den);
    s.canonicalize();
    return s;
  };
  std::vector<Point> out;
  out.reserve(points.size());
  for (const auto& p : points) {
    Scalar dx = nudge();
    Scalar dy = nudge();
    out.emplace_back(p.x + dx, p.y + dy);
  }
  return out;
}

}  // namespace tropscat
