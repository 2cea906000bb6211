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

// Canonical weighted pointed trees: unbounded leaves carry a ray class,
// mark leaves pin a marked point, and binary joins add weights.

#include <cstddef>
#include <memory>
#include <ostream>
#include <string>

#include "tropscat/ringalg.hpp"

namespace tropscat {

class Tree {
 public:
  enum class Kind { Leaf, Mark, Join };

  static Tree leaf(std::size_t ray);
  static Tree mark(int index);
  /// Canonical join; throws ForbiddenJoin (leaf+leaf, mark+mark) or
  /// MarkCollision (children share a marked point).
  static Tree join(const Tree& a, const Tree& b);

  Kind kind() const { return node_->kind; }
  bool is_leaf() const { return kind() == Kind::Leaf; }
  bool is_mark() const { return kind() == Kind::Mark; }
  bool is_join() const { return kind() == Kind::Join; }
  /// Ray index of a leaf or mark index of a mark.
  std::size_t index() const { return node_->index; }
  const Tree& first() const { return *node_->first; }
  const Tree& second() const { return *node_->second; }

  /// Unmarked unbounded leaves.
  int k() const { return node_->k; }
  /// Marked points.
  int d() const { return node_->marks.size(); }
  MarkSet marks() const { return node_->marks; }
  int maslov() const { return 2 * (k() - d()); }

  /// Bracketed text form, e.g. "J(L:a, J(L:b, M:1))".
  const std::string& encoding() const { return node_->encoding; }
  std::size_t hash() const { return node_->hash; }

  /// Total canonical order: Leaf < Mark < Join, then by index / children.
  friend int compare(const Tree& a, const Tree& b);
  friend bool operator==(const Tree& a, const Tree& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Tree& a, const Tree& b) { return compare(a, b) != 0; }
  friend bool operator<(const Tree& a, const Tree& b) { return compare(a, b) < 0; }

 private:
  struct Node {
    Kind kind;
    std::size_t index = 0;
    std::shared_ptr<const Tree> first, second;
    int k = 0;
    MarkSet marks;
    std::string encoding;
    std::size_t hash = 0;
  };
  explicit Tree(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Tree& t);

/// Parses the bracketed encoding back into a canonical tree.
Tree parse_tree(const std::string& text);

struct TreeHash {
  std::size_t operator()(const Tree& t) const { return t.hash(); }
};

struct TreeStats {
  int k = 0;
  int d = 0;
  MarkSet marks;
  PWeight m;
  IntVec mbar;
  /// m-bar = k_div * primitive; 0 when m-bar = 0.
  BigInt k_div;
  /// Product of |det| over joins of two non-mark subtrees.
  BigInt mult;
  int maslov = 0;
};

/// Throws InvalidTree for a bare mark leaf (never a root).
TreeStats stats(const Fan& fan, const Tree& t);

}  // namespace tropscat
