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

#include "tropscat/trees.hpp"

#include <cctype>
#include <functional>

#include "tropscat/errors.hpp"

namespace tropscat {

namespace {

int rank(Tree::Kind k) {
  switch (k) {
    case Tree::Kind::Leaf: return 0;
    case Tree::Kind::Mark: return 1;
    case Tree::Kind::Join: return 2;
  }
  return 3;
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Tree Tree::leaf(std::size_t ray) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::Leaf;
  n->index = ray;
  n->k = 1;
  n->encoding = "L:" + Fan::label(ray);
  n->hash = std::hash<std::string>{}(n->encoding);
  return Tree(std::move(n));
}

Tree Tree::mark(int index) {
  if (index < 1 || index > kMaxMarks) throw InvalidTree("mark index out of range: " + std::to_string(index));
  auto n = std::make_shared<Node>();
  n->kind = Kind::Mark;
  n->index = static_cast<std::size_t>(index);
  n->marks = MarkSet::single(index);
  n->encoding = "M:" + std::to_string(index);
  n->hash = std::hash<std::string>{}(n->encoding);
  return Tree(std::move(n));
}

Tree Tree::join(const Tree& a, const Tree& b) {
  if (a.is_leaf() && b.is_leaf()) throw ForbiddenJoin("two unmarked leaves cannot meet: " + a.encoding() + ", " + b.encoding());
  if (a.is_mark() && b.is_mark()) throw ForbiddenJoin("two marked points cannot meet: " + a.encoding() + ", " + b.encoding());
  if (!a.marks().disjoint(b.marks())) throw MarkCollision("children share a marked point: " + a.encoding() + ", " + b.encoding());
  const bool swap = compare(b, a) < 0;
  const Tree& lo = swap ? b : a;
  const Tree& hi = swap ? a : b;
  auto n = std::make_shared<Node>();
  n->kind = Kind::Join;
  n->first = std::make_shared<const Tree>(lo);
  n->second = std::make_shared<const Tree>(hi);
  n->k = lo.k() + hi.k();
  n->marks = lo.marks() | hi.marks();
  n->encoding = "J(" + lo.encoding() + ", " + hi.encoding() + ")";
  n->hash = mix(mix(0x4a, lo.hash()), hi.hash());
  return Tree(std::move(n));
}

int compare(const Tree& a, const Tree& b) {
  if (a.node_ == b.node_) return 0;
  int ra = rank(a.kind()), rb = rank(b.kind());
  if (ra != rb) return ra < rb ? -1 : 1;
  if (!a.is_join()) return a.index() == b.index() ? 0 : (a.index() < b.index() ? -1 : 1);
  if (int c = compare(a.first(), b.first()); c != 0) return c;
  return compare(a.second(), b.second());
}

std::ostream& operator<<(std::ostream& os, const Tree& t) { return os << t.encoding(); }

namespace {

class TreeParser {
 public:
  explicit TreeParser(const std::string& s) : s_(s) {}

  Tree parse() {
    Tree t = node();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing characters");
    return t;
  }

 private:
  Tree node() {
    skip_ws();
    if (pos_ + 1 >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == 'J' && s_[pos_ + 1] == '(') {
      pos_ += 2;
      Tree a = node();
      expect(',');
      Tree b = node();
      expect(')');
      return Tree::join(a, b);
    }
    if ((c == 'L' || c == 'M') && s_[pos_ + 1] == ':') {
      pos_ += 2;
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      std::string tok = s_.substr(start, pos_ - start);
      if (tok.empty()) fail("missing label");
      if (c == 'L') return Tree::leaf(Fan::parse_label(tok));
      for (char ch : tok)
        if (!std::isdigit(static_cast<unsigned char>(ch))) fail("bad mark index");
      return Tree::mark(std::stoi(tok));
    }
    fail("expected J(, L: or M:");
  }

  void skip_ws() {
    while (pos_ < s_.size() && s_[pos_] == ' ') ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("tree '" + s_ + "' at " + std::to_string(pos_) + ": " + why);
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

struct Partial {
  PWeight m;
  BigInt mult;
};

Partial accumulate(const Fan& fan, const Tree& t) {
  switch (t.kind()) {
    case Tree::Kind::Leaf:
      if (t.index() >= fan.size()) throw InvalidTree("leaf ray index outside the fan: " + t.encoding());
      return {PWeight::unit(fan.size(), t.index()), BigInt(1)};
    case Tree::Kind::Mark:
      return {PWeight(fan.size()), BigInt(1)};
    case Tree::Kind::Join: {
      Partial a = accumulate(fan, t.first());
      Partial b = accumulate(fan, t.second());
      BigInt mult = a.mult * b.mult;
      if (!t.first().is_mark() && !t.second().is_mark()) {
        BigInt det = det2(theta(fan, a.m), theta(fan, b.m));
        mult *= abs(det);
      }
      return {a.m + b.m, mult};
    }
  }
  throw InvalidTree("unknown node kind");
}

}  // namespace

Tree parse_tree(const std::string& text) { return TreeParser(text).parse(); }

TreeStats stats(const Fan& fan, const Tree& t) {
  if (t.is_mark()) throw InvalidTree("a marked point cannot be the root of a tree");
  Partial p = accumulate(fan, t);
  TreeStats s;
  s.k = t.k();
  s.d = t.d();
  s.marks = t.marks();
  s.m = std::move(p.m);
  s.mbar = theta(fan, s.m);
  s.k_div = s.mbar.is_zero() ? BigInt(0) : primitive(s.mbar).second;
  s.mult = std::move(p.mult);
  s.maslov = t.maslov();
  return s;
}

}  // namespace tropscat
