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

#include "tropscat/ringalg.hpp"

#include <algorithm>
#include <sstream>

#include "tropscat/errors.hpp"

namespace tropscat {

// ---------------------------------------------------------------------------
// Fan

namespace {

std::string format_rays(const std::vector<IntVec>& rays) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rays.size(); ++i) os << (i ? ", " : "") << rays[i];
  os << "]";
  return os.str();
}

}  // namespace

Fan::Fan(std::vector<IntVec> rays) : rays_(std::move(rays)) {
  if (rays_.size() < 3) throw InvalidFan("a complete fan needs at least 3 rays");
  for (const auto& r : rays_) {
    if (r.is_zero()) throw InvalidFan("zero ray generator");
    auto [prim, k] = primitive(r);
    if (k != 1) {
      std::ostringstream os;
      os << "ray " << r << " is not primitive; use " << prim;
      throw InvalidFan(os.str());
    }
  }
  // Rotate to start at the smallest angle, then demand strict ccw order.
  auto first = std::min_element(rays_.begin(), rays_.end(), angle_less);
  std::vector<IntVec> rotated(first, rays_.end());
  rotated.insert(rotated.end(), rays_.begin(), first);
  bool sorted = true;
  for (std::size_t i = 0; i + 1 < rotated.size(); ++i)
    if (!angle_less(rotated[i], rotated[i + 1])) sorted = false;
  if (!sorted) {
    std::vector<IntVec> fixed = rays_;
    std::sort(fixed.begin(), fixed.end(), angle_less);
    fixed.erase(std::unique(fixed.begin(), fixed.end()), fixed.end());
    throw InvalidFan("rays " + format_rays(rays_) + " are not in counterclockwise order; try " +
                     format_rays(fixed));
  }
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const IntVec& a = rays_[i];
    const IntVec& b = rays_[(i + 1) % rays_.size()];
    if (sgn(det2(a, b)) <= 0) {
      std::ostringstream os;
      os << "angular gap between " << a << " and " << b << " is not below pi; the fan is not complete";
      throw InvalidFan(os.str());
    }
  }
}

std::string Fan::label(std::size_t i) {
  if (i < 26) return std::string(1, static_cast<char>('a' + i));
  return "r" + std::to_string(i);
}

std::size_t Fan::parse_label(const std::string& s) {
  if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'z') return static_cast<std::size_t>(s[0] - 'a');
  if (s.size() > 1 && s[0] == 'r' && std::all_of(s.begin() + 1, s.end(), ::isdigit)) {
    std::size_t v = std::stoul(s.substr(1));
    if (v >= 26) return v;
  }
  throw ParseError("bad ray label '" + s + "'");
}

Fan projective_plane_fan() { return Fan({{1, 0}, {0, 1}, {-1, -1}}); }
Fan hirzebruch_f1_fan() { return Fan({{0, 1}, {-1, 0}, {0, -1}, {1, 1}}); }

// ---------------------------------------------------------------------------
// MarkSet / PWeight

std::vector<int> MarkSet::indices() const {
  std::vector<int> out;
  for (int i = 1; i <= kMaxMarks; ++i)
    if (contains(i)) out.push_back(i);
  return out;
}

PWeight::PWeight(std::vector<BigInt> coords) : coords_(std::move(coords)) {
  for (const auto& c : coords_)
    if (sgn(c) < 0) throw std::invalid_argument("PWeight entries must be nonnegative");
}

PWeight PWeight::unit(std::size_t rays, std::size_t i) {
  PWeight w(rays);
  w.coords_.at(i) = 1;
  return w;
}

bool PWeight::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& c) { return sgn(c) == 0; });
}

PWeight operator+(const PWeight& a, const PWeight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("PWeight size mismatch");
  PWeight r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.coords_[i] = a.coords_[i] + b.coords_[i];
  return r;
}

IntVec theta(const Fan& fan, const PWeight& m) {
  if (m.size() != fan.size()) throw std::invalid_argument("PWeight does not match the fan");
  IntVec out(0, 0);
  for (std::size_t i = 0; i < m.size(); ++i) {
    out.x += m[i] * fan.ray(i).x;
    out.y += m[i] * fan.ray(i).y;
  }
  return out;
}

std::string monomial_label(const PWeight& m, MarkSet marks) {
  std::ostringstream os;
  bool any = false;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (sgn(m[i]) == 0) continue;
    os << (any ? "+" : "z^{");
    if (m[i] != 1) os << m[i].get_str();
    os << "e_" << Fan::label(i);
    any = true;
  }
  if (any) os << "}";
  for (int i : marks.indices()) {
    os << (any ? " " : "") << "u" << i;
    any = true;
  }
  if (!any) os << "1";
  return os.str();
}

// ---------------------------------------------------------------------------
// PotentialElement

PotentialElement PotentialElement::monomial(const PWeight& m, MarkSet marks, const Scalar& coeff) {
  PotentialElement f;
  f.add_term(m, marks, coeff);
  return f;
}

PotentialElement PotentialElement::hori_vafa(const Fan& fan) {
  PotentialElement f;
  for (std::size_t i = 0; i < fan.size(); ++i) f.add_term(PWeight::unit(fan.size(), i), MarkSet(), Scalar(1));
  return f;
}

Scalar PotentialElement::coefficient(const PWeight& m, MarkSet marks) const {
  auto it = terms_.find({m, marks});
  return it == terms_.end() ? Scalar(0) : it->second;
}

void PotentialElement::add_term(const PWeight& m, MarkSet marks, const Scalar& coeff) {
  if (sgn(coeff) == 0) return;
  auto [it, fresh] = terms_.emplace(Key{m, marks}, coeff);
  if (!fresh) {
    it->second += coeff;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

PotentialElement& PotentialElement::operator+=(const PotentialElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

PotentialElement& PotentialElement::operator-=(const PotentialElement& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
  return *this;
}

PotentialElement PotentialElement::scaled(const Scalar& c) const {
  PotentialElement r;
  for (const auto& [k, v] : terms_) r.add_term(k.first, k.second, v * c);
  return r;
}

PotentialElement PotentialElement::without_marks() const {
  PotentialElement r;
  for (const auto& [k, v] : terms_)
    if (k.second.empty()) r.add_term(k.first, k.second, v);
  return r;
}

PotentialElement operator*(const PotentialElement& a, const PotentialElement& b) {
  PotentialElement r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      if (!ka.second.disjoint(kb.second)) continue;
      r.add_term(ka.first + kb.first, ka.second | kb.second, ca * cb);
    }
  }
  return r;
}

std::ostream& operator<<(std::ostream& os, const PotentialElement& f) {
  if (f.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [k, c] : f.terms()) {
    os << (first ? "" : " + ");
    if (c != 1) os << "(" << c.get_str() << ")";
    os << monomial_label(k.first, k.second);
    first = false;
  }
  return os;
}

// ---------------------------------------------------------------------------
// LieElement

LieElement LieElement::term(const Fan& fan, const Scalar& coeff, const PWeight& m, const IntVec& n, MarkSet marks) {
  if (m.is_zero()) throw InvalidLieTerm("Fourier mode m must be nonzero");
  if (sgn(dot(n, theta(fan, m))) != 0) {
    std::ostringstream os;
    os << "n = " << n << " is not orthogonal to m-bar = " << theta(fan, m);
    throw InvalidLieTerm(os.str());
  }
  LieElement h;
  if (sgn(coeff) != 0 && !n.is_zero()) h.terms_.push_back({coeff, m, n, marks});
  return h;
}

LieElement& LieElement::operator+=(const LieElement& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  return *this;
}

LieElement LieElement::scaled(const Scalar& c) const {
  LieElement r;
  if (sgn(c) == 0) return r;
  r.terms_ = terms_;
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

std::map<std::pair<PWeight, MarkSet>, std::pair<Scalar, Scalar>> LieElement::normalized() const {
  std::map<std::pair<PWeight, MarkSet>, std::pair<Scalar, Scalar>> out;
  for (const auto& t : terms_) {
    auto& v = out[{t.m, t.marks}];
    v.first += t.coeff * Scalar(t.n.x);
    v.second += t.coeff * Scalar(t.n.y);
  }
  std::erase_if(out, [](const auto& kv) { return sgn(kv.second.first) == 0 && sgn(kv.second.second) == 0; });
  return out;
}

std::ostream& operator<<(std::ostream& os, const LieElement& h) {
  if (h.terms().empty()) return os << "0";
  bool first = true;
  for (const auto& t : h.terms()) {
    os << (first ? "" : " + ");
    if (t.coeff != 1) os << "(" << t.coeff.get_str() << ")";
    os << monomial_label(t.m, MarkSet()) << " d_" << t.n;
    for (int i : t.marks.indices()) os << " u" << i;
    first = false;
  }
  return os;
}

LieElement bracket(const Fan& fan, const LieElement& h1, const LieElement& h2) {
  LieElement out;
  for (const auto& a : h1.terms()) {
    IntVec ma = theta(fan, a.m);
    for (const auto& b : h2.terms()) {
      if (!a.marks.disjoint(b.marks)) continue;
      IntVec mb = theta(fan, b.m);
      IntVec n = dot(mb, a.n) * b.n - dot(ma, b.n) * a.n;
      if (n.is_zero()) continue;
      out += LieElement::term(fan, a.coeff * b.coeff, a.m + b.m, n, a.marks | b.marks);
    }
  }
  return out;
}

PotentialElement derivation_apply(const Fan& fan, const LieElement& h, const PotentialElement& f) {
  PotentialElement out;
  for (const auto& t : h.terms()) {
    for (const auto& [key, c] : f.terms()) {
      if (!t.marks.disjoint(key.second)) continue;
      BigInt pairing = dot(t.n, theta(fan, key.first));
      if (sgn(pairing) == 0) continue;
      out.add_term(t.m + key.first, t.marks | key.second, t.coeff * c * Scalar(pairing));
    }
  }
  return out;
}

PotentialElement exp_apply(const Fan& fan, const LieElement& log_theta, const PotentialElement& f, int sign) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("exp_apply sign must be +1 or -1");
  for (const auto& t : log_theta.terms())
    if (t.marks.empty()) throw NonNilpotent("Lie term without u-variables");
  PotentialElement result = f;
  PotentialElement step = f;
  // Every application of D strictly enlarges the mark sets, so this stops
  // after at most kMaxMarks + 1 rounds.
  for (int j = 1; !step.is_zero(); ++j) {
    step = derivation_apply(fan, log_theta, step).scaled(Scalar(sign, j));
    result += step;
  }
  return result;
}

IntVec clockwise_normal(const IntVec& t) {
  if (t.is_zero()) throw ZeroVector("clockwise_normal of (0,0)");
  return primitive(IntVec(t.y, BigInt(-t.x))).first;
}

}  // namespace tropscat
