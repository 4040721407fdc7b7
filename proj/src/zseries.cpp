// Copyright 2026 The sato2d Authors
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

#include <algorithm>

#include "errors.hpp"
#include "opalg.hpp"

namespace sato2d {

namespace {

std::optional<int> reach_top(const ZSeries &z) {
  std::optional<int> top;
  if (!z.terms().empty())
    top = z.terms().begin()->first.s;
  if (!z.exact()) {
    int f = z.floor() - 1;
    if (!top || f > *top)
      top = f;
  }
  return top;
}

std::string pow_str(const char *base, int e) {
  return e == 1 ? std::string(base) : std::string(base) + "^" + std::to_string(e);
}

} // namespace

ZSeries ZSeries::monomial(int i, int s, const QuadElem &c, int floor) {
  ZSeries z(floor);
  z.set(i, s, c);
  return z;
}

void ZSeries::set_floor(int f) {
  floor_ = f;
  std::erase_if(terms_, [f](const auto &kv) { return kv.first.s < f; });
}

QuadElem ZSeries::coeff(int i, int s) const {
  auto it = terms_.find(OpKey{i, s});
  return it == terms_.end() ? QuadElem() : it->second;
}

void ZSeries::set(int i, int s, const QuadElem &c) {
  if (s < floor_)
    return;
  if (c.is_zero())
    terms_.erase(OpKey{i, s});
  else
    terms_.insert_or_assign(OpKey{i, s}, c);
}

void ZSeries::add_to(int i, int s, const QuadElem &c) {
  if (s < floor_ || c.is_zero())
    return;
  auto it = terms_.find(OpKey{i, s});
  if (it == terms_.end()) {
    terms_.emplace(OpKey{i, s}, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

std::optional<OpKey> ZSeries::lead() const {
  if (terms_.empty())
    return std::nullopt;
  return terms_.begin()->first;
}

ZSeries ZSeries::operator-() const {
  ZSeries r(*this);
  for (auto &kv : r.terms_)
    kv.second = -kv.second;
  return r;
}

ZSeries &ZSeries::operator+=(const ZSeries &o) {
  int f = std::max(floor_, o.floor_);
  set_floor(f);
  for (const auto &[k, c] : o.terms_)
    add_to(k.i, k.s, c);
  return *this;
}

ZSeries &ZSeries::operator-=(const ZSeries &o) { return *this += -o; }

ZSeries ZSeries::scaled(const QuadElem &c) const {
  if (c.is_zero())
    return ZSeries(floor_);
  ZSeries r(*this);
  for (auto &kv : r.terms_)
    kv.second *= c;
  return r;
}

ZSeries ZSeries::restricted(int s_lo) const {
  ZSeries r(*this);
  r.set_floor(std::max(floor_, s_lo));
  return r;
}

bool ZSeries::equal_from(const ZSeries &o, int s_lo) const {
  auto a = restricted(s_lo), b = o.restricted(s_lo);
  if (a.terms_.size() != b.terms_.size())
    return false;
  auto it = b.terms_.begin();
  for (const auto &[k, c] : a.terms_) {
    if (!(it->first == k) || it->second != c)
      return false;
    ++it;
  }
  return true;
}

bool ZSeries::operator==(const ZSeries &o) const {
  return floor_ == o.floor_ && equal_from(o, kNoFloor);
}

std::string ZSeries::str(bool z_notation) const {
  std::string out;
  for (const auto &[k, c] : terms_) {
    std::string mono;
    auto join = [&mono](const std::string &piece) {
      mono += mono.empty() ? piece : "*" + piece;
    };
    if (z_notation) {
      if (k.i != 0)
        join(pow_str("z1", -k.i));
      if (k.s != 0)
        join(pow_str("z2", -k.s));
    } else {
      if (k.i != 0)
        join(pow_str("d1", k.i));
      if (k.s != 0)
        join(pow_str("d2", k.s));
    }
    bool neg = c.is_rational() && sgn(c.a()) < 0;
    std::string cs = neg ? (-c).str() : c.str();
    if (!c.is_rational() && sgn(c.a()) != 0 && !mono.empty())
      cs = "(" + cs + ")";
    std::string body = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

ZSeries z_mul(const ZSeries &f, const ZSeries &g) {
  int floor = kNoFloor;
  auto ft = reach_top(f), gt = reach_top(g);
  if (!f.exact() && gt)
    floor = std::max(floor, f.floor() + *gt);
  if (!g.exact() && ft)
    floor = std::max(floor, g.floor() + *ft);
  ZSeries r(floor);
  for (const auto &[a, ca] : f.terms())
    for (const auto &[b, cb] : g.terms()) {
      if (a.s + b.s < floor)
        break;
      r.add_to(a.i + b.i, a.s + b.s, ca * cb);
    }
  return r;
}

ZSeries reduce_mod_x(const EOp &p) {
  int floor = p.floor();
  for (const auto &[k, c] : p.terms())
    if (c.prec() <= 0)
      floor = std::max(floor, k.s + 1);
  ZSeries z(floor);
  for (const auto &[k, c] : p.terms())
    z.add_to(k.i, k.s, c.constant_term());
  return z;
}

EOp lift(const ZSeries &w, const Trunc &t) {
  EOp r(t);
  int floor = w.floor();
  for (const auto &[k, c] : w.terms()) {
    if (k.i < 0)
      throw DomainError("symbol has a negative d1-exponent; it is not an operator");
    if (k.s < t.s_min) {
      floor = std::max(floor, t.s_min);
      r.mark_dropped();
      continue;
    }
    r.set(k.i, k.s, XSeries::constant(c));
  }
  r.set_floor(floor);
  return r;
}

ZSeries act(const ZSeries &w, const EOp &t) {
  // Constant term of d^{a,b} g is a! b! [x1^a x2^b] g.
  int floor = kNoFloor;
  auto wt = reach_top(w);
  std::optional<int> tt;
  if (!t.terms().empty())
    tt = t.terms().begin()->first.s;
  if (!t.exact_in_d2()) {
    tt = std::max(tt.value_or(t.floor() - 1), t.floor() - 1);
    if (wt)
      floor = std::max(floor, t.floor() + *wt);
  }
  if (!w.exact() && tt)
    floor = std::max(floor, w.floor() + *tt);

  std::vector<Rat> fact{Rat(1)};
  auto factorial_of = [&fact](int n) -> Rat {
    while (static_cast<int>(fact.size()) <= n)
      fact.push_back(fact.back() * static_cast<long>(fact.size()));
    return fact[n];
  };

  // First pass: find unknown positions (they raise the floor).
  for (const auto &[wk, wc] : w.terms())
    for (const auto &[tk, g] : t.terms()) {
      if (g.exact())
        continue;
      const int i = wk.i, s = wk.s;
      for (int a = 0; a <= i; ++a) {
        // Smallest b whose Taylor coefficient is unknown.
        int b = std::max(0, g.prec() - a);
        if (s >= 0 && b > s)
          continue;
        floor = std::max(floor, s - b + tk.s + 1);
      }
    }

  ZSeries r(floor);
  for (const auto &[wk, wc] : w.terms())
    for (const auto &[tk, g] : t.terms())
      for (const auto &term : g.terms()) {
        const int a = term.i, b = term.j;
        if (a > wk.i || (wk.s >= 0 && b > wk.s))
          continue;
        const int T = wk.s - b + tk.s;
        if (T < floor)
          continue;
        Rat c = binomial(wk.i, a) * binomial(wk.s, b) * factorial_of(a) * factorial_of(b);
        r.add_to(wk.i - a + tk.i, T, wc * term.c * QuadElem(c));
      }
  return r;
}

} // namespace sato2d
