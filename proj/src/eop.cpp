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
#include <unordered_map>

#include "errors.hpp"
#include "opalg.hpp"

namespace sato2d {

void Trunc::validate() const {
  if (nx < 1)
    throw ConfigError("truncation nx must be at least 1");
  if (n1 < 0)
    throw ConfigError("truncation n1 must be nonnegative");
  if (s_min > s_max)
    throw ConfigError("empty d2 window: s_min > s_max");
}

namespace {

void require_compatible(const Trunc &a, const Trunc &b) {
  if (a.nx != b.nx || a.n1 != b.n1 || a.s_min != b.s_min)
    throw ConfigError("operators carry incompatible truncations");
}

int floor_max(int a, int b) { return std::max(a, b); }

// Highest d2-degree that may carry a nonzero (or unknown) coefficient.
std::optional<int> reach_top(const EOp &p) {
  std::optional<int> top;
  if (!p.terms().empty())
    top = p.terms().begin()->first.s;
  if (!p.exact_in_d2()) {
    int f = p.floor() - 1;
    if (!top || f > *top)
      top = f;
  }
  return top;
}

std::string d_part(int i, int s) {
  std::string out;
  if (i != 0)
    out = i == 1 ? "d1" : "d1^" + std::to_string(i);
  if (s != 0) {
    if (!out.empty())
      out += "*";
    out += s == 1 ? "d2" : "d2^" + std::to_string(s);
  }
  return out;
}

} // namespace

EOp EOp::identity(const Trunc &t) { return monomial(t, 0, 0); }

EOp EOp::monomial(const Trunc &t, int i, int s, const XSeries &c) {
  EOp r(t);
  if (i < 0)
    throw DomainError("negative d1 exponent in an operator");
  if (i > t.n1)
    throw ConfigError("d1 exponent " + std::to_string(i) + " exceeds the window n1=" +
                      std::to_string(t.n1));
  if (s < t.s_min)
    throw ConfigError("d2 exponent " + std::to_string(s) + " below the window s_min=" +
                      std::to_string(t.s_min));
  if (!c.is_exact_zero())
    r.terms_.emplace(OpKey{i, s}, c);
  return r;
}

bool EOp::exact() const {
  if (floor_ != kNoFloor || dropped_)
    return false;
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto &kv) { return kv.second.exact(); });
}

int EOp::prec() const {
  int p = kExact;
  for (const auto &kv : terms_)
    p = prec_min(p, kv.second.prec());
  return p;
}

XSeries EOp::coeff(int i, int s) const {
  auto it = terms_.find(OpKey{i, s});
  if (it != terms_.end())
    return it->second;
  if (!known(i, s))
    return XSeries::zero(0);
  return XSeries();
}

void EOp::set(int i, int s, XSeries c) {
  if (c.is_exact_zero())
    terms_.erase(OpKey{i, s});
  else
    terms_.insert_or_assign(OpKey{i, s}, std::move(c));
}

void EOp::add_to(int i, int s, const XSeries &c) {
  auto it = terms_.find(OpKey{i, s});
  if (it == terms_.end()) {
    if (!c.is_exact_zero())
      terms_.emplace(OpKey{i, s}, c);
    return;
  }
  it->second += c;
}

void EOp::prune() {
  std::erase_if(terms_, [](const auto &kv) { return kv.second.is_exact_zero(); });
}

std::optional<int> EOp::top_s() const {
  for (const auto &kv : terms_)
    if (!kv.second.is_zero())
      return kv.first.s;
  return std::nullopt;
}

bool EOp::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto &kv) { return kv.second.is_zero(); });
}

EOp EOp::operator-() const {
  EOp r(*this);
  for (auto &kv : r.terms_)
    kv.second = -kv.second;
  return r;
}

EOp &EOp::operator+=(const EOp &o) {
  require_compatible(trunc_, o.trunc_);
  int f = floor_max(floor_, o.floor_);
  for (const auto &kv : o.terms_)
    if (kv.first.s >= f)
      add_to(kv.first.i, kv.first.s, kv.second);
  floor_ = f;
  std::erase_if(terms_, [f](const auto &kv) { return kv.first.s < f; });
  dropped_ = dropped_ || o.dropped_;
  prune();
  return *this;
}

EOp &EOp::operator-=(const EOp &o) { return *this += -o; }

EOp EOp::scaled(const QuadElem &c) const {
  EOp r(*this);
  for (auto &kv : r.terms_)
    kv.second = kv.second.scaled(c);
  r.prune();
  return r;
}

EOp EOp::left_mul(const XSeries &f) const {
  EOp r(*this);
  for (auto &kv : r.terms_) {
    int cap = trunc_.nx;
    if (f.exact() && kv.second.exact() && f.degree() + kv.second.degree() < trunc_.nx)
      cap = kExact;
    kv.second = x_mul_tracked(f, kv.second, cap);
  }
  r.prune();
  return r;
}

EOp EOp::restricted(int s_lo) const {
  EOp r(*this);
  std::erase_if(r.terms_, [s_lo](const auto &kv) { return kv.first.s < s_lo; });
  r.floor_ = floor_max(floor_, s_lo);
  return r;
}

EOp EOp::nonneg_part() const {
  if (floor_ > 0)
    throw IndeterminateError("nonnegative part is not known: floor " + std::to_string(floor_));
  EOp r(*this);
  std::erase_if(r.terms_, [](const auto &kv) { return kv.first.s < 0; });
  r.floor_ = kNoFloor;
  r.dropped_ = false;
  return r;
}

std::string EOp::str() const {
  std::string out;
  auto append = [&out](bool negative, const std::string &body) {
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  };
  for (const auto &[key, c] : terms_) {
    if (c.is_zero())
      continue;
    std::string mono = d_part(key.i, key.s);
    if (mono.empty()) {
      // The d-free term is printed inline.
      std::string cs = c.str();
      bool neg = cs[0] == '-';
      append(neg, neg ? cs.substr(1) : cs);
      continue;
    }
    if (c.terms().size() == 1) {
      const auto &t = c.terms().front();
      bool neg = t.c.is_rational() && sgn(t.c.a()) < 0;
      XSeries body = neg ? -c : c;
      std::string cs = body.str();
      if (cs == "1")
        append(neg, mono);
      else if (!t.c.is_rational() && sgn(t.c.a()) != 0 && t.i == 0 && t.j == 0)
        append(false, "(" + cs + ")*" + mono);
      else
        append(neg, cs + "*" + mono);
    } else {
      append(false, "(" + c.str() + ")*" + mono);
    }
  }
  return out.empty() ? "0" : out;
}

EOp compose(const EOp &p, const EOp &q) {
  require_compatible(p.trunc(), q.trunc());
  const Trunc &t = p.trunc();
  EOp r(t);
  if (p.terms().empty() && p.exact_in_d2())
    return r;
  if (q.terms().empty() && q.exact_in_d2())
    return r;

  // Unknown d2-tails of either factor propagate to a floor on the result.
  int floor_pre = kNoFloor;
  auto ptop = reach_top(p), qtop = reach_top(q);
  if (!p.exact_in_d2() && qtop)
    floor_pre = floor_max(floor_pre, p.floor() + *qtop);
  if (!q.exact_in_d2() && ptop)
    floor_pre = floor_max(floor_pre, q.floor() + *ptop);
  const int lo = floor_max(floor_pre, t.s_min);
  bool dropped = false;

  std::unordered_map<long, Rat> binom_cache;
  auto binom = [&binom_cache](int s, int k) -> const Rat & {
    long key = (static_cast<long>(s) << 20) ^ k;
    auto it = binom_cache.find(key);
    if (it == binom_cache.end())
      it = binom_cache.emplace(key, binomial(s, k)).first;
    return it->second;
  };

  for (const auto &[qk, g] : q.terms()) {
    // Derivatives of g, filled lazily: deriv[a][b].
    std::vector<std::vector<std::optional<XSeries>>> deriv;
    auto dg = [&deriv, &g](int a, int b) -> const XSeries & {
      if (static_cast<int>(deriv.size()) <= a)
        deriv.resize(a + 1);
      auto &row = deriv[a];
      if (static_cast<int>(row.size()) <= b)
        row.resize(b + 1);
      if (!row[b])
        row[b] = x_diff_n(g, a, b);
      return *row[b];
    };
    for (const auto &[pk, f] : p.terms()) {
      const int i = pk.i, s = pk.s, j = qk.i, tt = qk.s;
      for (int a = 0; a <= i; ++a) {
        const int I = i - a + j;
        for (int b = 0;; ++b) {
          if (s >= 0 && b > s)
            break;
          const int T = s - b + tt;
          const XSeries &D = dg(a, b);
          if (D.is_exact_zero()) {
            if (g.exact())
              break; // higher x2-derivatives vanish as well
            continue;
          }
          if (T < lo) {
            if (T < t.s_min && floor_pre < t.s_min)
              dropped = true;
            break;
          }
          int cap = t.nx;
          if (f.exact() && D.exact() && f.degree() + D.degree() < t.nx)
            cap = kExact;
          XSeries prod = x_mul_tracked(f, D, cap);
          if (prod.prec() < 0)
            prod = XSeries::zero(0);
          Rat c = binom(i, a) * binom(s, b);
          r.add_to(I, T, prod.scaled(QuadElem(c)));
        }
      }
    }
  }

  r.prune();
  int floor_out = dropped ? floor_max(floor_pre, t.s_min) : floor_pre;
  r.set_floor(floor_out);
  if (dropped || p.window_dropped() || q.window_dropped())
    r.mark_dropped();
  if (!r.terms().empty()) {
    bool any_known = false;
    for (const auto &kv : r.terms())
      if (kv.second.prec() > 0) {
        any_known = true;
        break;
      }
    if (!any_known)
      throw PrecisionError("composition certifies no coefficient; raise nx");
  }
  return r;
}

EOp commutator(const EOp &p, const EOp &q) { return compose(p, q) - compose(q, p); }

} // namespace sato2d
