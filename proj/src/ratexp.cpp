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

#include "ratexp.hpp"

#include <algorithm>
#include <random>

#include "errors.hpp"

namespace sato2d {

UPoly::UPoly(const QuadElem &c) {
  if (!c.is_zero())
    c_.push_back(c);
}

UPoly UPoly::monomial(int k, const QuadElem &c) {
  UPoly p;
  if (c.is_zero())
    return p;
  p.c_.assign(k + 1, QuadElem());
  p.c_[k] = c;
  return p;
}

QuadElem UPoly::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : QuadElem();
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero())
    c_.pop_back();
}

UPoly &UPoly::operator+=(const UPoly &o) {
  if (o.c_.size() > c_.size())
    c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k)
    c_[k] += o.c_[k];
  trim();
  return *this;
}

UPoly &UPoly::operator-=(const UPoly &o) { return *this += -o; }

UPoly operator*(const UPoly &a, const UPoly &b) {
  UPoly r;
  if (a.is_zero() || b.is_zero())
    return r;
  r.c_.assign(a.c_.size() + b.c_.size() - 1, QuadElem());
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      r.c_[i + j].add_product(a.c_[i], b.c_[j]);
  r.trim();
  return r;
}

UPoly UPoly::scaled(const QuadElem &c) const {
  UPoly r;
  if (c.is_zero())
    return r;
  r.c_ = c_;
  for (auto &x : r.c_)
    x *= c;
  return r;
}

UPoly UPoly::monic() const { return is_zero() ? *this : scaled(lead().inverse()); }

std::string UPoly::str(const std::string &var) const {
  std::string out;
  for (int k = deg(); k >= 0; --k) {
    const QuadElem &c = c_[k];
    if (c.is_zero())
      continue;
    bool neg = c.is_rational() && sgn(c.a()) < 0;
    std::string cs = neg ? (-c).str() : c.str();
    if (!c.is_rational())
      cs = "(" + cs + ")";
    std::string mono = k == 0 ? "" : (k == 1 ? var : var + "^" + std::to_string(k));
    std::string body = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
    if (out.empty())
      out = neg ? "-" + body : body;
    else
      out += (neg ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

UDivMod divmod(const UPoly &a, const UPoly &b) {
  if (b.is_zero())
    throw DivisionByZero("polynomial division by zero");
  UDivMod out{UPoly(), a};
  const QuadElem inv = b.lead().inverse();
  while (!out.r.is_zero() && out.r.deg() >= b.deg()) {
    UPoly t = UPoly::monomial(out.r.deg() - b.deg(), out.r.lead() * inv);
    out.q += t;
    out.r -= t * b;
  }
  return out;
}

UPoly gcd(const UPoly &a, const UPoly &b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).r;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

RatFun::RatFun(UPoly n, UPoly d) {
  if (d.is_zero())
    throw DivisionByZero("rational function with zero denominator");
  if (n.is_zero()) {
    num = UPoly();
    den = UPoly(QuadElem(1));
    return;
  }
  UPoly g = gcd(n, d);
  n = divmod(n, g).q;
  d = divmod(d, g).q;
  const QuadElem lc = d.lead().inverse();
  num = n.scaled(lc);
  den = d.scaled(lc);
}

RatFun &RatFun::operator+=(const RatFun &o) {
  *this = RatFun(num * o.den + o.num * den, den * o.den);
  return *this;
}

RatFun &RatFun::operator-=(const RatFun &o) {
  *this = RatFun(num * o.den - o.num * den, den * o.den);
  return *this;
}

RatFun operator*(const RatFun &a, const RatFun &b) { return RatFun(a.num * b.num, a.den * b.den); }

RatFun operator/(const RatFun &a, const RatFun &b) {
  if (b.is_zero())
    throw DivisionByZero("division by the zero rational function");
  return RatFun(a.num * b.den, a.den * b.num);
}

std::vector<std::pair<int, QuadElem>> RatFun::laurent(int i_min) const {
  std::vector<std::pair<int, QuadElem>> out;
  auto [q, r] = divmod(num, den);
  for (int k = q.deg(); k >= 0 && k >= i_min; --k)
    if (!q.coeff(k).is_zero())
      out.emplace_back(k, q.coeff(k));
  // r/den = sum_{k<0} c_k d1^k, by long division against the leading term.
  const int D = den.deg();
  const QuadElem inv = den.lead().inverse();
  for (int k = -1; k >= i_min && !r.is_zero(); --k) {
    r = r * UPoly::monomial(1);
    const QuadElem c = r.coeff(D) * inv;
    if (c.is_zero())
      continue;
    out.emplace_back(k, c);
    r -= den.scaled(c);
  }
  return out;
}

std::optional<int> RatFun::top_negative() const {
  UPoly r = divmod(num, den).r;
  if (r.is_zero())
    return std::nullopt;
  return r.deg() - den.deg();
}

std::string RatFun::str() const {
  if (is_poly())
    return num.str();
  return "(" + num.str() + ")/(" + den.str() + ")";
}


BiPoly::BiPoly(const QuadElem &c) {
  if (!c.is_zero())
    by_d2_.emplace_back(c);
}

BiPoly BiPoly::monomial(int i, int s, const QuadElem &c) {
  BiPoly p;
  p.set(s, UPoly::monomial(i, c));
  return p;
}

BiPoly BiPoly::from_zseries(const ZSeries &z) {
  if (!z.exact())
    throw DomainError("a polynomial symbol must be exact in d2");
  BiPoly p;
  for (const auto &[k, c] : z.terms()) {
    if (k.i < 0 || k.s < 0)
      throw DomainError("d1^" + std::to_string(k.i) + "*d2^" + std::to_string(k.s) +
                        " is not a polynomial monomial");
    p += monomial(k.i, k.s, c);
  }
  return p;
}

int BiPoly::total_deg() const {
  int d = -1;
  for (int s = 0; s <= deg2(); ++s)
    if (!by_d2_[s].is_zero())
      d = std::max(d, by_d2_[s].deg() + s);
  return d;
}

UPoly BiPoly::coeff(int s) const { return s >= 0 && s <= deg2() ? by_d2_[s] : UPoly(); }

void BiPoly::set(int s, UPoly c) {
  if (s < 0)
    throw DomainError("negative d2-degree in a polynomial");
  if (s > deg2())
    by_d2_.resize(s + 1);
  by_d2_[s] = std::move(c);
  trim();
}

void BiPoly::trim() {
  while (!by_d2_.empty() && by_d2_.back().is_zero())
    by_d2_.pop_back();
}

BiPoly &BiPoly::operator+=(const BiPoly &o) {
  if (o.by_d2_.size() > by_d2_.size())
    by_d2_.resize(o.by_d2_.size());
  for (std::size_t s = 0; s < o.by_d2_.size(); ++s)
    by_d2_[s] += o.by_d2_[s];
  trim();
  return *this;
}

BiPoly &BiPoly::operator-=(const BiPoly &o) { return *this += o.scaled(UPoly(QuadElem(-1))); }

BiPoly operator*(const BiPoly &a, const BiPoly &b) {
  BiPoly r;
  if (a.is_zero() || b.is_zero())
    return r;
  r.by_d2_.assign(a.by_d2_.size() + b.by_d2_.size() - 1, UPoly());
  for (std::size_t i = 0; i < a.by_d2_.size(); ++i)
    for (std::size_t j = 0; j < b.by_d2_.size(); ++j)
      r.by_d2_[i + j] += a.by_d2_[i] * b.by_d2_[j];
  r.trim();
  return r;
}

BiPoly BiPoly::scaled(const UPoly &c) const {
  BiPoly r;
  if (c.is_zero())
    return r;
  r.by_d2_ = by_d2_;
  for (auto &x : r.by_d2_)
    x = x * c;
  r.trim();
  return r;
}

UPoly BiPoly::content() const {
  UPoly g;
  for (const auto &c : by_d2_)
    g = gcd(g, c);
  return g;
}

BiPoly BiPoly::divided(const UPoly &c) const {
  BiPoly r;
  for (int s = 0; s <= deg2(); ++s) {
    auto [q, rem] = divmod(by_d2_[s], c);
    if (!rem.is_zero())
      throw DomainError("(" + str() + ") is not divisible by " + c.str());
    r.set(s, std::move(q));
  }
  return r;
}

ZSeries BiPoly::to_zseries() const {
  ZSeries z;
  for (int s = 0; s <= deg2(); ++s)
    for (int i = 0; i <= by_d2_[s].deg(); ++i)
      z.add_to(i, s, by_d2_[s].coeff(i));
  return z;
}

std::string BiPoly::str() const { return to_zseries().str(); }

BiPoly prem(const BiPoly &a, const BiPoly &b) {
  if (b.is_zero())
    throw DivisionByZero("pseudo-division by zero");
  const int n = b.deg2();
  const UPoly lb = b.coeff(n);
  BiPoly r = a;
  while (!r.is_zero() && r.deg2() >= n) {
    BiPoly shift;
    shift.set(r.deg2() - n, r.coeff(r.deg2()));
    r = r.scaled(lb) - b * shift;
  }
  return r;
}

namespace {

BiPoly primitive(const BiPoly &p) { return p.is_zero() ? p : p.divided(p.content()); }

BiPoly normalized(const BiPoly &p) {
  if (p.is_zero())
    return p;
  return p.scaled(UPoly(p.coeff(p.deg2()).lead().inverse()));
}

} // namespace

BiPoly gcd(const BiPoly &a, const BiPoly &b) {
  if (a.is_zero())
    return normalized(b);
  if (b.is_zero())
    return normalized(a);
  const UPoly c = gcd(a.content(), b.content());
  BiPoly x = primitive(a), y = primitive(b);
  if (x.deg2() < y.deg2())
    std::swap(x, y);
  while (!y.is_zero()) {
    BiPoly r = primitive(prem(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  return normalized(x.scaled(c));
}

RatSym RatSym::make(BiPoly p, BiPoly q) {
  if (q.is_zero())
    throw DivisionByZero("rational symbol with zero denominator");
  RatSym r{std::move(p), std::move(q), false};
  r.coprimality_checked = gcd(r.P, r.Q).is_constant();
  return r;
}

RatSym RatSym::reduced(BiPoly p, BiPoly q) {
  if (q.is_zero())
    throw DivisionByZero("rational symbol with zero denominator");
  const BiPoly g = gcd(p, q);
  // Cancel g by division of the d2-polynomials over k(d1); quotients are exact.
  auto exact_div = [&g](const BiPoly &f) {
    BiPoly quo, rem = f;
    const int n = g.deg2();
    const UPoly lg = g.coeff(n);
    while (!rem.is_zero()) {
      if (rem.deg2() < n)
        throw DomainError("gcd does not divide " + f.str());
      auto [c, cr] = divmod(rem.coeff(rem.deg2()), lg);
      if (!cr.is_zero())
        throw DomainError("gcd does not divide " + f.str());
      BiPoly t;
      t.set(rem.deg2() - n, c);
      quo += t;
      rem -= g * t;
    }
    return quo;
  };
  return RatSym{exact_div(p), exact_div(q), true};
}

std::string RatSym::str() const { return "(" + P.str() + ")/(" + Q.str() + ")"; }

Expansion expand(const RatSym &r, const Trunc &t) {
  t.validate();
  Expansion e;
  e.d1_cut = -t.n1;
  const int n = r.Q.deg2();
  const RatFun qn(r.Q.coeff(n));
  e.lead_constant = r.Q.coeff(n).is_constant();

  // Remainder of the division, keyed by d2-degree.
  std::map<int, RatFun> rem;
  for (int s = 0; s <= r.P.deg2(); ++s)
    if (!r.P.coeff(s).is_zero())
      rem[s] = RatFun(r.P.coeff(s));

  const int top = r.P.is_zero() ? t.s_min : r.P.deg2() - n;
  for (int s = top; s >= t.s_min && !rem.empty(); --s) {
    auto it = rem.find(s + n);
    if (it == rem.end())
      continue;
    const RatFun f = it->second / qn;
    for (int l = 0; l <= n; ++l) {
      if (r.Q.coeff(l).is_zero())
        continue;
      RatFun &slot = rem[s + l];
      slot -= f * RatFun(r.Q.coeff(l));
      if (slot.is_zero())
        rem.erase(s + l);
    }
    for (const auto &[i, c] : f.laurent(e.d1_cut))
      e.series.add_to(i, s, c);
    if (auto neg = f.top_negative()) {
      e.negative_d1 = true;
      if (!e.witness)
        e.witness = OpKey{*neg, s};
    }
  }
  e.terminated = rem.empty();
  if (!e.terminated)
    e.series.set_floor(t.s_min);
  return e;
}

Membership membership_kd1(const Expansion &e) {
  Membership m;
  if (e.witness) {
    m.kind = Membership::Kind::Outside;
    m.witness = e.witness;
    m.reason = "d1^" + std::to_string(e.witness->i) + "*d2^" + std::to_string(e.witness->s) +
               " has a negative d1-exponent";
    return m;
  }
  if (e.terminated || e.lead_constant) {
    m.reason = e.terminated ? "finite expansion with polynomial coefficients"
                            : "top d2-coefficient of Q is a constant";
    return m;
  }
  m.kind = Membership::Kind::Indeterminate;
  m.reason = "coefficients down to d2^" + std::to_string(e.series.floor()) +
             " lie in k[d1]; later ones are outside the window";
  return m;
}

namespace {

const char *kind_name(Membership::Kind k) {
  switch (k) {
  case Membership::Kind::Inside:
    return "inside";
  case Membership::Kind::Outside:
    return "outside";
  default:
    return "indeterminate";
  }
}

std::string key_text(const OpKey &k) {
  return "(" + std::to_string(k.i) + "," + std::to_string(k.s) + ")";
}

} // namespace

std::string LemmaReport::line() const {
  std::string out = "P=" + P + " Q=" + Q + " window=[s>=" + std::to_string(window.s_min) +
                    ",i>=" + std::to_string(-window.n1) + "] membership=" + kind_name(membership.kind);
  if (membership.witness)
    out += "@" + key_text(*membership.witness);
  out += " A1(" + std::to_string(m) + ")=";
  out += a1 == A1Result::Kind::Holds ? "holds" : "fails@" + key_text(a1_at);
  out += " ord_gamma(Q)=(" + std::to_string(ord_q.k) + "," + std::to_string(ord_q.l) + ")";
  out += " ord(Q)=" + std::to_string(total_ord_q);
  out += std::string(" hypothesis=") + (hypothesis ? "true" : "false");
  out += std::string(" conclusion=") + (conclusion ? "true" : "false");
  return out;
}

LemmaReport lemma_check(const RatSym &r, const Trunc &t, std::optional<int> m) {
  if (!r.coprimality_checked)
    throw DomainError("coprimality of P and Q is not verified; refusing the lemma check");
  LemmaReport rep;
  rep.P = r.P.str();
  rep.Q = r.Q.str();
  rep.window = t;
  const Expansion e = expand(r, t);
  rep.membership = membership_kd1(e);

  const auto lead = e.series.lead();
  rep.m = m ? *m : (lead ? lead->i + lead->s : 0);
  // Constant coefficients: A1(m) asks i + s <= m on every nonzero term.
  for (const auto &kv : e.series.terms()) {
    if (kv.first.i + kv.first.s > rep.m) {
      rep.a1 = A1Result::Kind::Fails;
      rep.a1_at = kv.first;
      break;
    }
  }

  const int n = r.Q.deg2();
  rep.ord_q = BiOrd{r.Q.coeff(n).deg(), n};
  rep.total_ord_q = r.Q.total_deg();
  rep.hypothesis =
      rep.membership.kind == Membership::Kind::Inside && rep.a1 == A1Result::Kind::Holds;
  rep.conclusion = rep.ord_q.k == 0 && rep.ord_q.l == rep.total_ord_q;
  return rep;
}

namespace {

BiPoly random_poly(std::mt19937_64 &rng, int deg, double density) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::bernoulli_distribution take(density);
  BiPoly p;
  for (int s = 0; s <= deg; ++s)
    for (int i = 0; i + s <= deg; ++i)
      if (take(rng))
        p += BiPoly::monomial(i, s, QuadElem(static_cast<long>(coef(rng))));
  return p;
}

} // namespace

SweepResult lemma_sweep(std::uint64_t seed, int count, int max_deg, const Trunc &t) {
  if (count < 0 || max_deg < 1)
    throw ConfigError("sweep needs count >= 0 and max_deg >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> degree(1, max_deg);
  std::bernoulli_distribution monic_top(0.5);
  std::uniform_int_distribution<int> nonzero(1, 3);
  SweepResult out;
  while (out.samples < count) {
    const int dq = degree(rng);
    BiPoly q = random_poly(rng, dq, 0.4);
    // Half of the denominators get a d2^dq term so that the hypothesis can hold.
    if (monic_top(rng))
      q += BiPoly::monomial(0, dq, QuadElem(static_cast<long>(nonzero(rng))));
    BiPoly p = random_poly(rng, degree(rng), 0.4);
    if (q.is_constant() || p.is_zero())
      continue;
    RatSym r = RatSym::make(std::move(p), std::move(q));
    if (!r.coprimality_checked)
      continue;
    LemmaReport rep = lemma_check(r, t);
    ++out.samples;
    out.hypothesis_true += rep.hypothesis ? 1 : 0;
    out.violations += rep.consistent() ? 0 : 1;
    out.reports.push_back(std::move(rep));
  }
  return out;
}

} // namespace sato2d
