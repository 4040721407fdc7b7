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

#include "series.hpp"

#include <algorithm>

#include "errors.hpp"

namespace sato2d {

namespace {

// Position of x1^i x2^j in the canonical order (total degree, i descending).
inline std::size_t tri_index(int i, int j) {
  std::size_t d = static_cast<std::size_t>(i + j);
  return d * (d + 1) / 2 + static_cast<std::size_t>(j);
}

inline std::size_t tri_size(int max_deg) {
  if (max_deg < 0)
    return 0;
  std::size_t d = static_cast<std::size_t>(max_deg) + 1;
  return d * (d + 1) / 2;
}

inline bool term_less(const XSeries::Term &x, const XSeries::Term &y) {
  return tri_index(x.i, x.j) < tri_index(y.i, y.j);
}

// Dense accumulator over all monomials of total degree <= max_deg.
class DenseAcc {
public:
  explicit DenseAcc(int max_deg) : max_deg_(max_deg), vals_(tri_size(max_deg)),
                                   used_(tri_size(max_deg), false) {}
  int max_deg() const { return max_deg_; }
  QuadElem &at(int i, int j) {
    std::size_t k = tri_index(i, j);
    used_[k] = true;
    return vals_[k];
  }
  std::vector<XSeries::Term> collect() {
    std::vector<XSeries::Term> out;
    for (int d = 0; d <= max_deg_; ++d)
      for (int j = 0; j <= d; ++j) {
        std::size_t k = tri_index(d - j, j);
        if (used_[k] && !vals_[k].is_zero())
          out.push_back({d - j, j, std::move(vals_[k])});
      }
    return out;
  }

private:
  int max_deg_;
  std::vector<QuadElem> vals_;
  std::vector<bool> used_;
};

} // namespace

std::string OrdM::str() const {
  switch (kind) {
  case Kind::Finite:
    return std::to_string(value);
  case Kind::Infinite:
    return "inf";
  case Kind::Unknown:
    return ">=" + std::to_string(value);
  }
  return "?";
}

XSeries XSeries::zero(int prec) {
  XSeries r;
  r.prec_ = prec;
  return r;
}

XSeries XSeries::constant(const QuadElem &c) {
  XSeries r;
  if (!c.is_zero())
    r.terms_.push_back({0, 0, c});
  return r;
}

XSeries XSeries::monomial(int i, int j, const QuadElem &c) {
  if (i < 0 || j < 0)
    throw DomainError("negative exponent in power series monomial");
  XSeries r;
  if (!c.is_zero())
    r.terms_.push_back({i, j, c});
  return r;
}

XSeries XSeries::from_terms(std::vector<Term> terms, int prec) {
  std::sort(terms.begin(), terms.end(), term_less);
  XSeries r;
  r.prec_ = prec;
  for (auto &t : terms) {
    if (t.i < 0 || t.j < 0)
      throw DomainError("negative exponent in power series term");
    if (t.i + t.j >= prec)
      continue;
    if (!r.terms_.empty() && r.terms_.back().i == t.i && r.terms_.back().j == t.j)
      r.terms_.back().c += t.c;
    else
      r.terms_.push_back(std::move(t));
  }
  std::erase_if(r.terms_, [](const Term &t) { return t.c.is_zero(); });
  return r;
}

bool XSeries::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].i == 0 && terms_[0].j == 0);
}

QuadElem XSeries::coeff(int i, int j) const {
  Term key{i, j, QuadElem()};
  auto it = std::lower_bound(terms_.begin(), terms_.end(), key, term_less);
  if (it != terms_.end() && it->i == i && it->j == j)
    return it->c;
  return QuadElem();
}

int XSeries::degree() const {
  return terms_.empty() ? -1 : terms_.back().i + terms_.back().j;
}

XSeries XSeries::truncated(int prec) const {
  if (prec >= prec_)
    return *this;
  XSeries r;
  r.prec_ = prec;
  for (const auto &t : terms_) {
    if (t.i + t.j >= prec)
      break;
    r.terms_.push_back(t);
  }
  return r;
}

XSeries XSeries::operator-() const {
  XSeries r(*this);
  for (auto &t : r.terms_)
    t.c = -t.c;
  return r;
}

void XSeries::add_scaled(const XSeries &o, const QuadElem *scale, bool negate) {
  if (&o == this) {
    XSeries copy(o);
    add_scaled(copy, scale, negate);
    return;
  }
  int p = prec_min(prec_, o.prec_);
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  auto take_other = [&](const Term &t) {
    QuadElem c = scale ? t.c * *scale : t.c;
    if (negate)
      c = -c;
    return c;
  };
  while (a != terms_.end() || b != o.terms_.end()) {
    bool use_a, use_b;
    if (a == terms_.end()) {
      use_a = false;
      use_b = true;
    } else if (b == o.terms_.end()) {
      use_a = true;
      use_b = false;
    } else {
      std::size_t ka = tri_index(a->i, a->j), kb = tri_index(b->i, b->j);
      use_a = ka <= kb;
      use_b = kb <= ka;
    }
    const Term &ref = use_a ? *a : *b;
    if (ref.i + ref.j >= p)
      break;
    if (use_a && use_b) {
      QuadElem c = a->c + take_other(*b);
      if (!c.is_zero())
        out.push_back({a->i, a->j, std::move(c)});
    } else if (use_a) {
      out.push_back(std::move(*a));
    } else {
      out.push_back({b->i, b->j, take_other(*b)});
    }
    if (use_a)
      ++a;
    if (use_b)
      ++b;
  }
  terms_ = std::move(out);
  prec_ = p;
}

XSeries &XSeries::operator+=(const XSeries &o) {
  add_scaled(o, nullptr, false);
  return *this;
}

XSeries &XSeries::operator-=(const XSeries &o) {
  add_scaled(o, nullptr, true);
  return *this;
}

XSeries XSeries::scaled(const QuadElem &c) const {
  if (c.is_zero())
    return zero(prec_);
  XSeries r(*this);
  for (auto &t : r.terms_)
    t.c *= c;
  return r;
}

bool XSeries::equal_mod(const XSeries &o, int p) const {
  auto a = truncated(p);
  auto b = o.truncated(p);
  if (a.terms_.size() != b.terms_.size())
    return false;
  for (std::size_t k = 0; k < a.terms_.size(); ++k) {
    const auto &x = a.terms_[k];
    const auto &y = b.terms_[k];
    if (x.i != y.i || x.j != y.j || x.c != y.c)
      return false;
  }
  return true;
}

bool XSeries::operator==(const XSeries &o) const {
  return prec_ == o.prec_ && equal_mod(o, kExact);
}

XSeries XSeries::at_zero(Var v) const {
  XSeries r;
  r.prec_ = prec_;
  for (const auto &t : terms_)
    if ((v == Var::X1 ? t.i : t.j) == 0)
      r.terms_.push_back(t);
  return r;
}

XSeries XSeries::integrate(Var v) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto &t : terms_) {
    int e = v == Var::X1 ? t.i : t.j;
    QuadElem c = t.c * QuadElem(Rat(1, e + 1));
    if (v == Var::X1)
      out.push_back({t.i + 1, t.j, std::move(c)});
    else
      out.push_back({t.i, t.j + 1, std::move(c)});
  }
  return from_terms(std::move(out), prec_add(prec_, 1));
}

std::string XSeries::str() const {
  if (terms_.empty())
    return "0";
  std::string out;
  for (const auto &t : terms_) {
    std::string mono;
    if (t.i > 0)
      mono += t.i == 1 ? "x1" : "x1^" + std::to_string(t.i);
    if (t.j > 0) {
      if (!mono.empty())
        mono += "*";
      mono += t.j == 1 ? "x2" : "x2^" + std::to_string(t.j);
    }
    std::string cs = t.c.str();
    bool negative = !t.c.is_zero() && t.c.is_rational() && sgn(t.c.a()) < 0;
    if (negative)
      cs = (-t.c).str();
    bool compound = !t.c.is_rational() && sgn(t.c.a()) != 0;
    std::string piece;
    if (mono.empty())
      piece = cs;
    else if (cs == "1")
      piece = mono;
    else
      piece = (compound ? "(" + cs + ")" : cs) + "*" + mono;
    if (out.empty())
      out = negative ? "-" + piece : piece;
    else
      out += negative ? " - " + piece : " + " + piece;
  }
  return out;
}

XSeries x_mul(const XSeries &f, const XSeries &g) {
  int p = prec_min(f.prec(), g.prec());
  if (f.is_zero() || g.is_zero())
    return XSeries::zero(p);
  int max_deg = f.degree() + g.degree();
  if (p < kExact)
    max_deg = std::min(max_deg, p - 1);
  int fmin = f.terms().front().i + f.terms().front().j;
  int gmin = g.terms().front().i + g.terms().front().j;
  if (fmin + gmin > max_deg)
    return XSeries::zero(p);
  DenseAcc acc(max_deg);
  for (const auto &a : f.terms()) {
    int da = a.i + a.j;
    if (da + gmin > max_deg)
      break;
    for (const auto &b : g.terms()) {
      if (da + b.i + b.j > max_deg)
        break;
      acc.at(a.i + b.i, a.j + b.j).add_product(a.c, b.c);
    }
  }
  return XSeries::from_terms(acc.collect(), p);
}

namespace {

// A product with no monomial below the cap still vanishes to order
// ord f + ord g, as far as it is known at all.
int vanishing_prec(int p_track, int p_cap, int of, int og) {
  return prec_min(p_track, std::max(p_cap, prec_add(of, og)));
}

} // namespace

XSeries x_mul_tracked(const XSeries &f, const XSeries &g, int cap) {
  int of = ord_m(f).lower_bound();
  int og = ord_m(g).lower_bound();
  const int p_track = prec_min(prec_add(f.prec(), og), prec_add(g.prec(), of));
  const int p = prec_min(p_track, cap);
  if (f.is_zero() || g.is_zero())
    return XSeries::zero(vanishing_prec(p_track, p, of, og));
  int max_deg = f.degree() + g.degree();
  if (p < kExact)
    max_deg = std::min(max_deg, p - 1);
  if (of + og > max_deg)
    return XSeries::zero(vanishing_prec(p_track, p, of, og));
  DenseAcc acc(max_deg);
  for (const auto &a : f.terms()) {
    int da = a.i + a.j;
    if (da + og > max_deg)
      break;
    for (const auto &b : g.terms()) {
      if (da + b.i + b.j > max_deg)
        break;
      acc.at(a.i + b.i, a.j + b.j).add_product(a.c, b.c);
    }
  }
  XSeries r = XSeries::from_terms(acc.collect(), p);
  if (r.is_zero())
    return XSeries::zero(vanishing_prec(p_track, p, of, og));
  return r;
}

XSeries x_diff(const XSeries &f, Var v) {
  if (f.prec() <= 0)
    throw PrecisionError("derivative of a series known to precision 0");
  return x_diff_n(f, v == Var::X1 ? 1 : 0, v == Var::X2 ? 1 : 0);
}

XSeries x_diff_n(const XSeries &f, int a, int b) {
  int p = f.exact() ? kExact : f.prec() - a - b;
  if (p <= 0)
    return XSeries::zero(p < 0 ? 0 : p);
  std::vector<XSeries::Term> out;
  for (const auto &t : f.terms()) {
    if (t.i < a || t.j < b)
      continue;
    Rat m(1);
    for (int k = 0; k < a; ++k)
      m *= t.i - k;
    for (int k = 0; k < b; ++k)
      m *= t.j - k;
    out.push_back({t.i - a, t.j - b, t.c * QuadElem(m)});
  }
  return XSeries::from_terms(std::move(out), p);
}

XSeries x_inv(const XSeries &f, int cap) {
  QuadElem c0 = f.constant_term();
  if (c0.is_zero())
    throw NonUnitError("power series with zero constant term is not a unit");
  QuadElem c0i = c0.inverse();
  if (f.is_constant() && f.exact())
    return XSeries::constant(c0i);
  int p = prec_min(f.prec(), cap);
  if (p >= kExact)
    throw PrecisionError("inverse of a nonconstant polynomial needs a precision cap");
  // Coefficientwise recursion: g = c0^-1 (1 - sum_{m>0} f_m g_{n-m}).
  DenseAcc acc(p - 1);
  std::vector<QuadElem> g(tri_size(p - 1));
  for (int d = 0; d < p; ++d)
    for (int j = 0; j <= d; ++j) {
      int i = d - j;
      QuadElem s = (d == 0) ? QuadElem(1) : QuadElem();
      for (const auto &t : f.terms()) {
        int dt = t.i + t.j;
        if (dt == 0)
          continue;
        if (dt > d)
          break;
        if (t.i > i || t.j > j)
          continue;
        s -= t.c * g[tri_index(i - t.i, j - t.j)];
      }
      g[tri_index(i, j)] = s * c0i;
      acc.at(i, j) = g[tri_index(i, j)];
    }
  return XSeries::from_terms(acc.collect(), p);
}

XSeries x_exp(const XSeries &f, int cap) {
  if (!f.constant_term().is_zero())
    throw DomainError("exp requires a series with zero constant term");
  if (f.is_zero())
    return XSeries::constant(QuadElem(1)).truncated(f.prec());
  int p = prec_min(f.prec(), cap);
  if (p >= kExact)
    throw PrecisionError("exp of a nonzero polynomial needs a precision cap");
  XSeries sum = XSeries::constant(QuadElem(1)).truncated(p);
  XSeries pw = sum;
  for (int n = 1; n < p; ++n) {
    pw = x_mul(pw, f).truncated(p).scaled(QuadElem(Rat(1, n)));
    if (pw.is_zero())
      break;
    sum += pw;
  }
  return sum.truncated(p);
}

OrdM ord_m(const XSeries &f) {
  if (!f.is_zero())
    return OrdM::finite(f.terms().front().i + f.terms().front().j);
  if (f.exact())
    return OrdM::infinite();
  return OrdM::unknown(f.prec());
}

} // namespace sato2d
