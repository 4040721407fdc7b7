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

#include "catalog.hpp"

#include <algorithm>

#include "errors.hpp"

namespace sato2d {

namespace {

// Element of k[d1][[x2]]: c[k] is the coefficient of x2^k, known below prec.
struct D1Series {
  std::vector<UPoly> c;
  int prec = 0;

  static D1Series constant(const UPoly &p, int prec) {
    D1Series s;
    s.prec = prec;
    s.c.assign(prec, UPoly());
    if (prec > 0)
      s.c[0] = p;
    return s;
  }
  UPoly at(int k) const { return k < static_cast<int>(c.size()) ? c[k] : UPoly(); }
};

D1Series operator+(const D1Series &a, const D1Series &b) {
  D1Series r;
  r.prec = std::min(a.prec, b.prec);
  r.c.resize(r.prec);
  for (int k = 0; k < r.prec; ++k)
    r.c[k] = a.at(k) + b.at(k);
  return r;
}

D1Series scaled(const D1Series &a, const UPoly &p) {
  D1Series r = a;
  for (auto &x : r.c)
    x = x * p;
  return r;
}

D1Series operator-(const D1Series &a, const D1Series &b) {
  return a + scaled(b, UPoly(QuadElem(-1)));
}

D1Series operator*(const D1Series &a, const D1Series &b) {
  D1Series r;
  r.prec = std::min(a.prec, b.prec);
  r.c.assign(r.prec, UPoly());
  for (int i = 0; i < r.prec; ++i)
    for (int j = 0; i + j < r.prec; ++j)
      r.c[i + j] += a.at(i) * b.at(j);
  return r;
}

// Inverse of a series whose constant term is a nonzero constant.
D1Series inverse(const D1Series &a) {
  const UPoly c0 = a.at(0);
  if (c0.is_zero() || !c0.is_constant())
    throw NonUnitError("constant term of the x2-series is not a unit");
  const QuadElem inv0 = c0.lead().inverse();
  D1Series r;
  r.prec = a.prec;
  r.c.assign(r.prec, UPoly());
  if (r.prec > 0)
    r.c[0] = UPoly(inv0);
  for (int k = 1; k < r.prec; ++k) {
    UPoly acc;
    for (int j = 1; j <= k; ++j)
      acc += a.at(j) * r.c[k - j];
    r.c[k] = acc.scaled(-inv0);
  }
  return r;
}

D1Series derivative(const D1Series &a) {
  D1Series r;
  r.prec = std::max(a.prec - 1, 0);
  r.c.resize(r.prec);
  for (int k = 0; k < r.prec; ++k)
    r.c[k] = a.at(k + 1).scaled(QuadElem(static_cast<long>(k + 1)));
  return r;
}

// sum_k f(k) x2^k d1-polynomial coefficients, k < prec.
template <class F> D1Series tabulate(int prec, F f) {
  D1Series r;
  r.prec = prec;
  r.c.resize(prec);
  for (int k = 0; k < prec; ++k)
    r.c[k] = f(k);
  return r;
}

bool equal(const D1Series &a, const D1Series &b, int *prec) {
  *prec = std::min(a.prec, b.prec);
  for (int k = 0; k < *prec; ++k)
    if (!(a.at(k) == b.at(k)))
      return false;
  return true;
}

// The series as an operator on d2-level s. With d1_growth the d1-degree of
// the x2^k coefficient grows with k, so coefficients past the top d1-degree
// are known only modulo x2^prec.
EOp to_eop(const D1Series &a, int s, const Trunc &t, bool d1_growth = false) {
  EOp r(t);
  int top = -1;
  for (const auto &p : a.c)
    top = std::max(top, p.deg());
  for (int j = 0; j <= top; ++j) {
    std::vector<XSeries::Term> terms;
    for (int k = 0; k < a.prec; ++k) {
      const QuadElem c = a.at(k).coeff(j);
      if (!c.is_zero())
        terms.push_back({0, k, c});
    }
    if (!terms.empty())
      r.set(j, s, XSeries::from_terms(std::move(terms), a.prec));
  }
  // The next d1-coefficients vanish only modulo x2^prec; two x2-derivatives
  // can bring their first terms into range.
  for (int j = top + 1; d1_growth && a.prec > 0 && j <= top + 2; ++j)
    r.set(j, s, XSeries::zero(a.prec));
  return r;
}

std::string series_str(const D1Series &a) { return to_eop(a, 0, Trunc{a.prec, 0, -1, 0}).str(); }

struct Agreement {
  bool differ = false;
  OpKey at{0, 0};
  int prec = kExact;
  std::string reason;
};

// Coefficientwise agreement on d2-degrees >= s_lo, modulo (x)^cap.
Agreement agree(const EOp &p, const EOp &q, int s_lo, int cap) {
  Agreement g;
  g.prec = cap;
  if (p.floor() > s_lo || q.floor() > s_lo) {
    g.prec = 0;
    g.reason = "d2-window does not reach degree " + std::to_string(s_lo);
  }
  std::vector<OpKey> keys;
  for (const auto &kv : p.terms())
    keys.push_back(kv.first);
  for (const auto &kv : q.terms())
    keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end(), OpKeyOrder());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto &k : keys) {
    if (k.s < s_lo)
      continue;
    const XSeries a = p.coeff(k.i, k.s), b = q.coeff(k.i, k.s);
    const int pc = std::min({a.prec(), b.prec(), cap});
    if (!a.equal_mod(b, pc)) {
      g.differ = true;
      g.at = k;
      g.reason = "differ at d1^" + std::to_string(k.i) + "*d2^" + std::to_string(k.s) + ": " +
                 a.truncated(pc).str() + " vs " + b.truncated(pc).str();
      return g;
    }
    g.prec = std::min(g.prec, pc);
  }
  return g;
}

CatalogCheck op_check(const std::string &name, const EOp &got, const EOp &want, int s_lo,
                      bool informational) {
  const Agreement g = agree(got, want, s_lo, got.trunc().nx);
  CatalogCheck c;
  c.name = name;
  c.informational = informational;
  c.s_lo = s_lo;
  c.ok = !g.differ;
  c.certified = g.differ ? 0 : g.prec;
  c.detail = g.differ ? g.reason
                      : "agree modulo degree " + std::to_string(g.prec) + " on d2-degrees >= " +
                            std::to_string(s_lo);
  if (!c.ok && !informational)
    throw InternalError("built-in identity " + name + " failed: " + g.reason);
  return c;
}

CatalogCheck series_check(const std::string &name, const D1Series &got, const D1Series &want) {
  CatalogCheck c;
  c.name = name;
  c.ok = equal(got, want, &c.certified);
  c.detail = c.ok ? "equal modulo x2^" + std::to_string(c.certified)
                  : series_str(got) + " vs " + series_str(want);
  if (!c.ok)
    throw InternalError("built-in identity " + name + " failed: " + c.detail);
  return c;
}

CatalogCheck symbolic_check(const std::string &name, const RatFun &got, const RatFun &want) {
  CatalogCheck c;
  c.name = name;
  c.certified = kExact;
  c.ok = got.num == want.num && got.den == want.den;
  c.detail = got.str() + (c.ok ? " = " : " != ") + want.str();
  if (!c.ok)
    throw InternalError("built-in identity " + name + " failed: " + c.detail);
  return c;
}

void require_linear(const UPoly &P) {
  if (P.deg() > 1)
    throw DomainError("P must have degree at most 1 in d1, got " + P.str());
}

ZSeries zmono(int i, int s, long c = 1) { return ZSeries::monomial(i, s, QuadElem(c)); }

// Ring generators S a S^-1 for the symbols a, with the pair and verdicts.
void assemble(CatalogExample &ex, const std::vector<ZSeries> &a_gens, const EOp &w,
              const Trunc &t) {
  ex.S = EOp::identity(t) + compose(w, EOp::monomial(t, 0, -1));
  const EOp s_inv = invert_unit(ex.S);
  ex.pair.window = t;
  ex.pair.r = 1;
  ex.pair.a_gens = a_gens;
  ex.pair.w_gens = dressed_basis(ex.S, t.nx - 1);

  ex.ring.trunc = t;
  for (const auto &a : a_gens)
    ex.ring.gens.push_back(compose(compose(ex.S, lift(a, t)), s_inv));
  for (std::size_t n = 0; n < ex.ring.gens.size(); ++n) {
    PdoVerdict v = pdo_test(ex.ring.gens[n]);
    if (!v.pdo) {
      ex.ring.completed = true;
      ex.ring.notes.push_back("generator " + std::to_string(n) + ": " + v.reason);
    }
  }
  if (is_normalized_pair(ex.ring.gens[0], ex.ring.gens[2]))
    ex.ring.normalized_pair = std::make_pair(0, 2);

  for (std::size_t a = 0; a < ex.ring.gens.size(); ++a)
    for (std::size_t b = a + 1; b < ex.ring.gens.size(); ++b) {
      const EOp c = commutator(ex.ring.gens[a], ex.ring.gens[b]);
      ex.checks.push_back(op_check("commute_" + std::to_string(a) + std::to_string(b), c,
                                   EOp(t), -1, false));
    }
  ex.blocks.push_back({"S", ex.S.str()});
  for (std::size_t n = 0; n < ex.ring.gens.size(); ++n)
    ex.blocks.push_back({"B" + std::to_string(n), ex.ring.gens[n].str()});
}

} // namespace

CatalogExample build_ex_cuspidal(const UPoly &P, const Trunc &t) {
  t.validate();
  require_linear(P);
  CatalogExample ex;
  ex.id = "ex_cuspidal";
  ex.p = P.str();
  const int n = t.nx;
  const D1Series one = D1Series::constant(UPoly(QuadElem(1)), n);
  const D1Series x2 = tabulate(n, [](int k) { return k == 1 ? UPoly(QuadElem(1)) : UPoly(); });
  const D1Series inv = inverse(one - scaled(x2, P));
  const D1Series w = scaled(inv, P);

  assemble(ex, {zmono(0, 2), zmono(0, 3), zmono(1, 0)}, to_eop(w, 0, t, P.deg() >= 1), t);

  // S d2^2 S^-1 = d2^2 - 2 P^2 (1 - x2 P)^-2, built independently of w'.
  const D1Series v = scaled(inv * inv, P * P);
  const EOp d22 = EOp::monomial(t, 0, 2);
  ex.checks.push_back(op_check("conjugate_closed_form", ex.ring.gens[0],
                               d22 - to_eop(v, 0, t).scaled(QuadElem(2)), -1, false));
  // The riccati relation behind it: w' = w^2.
  ex.checks.push_back(series_check("riccati", derivative(w), w * w));

  const EOp literal = compose(compose(invert_unit(ex.S), d22), ex.S);
  const EOp quoted = d22 + to_eop(v, 0, t).scaled(QuadElem(2));
  ex.checks.push_back(op_check("inverse_conjugate_literal", literal, quoted, t.s_min, true));
  ex.checks.push_back(op_check("inverse_conjugate_nonneg", literal, quoted, 0, true));
  ex.blocks.push_back({"S^-1 d2^2 S", literal.str()});
  return ex;
}

CatalogExample build_ex_nodal(const UPoly &P, const Trunc &t) {
  t.validate();
  require_linear(P);
  CatalogExample ex;
  ex.id = "ex_nodal";
  ex.p = P.str();
  const int n = t.nx;
  // a^2 = -3 d1^2; every series below involves only even powers of a.
  const UPoly a2 = UPoly::monomial(2, QuadElem(-3));
  std::vector<UPoly> a2k{UPoly(QuadElem(1))};
  for (int k = 1; k <= n; ++k)
    a2k.push_back(a2k.back() * a2);
  auto inv_fact = [](int k) { return QuadElem(Rat(1) / factorial(k)); };
  const D1Series cosh_ = tabulate(n, [&](int k) {
    return k % 2 ? UPoly() : a2k[k / 2].scaled(inv_fact(k));
  });
  // a sinh(x2 a) and sinh(x2 a)/a.
  const D1Series a_sinh = tabulate(n, [&](int k) {
    return k % 2 ? a2k[(k + 1) / 2].scaled(inv_fact(k)) : UPoly();
  });
  const D1Series sinh_a = tabulate(n, [&](int k) {
    return k % 2 ? a2k[(k - 1) / 2].scaled(inv_fact(k)) : UPoly();
  });
  const D1Series num = scaled(cosh_, P) - a_sinh;
  const D1Series den = cosh_ - scaled(sinh_a, P);
  const D1Series inv = inverse(den);
  const D1Series w = num * inv;

  const ZSeries b = zmono(0, 3) + zmono(2, 1, 3);
  assemble(ex, {zmono(0, 2), b, zmono(1, 0)}, to_eop(w, 0, t, true), t);

  // w(0) = P.
  ex.checks.push_back(series_check("w_at_x2_0", D1Series::constant(w.at(0), 1),
                                   D1Series::constant(P, 1)));
  // 2 w' = 2 (P^2 - a^2)/D^2, the denominator-cleared closed form.
  const D1Series cleared = scaled(inv * inv, P * P - a2);
  ex.checks.push_back(series_check("closed_form", derivative(w), cleared));
  const EOp d22 = EOp::monomial(t, 0, 2);
  ex.checks.push_back(op_check("conjugate_closed_form", ex.ring.gens[0],
                               d22 - to_eop(cleared, 0, t).scaled(QuadElem(2)), -1, false));

  // Symbolic identities over Q(sqrt(-3)) with a = alpha d1.
  const Extension *ext = Extension::intern(Rat(-3));
  const UPoly a = UPoly::monomial(1, QuadElem(Rat(0), Rat(1), ext));
  if ((a + P).is_zero())
    throw DomainError("lambda is undefined for P = -a");
  const RatFun lambda(a - P, a + P);
  const RatFun one(UPoly(QuadElem(1)));
  RatFun lm1 = lambda, lp1 = lambda;
  lm1 -= one;
  lp1 += one;
  ex.checks.push_back(symbolic_check("lambda_at_x2_0", RatFun(-a) * lm1 / lp1, RatFun(P)));
  ex.checks.push_back(symbolic_check("lambda_discriminant",
                                     RatFun((a * a).scaled(QuadElem(-4))) * lambda / (lp1 * lp1),
                                     RatFun(P * P - a2)));

  const EOp literal = compose(compose(invert_unit(ex.S), d22), ex.S);
  const EOp quoted = d22 + to_eop(cleared, 0, t).scaled(QuadElem(2));
  ex.checks.push_back(op_check("inverse_conjugate_literal", literal, quoted, t.s_min, true));
  ex.checks.push_back(op_check("inverse_conjugate_nonneg", literal, quoted, 0, true));
  ex.blocks.push_back({"S^-1 d2^2 S", literal.str()});
  ex.blocks.push_back({"w", series_str(w)});
  return ex;
}

CounterexampleInfo counterexample_info(const std::vector<std::string> &g) {
  CounterexampleInfo info;
  info.g = g;
  info.polynomial = "X1*X2 + X3";
  for (std::size_t q = 0; q < g.size(); ++q) {
    info.polynomial += " + (" + g[q] + ")*X1";
    if (q > 0)
      info.polynomial += "^" + std::to_string(q + 1);
  }
  info.statement = "A = k[X1,X2,X3]/(F) is factorial and smooth; it is not the ring of a "
                   "rank one commutative ring of PDOs with the stated properties";
  info.flag = "non-spectral (stated, not machine-verified)";
  return info;
}

} // namespace sato2d
