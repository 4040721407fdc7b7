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

int iteration_bound(const Trunc &t) { return t.nx + t.n1 + (t.s_max - t.s_min) + 8; }

std::string key_str(const OpKey &k) {
  return "(" + std::to_string(k.i) + "," + std::to_string(k.s) + ")";
}

// Sum of a power series in an operator: sum_n c_n m^n until two consecutive
// powers vanish inside the window.
template <class Coef>
EOp power_series(const EOp &m, Coef coef, const char *what) {
  const Trunc &t = m.trunc();
  EOp sum = EOp::identity(t);
  EOp pw = EOp::identity(t);
  int zero_run = 0;
  for (int n = 1; n <= iteration_bound(t); ++n) {
    pw = compose(pw, m);
    sum += pw.scaled(coef(n));
    zero_run = pw.is_zero() ? zero_run + 1 : 0;
    if (zero_run >= 2)
      return sum;
  }
  throw NonUnitError(std::string(what) + " does not converge inside the truncation window");
}

} // namespace

EOp invert_unit(const EOp &p) {
  const Trunc &t = p.trunc();
  for (const auto &[k, c] : p.terms()) {
    if (c.is_zero())
      continue;
    if (k.s > 0)
      throw NonUnitError("operator has a positive d2-degree term at " + key_str(k));
    if (k.s == 0 && k.i > 0 && !c.constant_term().is_zero())
      throw NonUnitError("operator has a d1-term with invertible coefficient at " + key_str(k));
  }
  if (!p.known(0, 0))
    throw PrecisionError("constant term of the operator is not known");
  XSeries f = p.coeff(0, 0);
  if (f.constant_term().is_zero())
    throw NonUnitError("leading coefficient is not a unit in k[[x1,x2]]");
  XSeries fi = x_inv(f, t.nx);
  // p = f (1 + m), m = f^-1 (p - f), p^-1 = (sum (-m)^n) f^-1.
  EOp rest = p;
  rest.set(0, 0, XSeries::zero(f.prec()));
  rest.prune();
  EOp m = rest.left_mul(fi);
  EOp neumann = power_series(m, [](int n) { return QuadElem(n % 2 ? -1 : 1); }, "Neumann series");
  return compose(neumann, EOp::function(t, fi));
}

EOp conjugate(const EOp &t, const EOp &p) { return compose(compose(invert_unit(t), p), t); }

EOp op_exp(const EOp &p) {
  for (const auto &[k, c] : p.terms())
    if (k.s > 0 || (k.s == 0 && !c.constant_term().is_zero()))
      throw DomainError("exp needs an operator that is topologically nilpotent; term " +
                        key_str(k) + " is not");
  Rat fact(1);
  return power_series(
      p,
      [&](int n) {
        fact *= n;
        return QuadElem(Rat(1) / fact);
      },
      "exponential series");
}

BiOrd ord_gamma(const EOp &p) {
  // Coefficients that vanish to a positive certified precision count as zero.
  auto top = p.top_s();
  if (!top) {
    if (p.exact() || p.terms().empty())
      throw DomainError("ord_gamma of the zero operator is undefined");
    throw IndeterminateError("operator vanishes inside the window; order is not certified");
  }
  int l = *top;
  for (const auto &[k, c] : p.terms())
    if (k.s > l && c.prec() <= 0)
      throw IndeterminateError("coefficient at " + key_str(k) + " above the top is not certified");
  int kmax = -1;
  for (const auto &[k, c] : p.terms())
    if (k.s == l && !c.is_zero())
      kmax = std::max(kmax, k.i);
  for (const auto &[k, c] : p.terms())
    if (k.s == l && c.prec() <= 0 && k.i > kmax)
      throw IndeterminateError("coefficient at " + key_str(k) + " is not certified");
  return {kmax, l};
}

A1Result check_a1(const EOp &p, int m) {
  A1Result res;
  for (const auto &[k, c] : p.terms()) {
    int need = k.i + k.s - m;
    if (need <= 0)
      continue;
    OrdM o = ord_m(c);
    if (o.kind == OrdM::Kind::Infinite)
      continue;
    if (o.kind == OrdM::Kind::Finite) {
      if (o.value < need) {
        res.kind = A1Result::Kind::Fails;
        res.at = k;
        res.reason = "ord_M of the coefficient at " + key_str(k) + " is " +
                     std::to_string(o.value) + " < " + std::to_string(need);
        return res;
      }
      continue;
    }
    // Stored zero known only modulo (x)^prec.
    if (o.value < need && res.kind == A1Result::Kind::Holds) {
      res.kind = A1Result::Kind::Indeterminate;
      res.at = k;
      res.reason = "coefficient at " + key_str(k) + " is zero only modulo degree " +
                   std::to_string(o.value) + ", need " + std::to_string(need);
    }
  }
  return res;
}

namespace {

// Zero up to a positive certified precision.
bool certified_zero(const XSeries &c) { return c.is_zero() && c.prec() > 0; }

bool certified_one(const XSeries &c) {
  return certified_zero(c - XSeries::constant(1));
}

// Only the listed term is present on d2-level s.
bool level_is_single(const EOp &p, int s, int i_only) {
  for (const auto &[k, c] : p.terms())
    if (k.s == s && k.i != i_only && !certified_zero(c))
      return false;
  return certified_one(p.coeff(i_only, s));
}

bool level_is_zero(const EOp &p, int s) {
  if (!p.known(0, s))
    return false;
  for (const auto &[k, c] : p.terms())
    if (k.s == s && !certified_zero(c))
      return false;
  return true;
}

} // namespace

bool is_monic(const EOp &p) {
  BiOrd o = ord_gamma(p);
  return certified_one(p.coeff(o.k, o.l));
}

bool is_normalized_pair(const EOp &p, const EOp &q) {
  BiOrd op = ord_gamma(p), oq = ord_gamma(q);
  if (op.k != 0 || oq.k != 1)
    return false;
  if (!level_is_single(p, op.l, 0) || !level_is_single(q, oq.l, 1))
    return false;
  return level_is_zero(p, op.l - 1);
}

Compare compare(const EOp &p, const EOp &q, const Quotient &qt) {
  Compare res;
  auto indeterminate = [&](const OpKey &k, const std::string &why) {
    if (res.kind == Compare::Kind::Equal) {
      res.kind = Compare::Kind::Indeterminate;
      res.at = k;
      res.reason = why;
    }
  };
  if (p.floor() > qt.s_lo || q.floor() > qt.s_lo)
    indeterminate({0, qt.s_lo}, "d2-window does not reach degree " + std::to_string(qt.s_lo));
  std::vector<OpKey> keys;
  for (const auto &kv : p.terms())
    keys.push_back(kv.first);
  for (const auto &kv : q.terms())
    keys.push_back(kv.first);
  std::sort(keys.begin(), keys.end(), OpKeyOrder());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  for (const auto &k : keys) {
    if (k.s < qt.s_lo)
      continue;
    XSeries a = p.coeff(k.i, k.s), b = q.coeff(k.i, k.s);
    int pa = std::min(a.prec(), qt.nx), pb = std::min(b.prec(), qt.nx);
    int pc = std::min(pa, pb);
    if (!a.equal_mod(b, pc)) {
      res.kind = Compare::Kind::Different;
      res.at = k;
      res.reason = "coefficients differ at " + key_str(k) + ": " + a.truncated(pc).str() +
                   " vs " + b.truncated(pc).str();
      return res;
    }
    if (pc < qt.nx)
      indeterminate(k, "coefficient at " + key_str(k) + " certified only modulo degree " +
                           std::to_string(pc));
  }
  return res;
}

} // namespace sato2d
