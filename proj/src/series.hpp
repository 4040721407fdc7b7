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

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "field.hpp"

namespace sato2d {

// Precision carried by series that are exact polynomials.
inline constexpr int kExact = 1 << 28;

inline int prec_min(int a, int b) { return a < b ? a : b; }
// Sum of two precisions/orders, saturating at kExact.
inline int prec_add(int a, int b) {
  long s = static_cast<long>(a) + b;
  return s >= kExact ? kExact : static_cast<int>(s);
}

enum class Var { X1, X2 };

// M-adic order. Unknown means "zero modulo (x1,x2)^bound".
struct OrdM {
  enum class Kind { Finite, Infinite, Unknown };
  Kind kind = Kind::Infinite;
  int value = 0;

  static OrdM finite(int v) { return {Kind::Finite, v}; }
  static OrdM infinite() { return {Kind::Infinite, 0}; }
  static OrdM unknown(int bound) { return {Kind::Unknown, bound}; }
  // Lower bound usable in inequalities (Infinite -> kExact).
  int lower_bound() const { return kind == Kind::Infinite ? kExact : value; }
  bool operator==(const OrdM &) const = default;
  std::string str() const;
};

// Truncated power series in x1, x2: known exactly modulo (x1,x2)^prec.
// Terms are kept sorted by (total degree, x1-degree descending) and no zero
// coefficient is stored. prec == kExact marks an exact polynomial.
class XSeries {
public:
  struct Term {
    int i; // x1 exponent
    int j; // x2 exponent
    QuadElem c;
  };

  XSeries() = default; // exact zero
  static XSeries zero(int prec = kExact);
  static XSeries constant(const QuadElem &c);
  static XSeries monomial(int i, int j, const QuadElem &c);
  static XSeries from_terms(std::vector<Term> terms, int prec);

  bool exact() const noexcept { return prec_ >= kExact; }
  int prec() const noexcept { return prec_; }
  const std::vector<Term> &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_exact_zero() const noexcept { return terms_.empty() && exact(); }
  bool is_constant() const;
  QuadElem coeff(int i, int j) const;
  QuadElem constant_term() const { return coeff(0, 0); }
  int degree() const; // max total degree of a stored term, -1 if none

  XSeries truncated(int prec) const;
  XSeries operator-() const;
  XSeries &operator+=(const XSeries &o);
  XSeries &operator-=(const XSeries &o);
  friend XSeries operator+(XSeries a, const XSeries &b) { return a += b; }
  friend XSeries operator-(XSeries a, const XSeries &b) { return a -= b; }
  XSeries scaled(const QuadElem &c) const;

  // Equal modulo (x1,x2)^p; both operands must be known to p.
  bool equal_mod(const XSeries &o, int p) const;
  // Exact equality of stored data including precision.
  bool operator==(const XSeries &o) const;

  // Substitutes var = 0.
  XSeries at_zero(Var v) const;
  // Integral from 0 in var; precision rises by one.
  XSeries integrate(Var v) const;

  std::string str() const;

private:
  void add_scaled(const XSeries &o, const QuadElem *scale, bool negate);

  std::vector<Term> terms_;
  int prec_ = kExact;
};

// Product with prec = min(f.prec, g.prec).
XSeries x_mul(const XSeries &f, const XSeries &g);
// Product with the sharper bound min(pf + ord g, pg + ord f), optionally capped.
XSeries x_mul_tracked(const XSeries &f, const XSeries &g, int cap = kExact);
// d/dx_var; precision drops by one. Throws PrecisionError at prec 0.
XSeries x_diff(const XSeries &f, Var v);
// d^a/dx1^a d^b/dx2^b with precision prec - a - b (may reach <= 0, in which
// case the result is an unknown zero).
XSeries x_diff_n(const XSeries &f, int a, int b);
// Inverse of a unit; cap bounds the precision when f is exact and nonconstant.
XSeries x_inv(const XSeries &f, int cap = kExact);
// exp(f) for f with zero constant term.
XSeries x_exp(const XSeries &f, int cap = kExact);
// M-adic order; an exact zero has order infinity, a truncated zero is unknown.
OrdM ord_m(const XSeries &f);

} // namespace sato2d
