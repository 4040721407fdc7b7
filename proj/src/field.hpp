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

#include <gmpxx.h>

#include <optional>
#include <string>

namespace sato2d {

using Rat = mpq_class;
using Int = mpz_class;

// Interned extension constant d (alpha^2 = d). Instances live for the whole
// process; equal constants share one instance, so pointer equality is value
// equality.
class Extension {
public:
  static const Extension *intern(const Rat &d);
  const Rat &d() const noexcept { return d_; }

private:
  explicit Extension(Rat d) : d_(std::move(d)) {}
  Rat d_;
};

// True iff d is the square of a rational (tested on numerator*denominator).
bool is_rational_square(const Rat &d);

// a + b*alpha. Elements built without an extension tag are plain rationals
// and combine with any extension; two tagged elements must agree on d.
class QuadElem {
public:
  QuadElem() = default;
  QuadElem(long v) : a_(v) {} // NOLINT(google-explicit-constructor)
  QuadElem(Rat a) : a_(std::move(a)) { a_.canonicalize(); } // NOLINT
  QuadElem(Rat a, Rat b, const Extension *ext);

  const Rat &a() const noexcept { return a_; }
  const Rat &b() const noexcept { return b_; }
  const Extension *ext() const noexcept { return ext_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadElem operator-() const;
  QuadElem &operator+=(const QuadElem &o);
  QuadElem &operator-=(const QuadElem &o);
  QuadElem &operator*=(const QuadElem &o);
  // Accumulates x*y without a temporary when both are rational.
  void add_product(const QuadElem &x, const QuadElem &y);

  friend QuadElem operator+(QuadElem x, const QuadElem &y) { return x += y; }
  friend QuadElem operator-(QuadElem x, const QuadElem &y) { return x -= y; }
  friend QuadElem operator*(QuadElem x, const QuadElem &y) { return x *= y; }
  friend bool operator==(const QuadElem &x, const QuadElem &y);
  friend bool operator!=(const QuadElem &x, const QuadElem &y) { return !(x == y); }

  QuadElem inverse() const;
  QuadElem operator/(const QuadElem &o) const { return *this * o.inverse(); }

  // "p/q" or "p/q+r/s*alpha"; integers print without denominator.
  std::string str() const;

private:
  static const Extension *join(const Extension *x, const Extension *y);

  Rat a_;
  Rat b_;
  const Extension *ext_ = nullptr;
};

// Session field: Q, or Q(alpha) with alpha^2 = d fixed once.
class Field {
public:
  Field() = default;
  static Field rationals() { return Field(); }
  static Field quadratic(const Rat &d);
  // Accepts "Q" and "Q(sqrt,<d>)".
  static Field parse(const std::string &text);

  bool has_alpha() const noexcept { return ext_ != nullptr; }
  const Extension *ext() const noexcept { return ext_; }
  QuadElem alpha() const;
  std::string name() const;
  std::string d_str() const;

private:
  const Extension *ext_ = nullptr;
};

// Generalized binomial coefficient C(s, k) = s(s-1)...(s-k+1)/k! for any
// integer s and k >= 0.
Rat binomial(long s, long k);
Rat factorial(long n);

} // namespace sato2d
