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

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "series.hpp"

namespace sato2d {

// Truncation window shared by operators of a session.
struct Trunc {
  int nx = 8;   // x-degree cap for coefficients
  int n1 = 6;   // d1-degree cap
  int s_min = -8;
  int s_max = 4; // declared upper window; compose may exceed it (finite side)
  void validate() const;
  bool operator==(const Trunc &) const = default;
};

// Marker for "no lower d2 bound": the operator is exact in d2.
inline constexpr int kNoFloor = INT_MIN / 4;

struct OpKey {
  int i; // d1-degree
  int s; // d2-degree
  bool operator==(const OpKey &) const = default;
};

// Canonical term order: d2-degree descending, then d1-degree descending.
struct OpKeyOrder {
  bool operator()(const OpKey &a, const OpKey &b) const {
    return a.s != b.s ? a.s > b.s : a.i > b.i;
  }
};

struct BiOrd {
  int k;
  int l;
  bool operator==(const BiOrd &) const = default;
};

class ZSeries;

// Truncated element of the completed operator ring, stored in left-normal
// form sum f_{i,s}(x) d1^i d2^s. Each coefficient carries its own precision.
// Missing keys are exact zeros unless s < floor(), where nothing is known.
// n1 bounds the d1-degree of inputs; products may exceed it, since for
// operators satisfying A1 the x-precision already bounds the d1-degree.
class EOp {
public:
  using Terms = std::map<OpKey, XSeries, OpKeyOrder>;

  EOp() = default;
  explicit EOp(const Trunc &t) : trunc_(t) {}
  static EOp identity(const Trunc &t);
  static EOp monomial(const Trunc &t, int i, int s, const XSeries &c = XSeries::constant(1));
  static EOp function(const Trunc &t, const XSeries &f) { return monomial(t, 0, 0, f); }

  const Trunc &trunc() const noexcept { return trunc_; }
  const Terms &terms() const noexcept { return terms_; }
  int floor() const noexcept { return floor_; }
  bool window_dropped() const noexcept { return dropped_; }
  bool exact_in_d2() const noexcept { return floor_ == kNoFloor; }
  // True when every coefficient is an exact polynomial and nothing was cut.
  bool exact() const;
  // Smallest coefficient precision; kExact for exact ops.
  int prec() const;

  // Stored coefficient, or the implied zero (exact / unknown) otherwise.
  XSeries coeff(int i, int s) const;
  bool known(int, int s) const { return s >= floor_; }
  void set(int i, int s, XSeries c);
  void add_to(int i, int s, const XSeries &c);
  // Drop stored coefficients that are exact zeros.
  void prune();

  // Largest d2-degree with a nonzero coefficient (nullopt if none).
  std::optional<int> top_s() const;
  // True when no stored coefficient is nonzero.
  bool is_zero() const;

  void set_floor(int f) { floor_ = f; }
  void mark_dropped() { dropped_ = true; }

  EOp operator-() const;
  EOp &operator+=(const EOp &o);
  EOp &operator-=(const EOp &o);
  friend EOp operator+(EOp a, const EOp &b) { return a += b; }
  friend EOp operator-(EOp a, const EOp &b) { return a -= b; }
  EOp scaled(const QuadElem &c) const;
  // f * p (f acts on the left; left-normal form needs no reordering).
  EOp left_mul(const XSeries &f) const;
  // Keep only terms with s >= s_lo; terms below become unknown.
  EOp restricted(int s_lo) const;
  // Drop terms with s < 0 (nonnegative d2 part); exact in d2 afterwards
  // when the floor was at most 0.
  EOp nonneg_part() const;

  std::string str() const;

private:
  Trunc trunc_;
  Terms terms_;
  int floor_ = kNoFloor;
  bool dropped_ = false;
};

// Product p o q.
EOp compose(const EOp &p, const EOp &q);
EOp commutator(const EOp &p, const EOp &q);
// Inverse of f + (terms with s < 0, or s = 0 and i = 0 with f a unit).
EOp invert_unit(const EOp &p);
// t^-1 p t.
EOp conjugate(const EOp &t, const EOp &p);
// Exponential series of an operator whose powers tend to zero in the window.
EOp op_exp(const EOp &p);

BiOrd ord_gamma(const EOp &p);

struct A1Result {
  enum class Kind { Holds, Fails, Indeterminate };
  Kind kind = Kind::Holds;
  OpKey at{0, 0};     // witness for Fails / Indeterminate
  std::string reason; // human readable
};
A1Result check_a1(const EOp &p, int m);
bool is_monic(const EOp &p);
bool is_normalized_pair(const EOp &p, const EOp &q);

// Comparison in the quotient: coefficients modulo (x)^nx, d2-degrees >= s_lo.
struct Quotient {
  int nx;
  int s_lo;
};
struct Compare {
  enum class Kind { Equal, Different, Indeterminate };
  Kind kind = Kind::Equal;
  OpKey at{0, 0};
  std::string reason;
  explicit operator bool() const { return kind == Kind::Equal; }
};
Compare compare(const EOp &p, const EOp &q, const Quotient &qt);

// Constant-coefficient element of k[z1^-1]((z2)) (= k[d1]((d2^-1))), keyed by
// d-exponents (i, s). Terms with s < floor() are unknown; i may be negative
// only for expansions outside k[d1].
class ZSeries {
public:
  using Terms = std::map<OpKey, QuadElem, OpKeyOrder>;

  ZSeries() = default;
  explicit ZSeries(int floor) : floor_(floor) {}
  static ZSeries monomial(int i, int s, const QuadElem &c = QuadElem(1), int floor = kNoFloor);

  const Terms &terms() const noexcept { return terms_; }
  int floor() const noexcept { return floor_; }
  void set_floor(int f);
  QuadElem coeff(int i, int s) const;
  void set(int i, int s, const QuadElem &c);
  void add_to(int i, int s, const QuadElem &c);
  bool is_zero() const { return terms_.empty(); }
  bool exact() const { return floor_ == kNoFloor; }
  // Leading monomial: largest s, then largest i (nullopt if zero).
  std::optional<OpKey> lead() const;

  ZSeries operator-() const;
  ZSeries &operator+=(const ZSeries &o);
  ZSeries &operator-=(const ZSeries &o);
  friend ZSeries operator+(ZSeries a, const ZSeries &b) { return a += b; }
  friend ZSeries operator-(ZSeries a, const ZSeries &b) { return a -= b; }
  ZSeries scaled(const QuadElem &c) const;
  ZSeries restricted(int s_lo) const;
  // Equal on all d2-degrees >= s_lo (both must be known there).
  bool equal_from(const ZSeries &o, int s_lo) const;
  bool operator==(const ZSeries &o) const;

  // Text in d-notation ("d1*d2^-1 + 1") or z-notation ("z1^-1*z2 + 1").
  std::string str(bool z_notation = false) const;

private:
  Terms terms_;
  int floor_ = kNoFloor;
};

// Commutative product; unknown below min(f.floor + top g, g.floor + top f).
ZSeries z_mul(const ZSeries &f, const ZSeries &g);
ZSeries reduce_mod_x(const EOp &p);
EOp lift(const ZSeries &w, const Trunc &t);
// Right action of an operator on a constant-coefficient symbol.
ZSeries act(const ZSeries &w, const EOp &t);

} // namespace sato2d
