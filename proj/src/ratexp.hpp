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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"
#include "opalg.hpp"

namespace sato2d {

// Polynomial in d1 over the session field, coefficients low to high.
class UPoly {
public:
  UPoly() = default;
  UPoly(const QuadElem &c); // NOLINT(google-explicit-constructor)
  static UPoly monomial(int k, const QuadElem &c = QuadElem(1));

  int deg() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_constant() const noexcept { return c_.size() <= 1; }
  QuadElem coeff(int k) const;
  const QuadElem &lead() const { return c_.back(); }
  const std::vector<QuadElem> &coeffs() const noexcept { return c_; }

  UPoly &operator+=(const UPoly &o);
  UPoly &operator-=(const UPoly &o);
  friend UPoly operator+(UPoly a, const UPoly &b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly &b) { return a -= b; }
  friend UPoly operator*(const UPoly &a, const UPoly &b);
  UPoly operator-() const { return scaled(QuadElem(-1)); }
  UPoly scaled(const QuadElem &c) const;
  UPoly monic() const;
  bool operator==(const UPoly &) const = default;

  std::string str(const std::string &var = "d1") const;

private:
  void trim();
  std::vector<QuadElem> c_;
};

struct UDivMod {
  UPoly q;
  UPoly r;
};
UDivMod divmod(const UPoly &a, const UPoly &b);
// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly &a, const UPoly &b);

// Element of k(d1) in lowest terms with monic denominator.
struct RatFun {
  UPoly num;
  UPoly den = UPoly(QuadElem(1));

  RatFun() = default;
  RatFun(UPoly n) : num(std::move(n)) {} // NOLINT(google-explicit-constructor)
  RatFun(UPoly n, UPoly d);

  bool is_zero() const { return num.is_zero(); }
  bool is_poly() const { return den.is_constant(); }
  RatFun &operator+=(const RatFun &o);
  RatFun &operator-=(const RatFun &o);
  friend RatFun operator*(const RatFun &a, const RatFun &b);
  friend RatFun operator/(const RatFun &a, const RatFun &b);
  // Expansion in d1^-1 with exponents >= i_min, as (exponent, coefficient).
  std::vector<std::pair<int, QuadElem>> laurent(int i_min) const;
  // Largest exponent of the part with negative d1-exponents (nullopt if none).
  std::optional<int> top_negative() const;
  std::string str() const;
};

// Polynomial in d1, d2: coefficients of d2^s are polynomials in d1.
class BiPoly {
public:
  BiPoly() = default;
  BiPoly(const QuadElem &c); // NOLINT(google-explicit-constructor)
  static BiPoly monomial(int i, int s, const QuadElem &c = QuadElem(1));
  // Exact symbol with nonnegative exponents.
  static BiPoly from_zseries(const ZSeries &z);

  int deg2() const noexcept { return static_cast<int>(by_d2_.size()) - 1; }
  int total_deg() const;
  bool is_zero() const noexcept { return by_d2_.empty(); }
  bool is_constant() const { return deg2() <= 0 && coeff(0).is_constant(); }
  UPoly coeff(int s) const;
  void set(int s, UPoly c);
  const std::vector<UPoly> &by_d2() const noexcept { return by_d2_; }

  BiPoly &operator+=(const BiPoly &o);
  BiPoly &operator-=(const BiPoly &o);
  friend BiPoly operator+(BiPoly a, const BiPoly &b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly &b) { return a -= b; }
  friend BiPoly operator*(const BiPoly &a, const BiPoly &b);
  BiPoly scaled(const UPoly &c) const;
  bool operator==(const BiPoly &) const = default;

  // Monic gcd of the d2-coefficients.
  UPoly content() const;
  // Exact division by a polynomial in d1; throws DomainError otherwise.
  BiPoly divided(const UPoly &c) const;

  ZSeries to_zseries() const;
  std::string str() const;

private:
  void trim();
  std::vector<UPoly> by_d2_;
};

// Pseudo-remainder in d2 with coefficients in k[d1].
BiPoly prem(const BiPoly &a, const BiPoly &b);
// Gcd normalized so that the top coefficient of its d2-leading coefficient
// is 1; primitive-part Euclid over k(d1).
BiPoly gcd(const BiPoly &a, const BiPoly &b);

struct RatSym {
  BiPoly P;
  BiPoly Q;
  bool coprimality_checked = false;

  // Throws DivisionByZero for Q = 0. The flag is set iff gcd(P, Q) is a
  // constant.
  static RatSym make(BiPoly p, BiPoly q);
  // P/Q with the gcd cancelled; always flagged.
  static RatSym reduced(BiPoly p, BiPoly q);
  std::string str() const;
};

struct Expansion {
  ZSeries series;        // floor s_min unless the division terminated
  int d1_cut = 0;        // d1-exponents below are dropped
  bool negative_d1 = false;
  bool terminated = false; // P/Q is a Laurent polynomial in d2
  bool lead_constant = false; // top d2-coefficient of Q lies in k
  // First level with a coefficient outside k[d1], with its top negative
  // d1-exponent; computed exactly, independent of d1_cut.
  std::optional<OpKey> witness;
};

// Laurent expansion in k((d1^-1))((d2^-1)) on d2-degrees >= t.s_min and
// d1-degrees >= -t.n1.
Expansion expand(const RatSym &r, const Trunc &t);

struct Membership {
  enum class Kind { Inside, Outside, Indeterminate };
  Kind kind = Kind::Inside;
  std::optional<OpKey> witness;
  std::string reason;
};
Membership membership_kd1(const Expansion &e);

struct LemmaReport {
  std::string P;
  std::string Q;
  Trunc window;
  Membership membership;
  int m = 0;
  A1Result::Kind a1 = A1Result::Kind::Holds;
  OpKey a1_at{0, 0};
  BiOrd ord_q{0, 0};
  int total_ord_q = 0;
  bool hypothesis = false;
  bool conclusion = false;
  // hypothesis => conclusion
  bool consistent() const { return !hypothesis || conclusion; }
  std::string line() const;
};

// m defaults to i + s of the leading term of the expansion. Refuses
// (DomainError) unless coprimality is verified.
LemmaReport lemma_check(const RatSym &r, const Trunc &t, std::optional<int> m = std::nullopt);

struct SweepResult {
  int samples = 0;
  int hypothesis_true = 0;
  int violations = 0;
  std::vector<LemmaReport> reports;
};
// Random coprime pairs of total degree <= max_deg with small integer
// coefficients.
SweepResult lemma_sweep(std::uint64_t seed, int count, int max_deg, const Trunc &t);

} // namespace sato2d
