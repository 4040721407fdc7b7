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
#include "opalg.hpp"

namespace sato2d {

// Exponent pair of u^m t^l.
struct UVKey {
  int m;
  int l;
  bool operator==(const UVKey &) const = default;
};

// Valuation order: smaller t-exponent first, then smaller u-exponent.
struct UVKeyOrder {
  bool operator()(const UVKey &a, const UVKey &b) const {
    return a.l != b.l ? a.l < b.l : a.m < b.m;
  }
};

inline constexpr int kNoCap = INT_MAX / 4;

// Truncated element of k[[u]]((t)). Terms with t-exponent >= l_cap() are
// not known.
class UVElem {
public:
  using Terms = std::map<UVKey, QuadElem, UVKeyOrder>;

  UVElem() = default;
  explicit UVElem(int l_cap) : l_cap_(l_cap) {}
  static UVElem monomial(int m, int l, const QuadElem &c = QuadElem(1));

  const Terms &terms() const noexcept { return terms_; }
  int l_cap() const noexcept { return l_cap_; }
  bool exact() const noexcept { return l_cap_ == kNoCap; }
  bool is_zero() const { return terms_.empty(); }
  QuadElem coeff(int m, int l) const;
  void add_to(int m, int l, const QuadElem &c);
  void set_cap(int cap);

  UVElem &operator+=(const UVElem &o);
  UVElem &operator-=(const UVElem &o);
  friend UVElem operator+(UVElem a, const UVElem &b) { return a += b; }
  friend UVElem operator-(UVElem a, const UVElem &b) { return a -= b; }
  UVElem scaled(const QuadElem &c) const;
  bool operator==(const UVElem &) const = default;

  std::string str() const;

private:
  Terms terms_;
  int l_cap_ = kNoCap;
};

UVElem uv_mul(const UVElem &f, const UVElem &g);

// z1^-i z2^s -> u^i t^(s-i), i.e. d1^i d2^s -> u^i t^(-i-s). Terms below the
// d2-floor are assumed to have d1-degree at most that of the known terms.
UVElem psi1(const ZSeries &z);
ZSeries psi1_inv(const UVElem &f);

UVKey nu(const UVElem &f);
int nu_t(const UVElem &f);
UVKey nu(const ZSeries &z);

// Minimal monomial under the anti-lexicographic order: largest d2-degree,
// then largest d1-degree.
OpKey lowest_term(const ZSeries &z);

// Row echelon form keyed by valuation; rows have distinct leading pairs.
class ValuationEchelon {
public:
  // Reduces v against the rows; stores it when a new pair leads. Returns
  // the leading pair of the stored row, or nullopt when v lies in the span.
  std::optional<UVKey> insert(UVElem v);
  // Cancels leading terms against the rows; zero means v lies in the span.
  UVElem reduce(UVElem v) const;
  const std::map<UVKey, UVElem, UVKeyOrder> &rows() const noexcept { return rows_; }

private:
  std::map<UVKey, UVElem, UVKeyOrder> rows_;
};

struct SpanTable {
  int r = 1;
  int n_max = 0;
  int bound = 0; // largest degree of the generator products used
  std::vector<int> dims;                 // dims[n] = dim W_n
  std::vector<std::vector<UVKey>> lead;  // leading pairs new at level n
};

// Products of generators with degree (minus t-valuation) at most bound. With
// ring_gens empty the generators span a ring (1 included); otherwise gens
// generate a module over the ring spanned by ring_gens.
std::vector<UVElem> generated_span(const std::vector<ZSeries> &gens,
                                   const std::vector<ZSeries> &ring_gens, int bound);

SpanTable filtration_dims(const std::vector<ZSeries> &gens, const std::vector<ZSeries> &ring_gens,
                          int n_max, int r, int bound = -1);
std::vector<int> graded_quotient(const SpanTable &table, int n);

struct HilbertFit {
  Rat c2;
  int from = 0; // first n with dims(n d) inside the constant range
  int to = 0;
  bool integral = true;
  std::vector<long> second_diffs;
};
HilbertFit hilbert_fit(const SpanTable &table, int d);

struct Invariants {
  int N = 0;
  int N_tilde = 0;
  bool strongly_admissible = false;
  std::optional<int> rank;
  int bound = 0;
};
Invariants invariants_NA(const std::vector<ZSeries> &gens, int bound = -1);

// Degree of a symbol: minus its t-valuation.
int symbol_degree(const ZSeries &z);

} // namespace sato2d
