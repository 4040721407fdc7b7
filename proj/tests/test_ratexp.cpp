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

#include <doctest.h>

#include "errors.hpp"
#include "ratexp.hpp"

using namespace sato2d;

namespace {

BiPoly m(int i, int s, long c = 1) { return BiPoly::monomial(i, s, QuadElem(c)); }

Trunc win(int s_min, int n1) { return Trunc{8, n1, s_min, 4}; }

// Oracle: 1/(d2 - c d1)^2 = sum_k (k+1) c^k d1^k d2^(-2-k).
ZSeries inverse_square_oracle(long c, int s_min) {
  ZSeries z(s_min);
  Rat ck = 1;
  for (int k = 0; -2 - k >= s_min; ++k) {
    z.add_to(k, -2 - k, QuadElem(Rat(k + 1) * ck));
    ck *= c;
  }
  return z;
}

} // namespace

TEST_CASE("univariate arithmetic and gcd") {
  UPoly x = UPoly::monomial(1);
  UPoly a = (x - UPoly(QuadElem(1))) * (x + UPoly(QuadElem(2)));
  UPoly b = (x - UPoly(QuadElem(1))) * (x * x + UPoly(QuadElem(3)));
  CHECK(gcd(a, b) == x - UPoly(QuadElem(1)));
  auto [q, r] = divmod(b, a);
  CHECK(q * a + r == b);
  CHECK(r.deg() < a.deg());
}

TEST_CASE("Laurent expansion in d1^-1") {
  // 1/(d1 - 1) = d1^-1 + d1^-2 + ...
  RatFun f(UPoly(QuadElem(1)), UPoly::monomial(1) - UPoly(QuadElem(1)));
  auto terms = f.laurent(-5);
  REQUIRE(terms.size() == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(terms[k].first == -1 - k);
    CHECK(terms[k].second == QuadElem(1));
  }
  CHECK(f.top_negative() == -1);
  // (d1^2 + 1)/d1 = d1 + d1^-1
  RatFun g(UPoly::monomial(2) + UPoly(QuadElem(1)), UPoly::monomial(1));
  auto gt = g.laurent(-3);
  REQUIRE(gt.size() == 2);
  CHECK(gt[0].first == 1);
  CHECK(gt[1].first == -1);
}

TEST_CASE("bivariate gcd") {
  BiPoly common = m(1, 0) + m(0, 1);
  BiPoly a = common * (m(0, 2) + m(0, 0));
  BiPoly b = common * (m(1, 0) - m(0, 0, 3));
  CHECK(gcd(a, b) == common);
  CHECK(gcd(m(1, 0), m(0, 1)).is_constant());
  // Common factor in d1 alone.
  BiPoly c = m(1, 0) - m(0, 0, 2);
  CHECK(gcd(c * m(0, 1), c * (m(0, 2) + m(1, 0))) == c);
  RatSym r = RatSym::reduced(a, b);
  CHECK(r.coprimality_checked);
  CHECK(r.P * b == r.Q * a);
  CHECK_FALSE(RatSym::make(a, b).coprimality_checked);
  CHECK_THROWS_AS(RatSym::make(m(0, 0), BiPoly()), DivisionByZero);
}

TEST_CASE("geometric series for 1/(d2 - d1)") {
  const Trunc t = win(-8, 6);
  Expansion e = expand(RatSym::make(m(0, 0), m(0, 1) - m(1, 0)), t);
  CHECK_FALSE(e.terminated);
  CHECK_FALSE(e.negative_d1);
  CHECK(e.series.floor() == -8);
  ZSeries oracle(-8);
  for (int k = 0; -1 - k >= -8; ++k)
    oracle.add_to(k, -1 - k, QuadElem(1));
  CHECK(e.series == oracle);
  CHECK(membership_kd1(e).kind == Membership::Kind::Inside);
}

TEST_CASE("binomial series for 1/(d2 - 2 d1)^2") {
  BiPoly q = m(0, 1) - m(1, 0, 2);
  Expansion e = expand(RatSym::make(m(0, 0), q * q), win(-9, 6));
  CHECK(e.series == inverse_square_oracle(2, -9));
}

TEST_CASE("trivial expansions") {
  const Trunc t = win(-6, 4);
  Expansion a = expand(RatSym::make(m(1, 1), m(0, 1)), t);
  CHECK(a.terminated);
  CHECK(a.series.exact());
  CHECK(a.series == ZSeries::monomial(1, 0));

  Expansion b = expand(RatSym::make(m(0, 0), m(1, 0)), t);
  CHECK(b.negative_d1);
  CHECK(b.series == ZSeries::monomial(-1, 0));
  Membership mb = membership_kd1(b);
  CHECK(mb.kind == Membership::Kind::Outside);
  REQUIRE(mb.witness);
  CHECK(*mb.witness == OpKey{-1, 0});

  Membership mc = membership_kd1(expand(RatSym::make(m(0, 0), m(1, 1)), t));
  CHECK(mc.kind == Membership::Kind::Outside);
  REQUIRE(mc.witness);
  CHECK(*mc.witness == OpKey{-1, -1});
}

TEST_CASE("d1-cut drops deep negative exponents only") {
  // 1/(d1 - 1) at d2-degree 0, cut at d1^-3.
  Expansion e = expand(RatSym::make(m(0, 0), m(1, 0) - m(0, 0)), win(-4, 3));
  CHECK(e.series.terms().size() == 3);
  CHECK(e.series.coeff(-3, 0) == QuadElem(1));
  CHECK(e.witness == OpKey{-1, 0});
}

TEST_CASE("expansion is multiplicative and inverts Q") {
  const Trunc t = win(-10, 12);
  BiPoly p1 = m(0, 0), q1 = m(0, 1) - m(1, 0);
  BiPoly p2 = m(1, 0) + m(0, 1), q2 = m(0, 2) + m(1, 0);
  ZSeries e1 = expand(RatSym::make(p1, q1), t).series;
  ZSeries e2 = expand(RatSym::make(p2, q2), t).series;
  ZSeries e12 = expand(RatSym::make(p1 * p2, q1 * q2), t).series;
  ZSeries prod = z_mul(e1, e2);
  CHECK(prod.floor() <= t.s_min);
  CHECK(prod.equal_from(e12, t.s_min));

  // Outside k[d1]: the d1-cut moves by the largest d1-degree of the factor.
  BiPoly p3 = m(0, 1), q3 = m(1, 1) + m(0, 0);
  Expansion e3 = expand(RatSym::make(p3, q3), t);
  ZSeries back = z_mul(e3.series, q3.to_zseries());
  ZSeries expect = p3.to_zseries();
  const ZSeries window = back.restricted(t.s_min + 1);
  for (const auto &[k, c] : window.terms())
    if (k.i > e3.d1_cut + 1)
      CHECK(c == expect.coeff(k.i, k.s));
  CHECK(expect.coeff(0, 1) == back.coeff(0, 1));
}

TEST_CASE("membership needs a window when the top coefficient varies") {
  // P/Q = (d1*d2 + 1)/(d1*d2 + 1 + d1) expands as 1 - d1^-1*d2^-1 + ... : outside.
  Membership out = membership_kd1(
      expand(RatSym::make(m(1, 1) + m(0, 0), m(1, 1) + m(0, 0) + m(1, 0)), win(-6, 6)));
  CHECK(out.kind == Membership::Kind::Outside);
  // d1*d2/(d1*d2 + d1^2) = 1/(1 + d1 d2^-1): coefficients stay in k[d1], Q has
  // the common factor d1 so the top coefficient is not constant.
  Expansion e = expand(RatSym::make(m(0, 1), m(0, 1) + m(1, 0)), win(-6, 6));
  CHECK(membership_kd1(e).kind == Membership::Kind::Inside);
  Expansion f = expand(RatSym::make(m(1, 1), m(1, 1) + m(2, 0)), win(-6, 6));
  CHECK(f.series == e.series);
  CHECK(membership_kd1(f).kind == Membership::Kind::Indeterminate);
}

TEST_CASE("membership lemma fixtures") {
  const Trunc t = win(-8, 6);
  LemmaReport pos = lemma_check(RatSym::make(m(0, 0), m(0, 1) - m(1, 0)), t);
  CHECK(pos.hypothesis);
  CHECK(pos.conclusion);
  CHECK(pos.m == -1);

  LemmaReport vac = lemma_check(RatSym::make(m(0, 0), m(1, 1)), t);
  CHECK_FALSE(vac.hypothesis);
  CHECK(vac.membership.kind == Membership::Kind::Outside);
  CHECK(vac.consistent());

  // Constant top coefficient but ord_gamma(Q) = (0,1) while ord(Q) = 2: the
  // expansion is in k[d1]((d2^-1)) and A1 fails.
  LemmaReport a1 = lemma_check(RatSym::make(m(0, 0), m(0, 1) + m(2, 0)), t);
  CHECK(a1.membership.kind == Membership::Kind::Inside);
  CHECK(a1.a1 == A1Result::Kind::Fails);
  CHECK(a1.a1_at == OpKey{2, -2});
  CHECK_FALSE(a1.conclusion);
  CHECK(a1.consistent());

  BiPoly g = m(0, 1) + m(1, 0);
  CHECK_THROWS_AS(lemma_check(RatSym::make(g * m(0, 1), g), t), DomainError);
}

TEST_CASE("membership lemma sweep over random coprime pairs") {
  SweepResult s = lemma_sweep(20260419, 200, 4, win(-10, 8));
  CHECK(s.samples == 200);
  CHECK(s.violations == 0);
  CHECK(s.hypothesis_true > 0);
  for (const auto &r : s.reports)
    if (!r.consistent())
      INFO(r.line());
}
