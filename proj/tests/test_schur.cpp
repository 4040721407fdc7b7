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

#include <random>

#include "errors.hpp"
#include "gen.hpp"
#include "schur.hpp"

using namespace sato2d;

namespace {

const Trunc kT{6, 6, -12, 4};

XSeries poly(std::initializer_list<XSeries::Term> t, int prec = kExact) {
  return XSeries::from_terms(std::vector<XSeries::Term>(t), prec);
}

ZSeries z(int i, int s, long c = 1) { return ZSeries::monomial(i, s, QuadElem(c)); }

std::vector<ZSeries> w0(int bound) {
  std::vector<ZSeries> out;
  for (int n = 0; n <= bound; ++n)
    for (int i = 0; i <= n; ++i)
      out.push_back(z(i, n - i));
  return out;
}

// S = 1 + c/(1 - c x2) d2^-1 for a constant c.
EOp cusp_dressing(const Rat &c, const Trunc &t) {
  XSeries w = x_inv(poly({{0, 0, 1}, {0, 1, QuadElem(Rat(-c))}}), t.nx).scaled(QuadElem(c));
  return EOp::identity(t) + EOp::monomial(t, 0, -1, w);
}

SchurPair cusp_pair(const Rat &c, const Trunc &t) {
  SchurPair p;
  p.window = t;
  p.a_gens = {z(0, 2), z(0, 3), z(1, 0)};
  p.w_gens = dressed_basis(cusp_dressing(c, t), t.nx - 1);
  return p;
}

std::vector<ZSeries> admissible_image(const EOp &s) {
  const int b = s.trunc().nx - 1;
  return admissible_basis(dressed_basis(s, b), {}, b);
}

bool same(const EOp &a, const EOp &b, int nx, int s_lo) {
  Compare c = compare(a, b, Quotient{nx, s_lo});
  INFO(c.reason);
  CHECK(c.kind == Compare::Kind::Equal);
  return c.kind == Compare::Kind::Equal;
}

} // namespace

TEST_CASE("admissible basis") {
  auto b = admissible_basis(w0(4), {}, 4);
  REQUIRE(b.size() == 15);
  CHECK(b == w0(4));

  // Trivial pair given by module generators.
  auto b2 = admissible_basis({z(0, 0)}, {z(1, 0), z(0, 1)}, 4);
  CHECK(b2 == w0(4));

  auto pair = cusp_pair(Rat(1), kT);
  auto cb = admissible_basis(pair.w_gens, pair.a_gens, 3);
  CHECK(cb[0] == z(0, 0) + z(0, -1));
  // w01 = d2 + w(0) + w'(0) d2^-1 ... after clearing nonnegative tails.
  for (const auto &w : cb)
    for (const auto &[k, c] : w.terms())
      if (!(k == lowest_term(w)))
        CHECK(k.s < 0);

  // Mixed spanning sets are echelonized to the same basis.
  std::vector<ZSeries> mixed = pair.w_gens;
  mixed[1] += mixed[0].scaled(QuadElem(3));
  CHECK(admissible_basis(mixed, {}, 3) == cb);

  auto gap = w0(3);
  gap.erase(gap.begin() + 2); // (1,0)
  CHECK_THROWS_AS(admissible_basis(gap, {}, 3), ConstructionError);
  CHECK_THROWS_AS(admissible_basis({z(0, -1)}, {}, 0), ConstructionError);
}

TEST_CASE("Sato solve") {
  CHECK(same(sato_solve(w0(kT.nx - 1), kT), EOp::identity(kT), kT.nx, -6));

  // Round trip on 1 + x1 d1 d2^-1.
  EOp s = EOp::identity(kT) + EOp::monomial(kT, 1, -1, poly({{1, 0, 1}}));
  EOp back = sato_solve(admissible_image(s), kT);
  CHECK(same(back, s, kT.nx, -6));
  CHECK(back.coeff(1, -1).prec() == kT.nx);

  EOp cs = cusp_dressing(Rat(1), kT);
  EOp got = sato_solve(admissible_image(cs), kT);
  CHECK(same(got, cs, kT.nx, -6));

  auto bad = w0(kT.nx - 1);
  bad[0] = z(0, 0) + z(3, -1); // 1 + d1^3 d2^-1 cannot come from A1(0) data
  CHECK_THROWS_AS(sato_solve(bad, kT), ConstructionError);
}

TEST_CASE("random Sato round trips") {
  std::mt19937_64 rng(11);
  const Trunc t{5, 6, -10, 4};
  for (int n = 0; n < 10; ++n) {
    EOp s = EOp::identity(t);
    for (int q = 1; q <= 3; ++q)
      for (int a = 0; a <= 2; ++a) {
        if (rng() % 2)
          continue;
        // A1(0): ord_M of the coefficient of d1^a d2^-q at least a - q.
        XSeries c = testgen::rand_series(rng, t.nx, 30);
        std::vector<XSeries::Term> keep;
        for (const auto &tm : c.terms())
          if (tm.i + tm.j >= a - q)
            keep.push_back(tm);
        s.add_to(a, -q, XSeries::from_terms(keep, kExact));
      }
    REQUIRE(check_a1(s, 0).kind == A1Result::Kind::Holds);
    EOp back = sato_solve(admissible_image(s), t);
    CHECK(same(back, s, t.nx, -5));
  }
}

TEST_CASE("ring from a Schur pair") {
  SchurPair triv;
  triv.window = kT;
  triv.a_gens = {z(1, 0), z(0, 1)};
  triv.w_gens = w0(kT.nx - 1);
  auto ring = ring_from_pair(triv);
  REQUIRE(ring.gens.size() == 2);
  CHECK(same(ring.gens[0], EOp::monomial(kT, 1, 0), kT.nx, -6));
  CHECK(same(ring.gens[1], EOp::monomial(kT, 0, 1), kT.nx, -6));
  CHECK_FALSE(ring.completed);

  for (Rat c : {Rat(1), Rat(2, 3)}) {
    auto r = ring_from_pair(cusp_pair(c, kT));
    // d2^2 - 2 c^2 / (1 - c x2)^2
    XSeries g = x_inv(poly({{0, 0, 1}, {0, 1, QuadElem(Rat(-c))}}), kT.nx);
    XSeries pot = x_mul(g, g).scaled(QuadElem(Rat(-2 * c * c)));
    EOp expect = EOp::monomial(kT, 0, 2) + EOp::function(kT, pot);
    CHECK(same(r.gens[0], expect, kT.nx - 3, -2));
    CHECK(same(r.gens[2], EOp::monomial(kT, 1, 0), kT.nx - 3, -2));
    CHECK_FALSE(r.completed);
    REQUIRE(r.normalized_pair.has_value());
    CHECK(r.normalized_pair->first == 0);
    CHECK(r.normalized_pair->second == 2);
    for (std::size_t i = 0; i < r.gens.size(); ++i)
      for (std::size_t j = i + 1; j < r.gens.size(); ++j)
        CHECK(commutator(r.gens[i], r.gens[j]).is_zero());
  }
}

TEST_CASE("normalization") {
  const Trunc t{6, 6, -6, 4};
  EOp p = EOp::monomial(t, 0, 2), q = EOp::monomial(t, 1, 0);
  auto n0 = normalize_pair(p, q);
  CHECK(same(n0.conjugator, EOp::identity(t), t.nx, -4));

  // e^-x2 d2^2 e^x2 = d2^2 + 2 d2 + 1.
  EOp pc = EOp::monomial(t, 0, 2) + EOp::monomial(t, 0, 1, XSeries::constant(2)) +
           EOp::identity(t);
  auto n1 = normalize_pair(pc, q);
  CHECK(same(n1.p, p, t.nx - 2, -4));
  CHECK(same(n1.q, q, t.nx - 2, -4));
  XSeries em = x_exp(poly({{0, 1, -1}}), t.nx);
  CHECK(same(n1.conjugator, EOp::function(t, em), t.nx, -4));

  // Conjugate (d2^2, d1 d2) by a unit-led operator and normalize back.
  EOp u = EOp::function(t, poly({{0, 0, 1}, {1, 0, 2}, {0, 1, -1}})) +
          EOp::monomial(t, 1, -1, poly({{1, 1, 1}}));
  EOp q0 = EOp::monomial(t, 1, 1);
  EOp pp = conjugate(u, p), qq = conjugate(u, q0);
  auto n2 = normalize_pair(pp, qq);
  CHECK(is_normalized_pair(n2.p, n2.q));

  CHECK_THROWS_AS(normalize_pair(q, p), DomainError);
}

TEST_CASE("pair from ring") {
  RingPresentation triv;
  triv.trunc = kT;
  triv.gens = {EOp::monomial(kT, 0, 1), EOp::monomial(kT, 1, 0)};
  triv.normalized_pair = std::make_pair(0, 1);
  auto pr = pair_from_ring(triv);
  CHECK(pr.a_gens[0] == z(0, 1));
  CHECK(pr.a_gens[1] == z(1, 0));
  CHECK(pr.w_gens == w0(kT.nx - 1));

  // Round trip through the cusp ring: W comes back up to a constant rescaling.
  auto pair = cusp_pair(Rat(2), kT);
  auto ring = ring_from_pair(pair);
  auto d = dress_ring(ring);
  CHECK(d.pair.a_gens[0].str() == "d2^2");
  CHECK(d.pair.a_gens[1].str() == "d2^3");
  CHECK(d.pair.a_gens[2].str() == "d1");
  EOp s_orig = sato_solve(admissible_basis(pair.w_gens, pair.a_gens, kT.nx - 1), kT);
  EOp c = compose(invert_unit(s_orig), d.s);
  std::string why;
  CHECK_MESSAGE(constant_coefficients(c, &why), why);
  // W' C^-1 recovers W.
  EOp cinv = invert_unit(c);
  std::vector<ZSeries> back;
  for (const auto &w : d.pair.w_gens)
    back.push_back(act(w, cinv));
  auto wb = admissible_basis(back, {}, 3);
  auto wa = admissible_basis(pair.w_gens, {}, 3);
  for (std::size_t n = 0; n < wa.size(); ++n) {
    int lo = std::max({wa[n].floor(), wb[n].floor(), -4});
    CHECK(wa[n].equal_from(wb[n], lo));
  }
  CHECK(verify_stabilizer(d.pair).ok);
}

TEST_CASE("stabilizer check") {
  SchurPair triv;
  triv.window = kT;
  triv.a_gens = {z(1, 0), z(0, 1)};
  triv.w_gens = w0(4);
  auto rep = verify_stabilizer(triv);
  CHECK(rep.ok);
  CHECK(rep.checked > 0);

  CHECK(verify_stabilizer(cusp_pair(Rat(1), kT)).ok);

  auto w = w0(4);
  w.erase(w.begin() + 2); // (1,0)
  triv.w_gens = w;
  rep = verify_stabilizer(triv);
  CHECK_FALSE(rep.ok);
  bool seen = false;
  for (const auto &r : rep.residuals)
    seen = seen || r.at == OpKey{1, 0};
  CHECK(seen);
}

TEST_CASE("Darboux transform and d1 membership") {
  RingPresentation triv;
  triv.trunc = kT;
  triv.gens = {EOp::monomial(kT, 1, 0), EOp::monomial(kT, 0, 1)};
  auto d0 = darboux_transform(triv, EOp::identity(kT), 0);
  CHECK(d0.pdo.pdo);
  CHECK(d0.constant == std::vector<bool>{true, true});

  auto pair = cusp_pair(Rat(3), kT);
  auto ring = ring_from_pair(pair);
  EOp s = sato_solve(admissible_basis(pair.w_gens, pair.a_gens, kT.nx - 1), kT);
  auto d1 = darboux_transform(ring, s, 1);
  CHECK(d1.pdo.pdo);
  CHECK_FALSE(d1.completed_operator);
  for (bool b : d1.constant)
    CHECK(b);
  XSeries w = x_inv(poly({{0, 0, 1}, {0, 1, -3}}), kT.nx).scaled(QuadElem(3));
  CHECK(same(d1.F, EOp::monomial(kT, 0, 1) + EOp::function(kT, w), kT.nx, -6));

  CHECK(contains_partial1(ring).contains);
  CHECK(contains_partial1(triv).contains);
  RingPresentation parity;
  parity.trunc = kT;
  parity.gens = {EOp::monomial(kT, 0, 2), EOp::monomial(kT, 0, 3), EOp::monomial(kT, 2, 0)};
  auto pr = contains_partial1(parity);
  CHECK_FALSE(pr.contains);
  CHECK(pr.bound == 9);
}
