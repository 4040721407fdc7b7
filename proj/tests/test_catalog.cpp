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

#include "catalog.hpp"
#include "errors.hpp"

using namespace sato2d;

namespace {

UPoly cst(const Rat &c) { return UPoly(QuadElem(c)); }

const CatalogCheck &check(const CatalogExample &ex, const std::string &name) {
  for (const auto &c : ex.checks)
    if (c.name == name)
      return c;
  FAIL("missing check " << name);
  return ex.checks.front();
}

std::string block(const CatalogExample &ex, const std::string &name) {
  for (const auto &b : ex.blocks)
    if (b.name == name)
      return b.text;
  return {};
}

// Monomials d1^a d2^b with a + b <= n and b != 1.
int staircase(int n) { return (n + 1) * (n + 2) / 2 - n; }

} // namespace

TEST_CASE("cuspidal example with P = 0 is the constant ring") {
  const Trunc t = catalog_trunc();
  CatalogExample ex = build_ex_cuspidal(UPoly(), t);
  CHECK(ex.S.str() == "1");
  REQUIRE(ex.ring.gens.size() == 3);
  CHECK(ex.ring.gens[0].str() == "d2^2");
  CHECK(ex.ring.gens[1].str() == "d2^3");
  CHECK(ex.ring.gens[2].str() == "d1");
  CHECK_FALSE(ex.ring.completed);
}

TEST_CASE("cuspidal closed form for constant P") {
  const Trunc t = catalog_trunc();
  for (const Rat &p : {Rat(1), Rat(2, 3)}) {
    CatalogExample ex = build_ex_cuspidal(cst(p), t);
    CHECK(check(ex, "conjugate_closed_form").ok);
    CHECK(check(ex, "riccati").ok);
    // -2 P^2 / (1 - x2 P)^2 = -2 sum (k+1) P^(k+2) x2^k.
    const XSeries c0 = ex.ring.gens[0].coeff(0, 0);
    const int prec = check(ex, "conjugate_closed_form").certified;
    CHECK(prec >= 6);
    Rat pk = p * p;
    for (int k = 0; k < prec; ++k) {
      CHECK(c0.coeff(0, k) == QuadElem(Rat(-2 * (k + 1)) * pk));
      pk *= p;
    }
    CHECK_FALSE(ex.ring.completed);
    REQUIRE(ex.ring.normalized_pair);
    // The quoted form describes the nonnegative part of S^-1 d2^2 S only.
    CHECK(check(ex, "inverse_conjugate_nonneg").ok);
    const CatalogCheck &lit = check(ex, "inverse_conjugate_literal");
    CHECK(lit.informational);
    CHECK_FALSE(lit.ok);
  }
  CatalogExample one = build_ex_cuspidal(cst(1), t);
  CHECK(block(one, "S^-1 d2^2 S").rfind("d2^2 + 2 + 4*x2 + 6*x2^2 + ", 0) == 0);
}

TEST_CASE("cuspidal example with P = d1 is a completed-operator ring") {
  const Trunc t{6, 6, -8, 4};
  CatalogExample ex = build_ex_cuspidal(UPoly::monomial(1), t);
  CHECK(check(ex, "conjugate_closed_form").ok);
  CHECK(ex.ring.completed);
  DarbouxReport d = darboux_transform(ex.ring, ex.S, 1);
  CHECK(d.completed_operator);
  CHECK_THROWS_AS(build_ex_cuspidal(UPoly::monomial(2), t), DomainError);
}

TEST_CASE("Darboux transform of the cuspidal ring") {
  const Trunc t = catalog_trunc();
  CatalogExample ex = build_ex_cuspidal(cst(1), t);
  DarbouxReport d = darboux_transform(ex.ring, ex.S, 1);
  CHECK(d.pdo.pdo);
  CHECK_FALSE(d.completed_operator);
  for (bool c : d.constant)
    CHECK(c);
}

TEST_CASE("nodal example identities") {
  const Trunc t = catalog_trunc();
  for (const UPoly &P : {UPoly(), cst(1), UPoly::monomial(1)}) {
    CatalogExample ex = build_ex_nodal(P, t);
    INFO("P = " << ex.p);
    for (const char *name : {"w_at_x2_0", "closed_form", "conjugate_closed_form",
                             "lambda_at_x2_0", "lambda_discriminant"})
      CHECK(check(ex, name).ok);
    CHECK(check(ex, "closed_form").certified == t.nx - 1);
    // No PDO ring besides the constant one.
    CHECK(ex.ring.completed);
    for (const auto &c : ex.checks)
      if (c.name.rfind("commute_", 0) == 0)
        CHECK(c.ok);
  }
  // -a^2 4 lambda/(lambda+1)^2 = P^2 + 3 d1^2 for P = 1.
  CatalogExample one = build_ex_nodal(cst(1), t);
  CHECK(check(one, "lambda_discriminant").detail == "3*d1^2 + 1 = 3*d1^2 + 1");
}

TEST_CASE("catalog rings: filtration, invariants, d1 membership") {
  const Trunc t = catalog_trunc();
  CatalogExample cusp = build_ex_cuspidal(cst(1), t);
  CatalogExample node = build_ex_nodal(cst(1), Trunc{5, 6, -6, 4});
  for (const auto *ex : {&cusp, &node}) {
    SpanTable tab = filtration_dims(ex->pair.a_gens, {}, 12, 1);
    for (int n = 1; n <= 12; ++n)
      CHECK(tab.dims[n] == staircase(n));
    HilbertFit fit = hilbert_fit(tab, 1);
    CHECK(fit.c2 == 1);
    Invariants inv = invariants_NA(ex->pair.a_gens);
    CHECK(inv.N == 1);
    CHECK(inv.N_tilde == 1);
    CHECK(inv.strongly_admissible);
    CHECK(inv.rank == 1);
  }
  CHECK(contains_partial1(cusp.ring).contains);
  CHECK(contains_partial1(node.ring).contains);
}

TEST_CASE("cuspidal ring round trip through the dressing") {
  const Trunc t = catalog_trunc();
  CatalogExample ex = build_ex_cuspidal(cst(1), t);
  Dressing d = dress_ring(ex.ring);
  CHECK(d.pair.a_gens[0].str() == "d2^2");
  CHECK(d.pair.a_gens[1].str() == "d2^3");
  CHECK(d.pair.a_gens[2].str() == "d1");
  // Same Sato operator up to a constant-coefficient factor.
  EOp c = compose(invert_unit(ex.S), d.s);
  std::string why;
  CHECK_MESSAGE(constant_coefficients(c, &why), why);
  CHECK(verify_stabilizer(ex.pair).ok);
}

TEST_CASE("counterexample metadata") {
  CounterexampleInfo a = counterexample_info();
  CHECK(a.polynomial == "X1*X2 + X3");
  CHECK(a.flag == "non-spectral (stated, not machine-verified)");
  CounterexampleInfo b = counterexample_info({"X3^2 + 1", "7*X3"});
  CHECK(b.g == std::vector<std::string>{"X3^2 + 1", "7*X3"});
  CHECK(b.polynomial == "X1*X2 + X3 + (X3^2 + 1)*X1 + (7*X3)*X1^2");
}
