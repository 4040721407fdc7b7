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
#include "localfield.hpp"

using namespace sato2d;

namespace {

ZSeries d(int i, int s, long c = 1) { return ZSeries::monomial(i, s, QuadElem(c)); }

// Counts monomials d1^a d2^b of total degree <= n with b != 1.
int count_without_d2(int n) {
  int c = 0;
  for (int a = 0; a <= n; ++a)
    for (int b = 0; a + b <= n; ++b)
      if (b != 1)
        ++c;
  return c;
}

} // namespace

TEST_CASE("psi1 monomial map") {
  CHECK(psi1(d(1, 0)) == UVElem::monomial(1, -1));
  CHECK(psi1(d(0, -1)) == UVElem::monomial(0, 1));
  for (int i = 0; i < 4; ++i)
    for (int j = -3; j < 3; ++j)
      CHECK(psi1(d(i, j)) == UVElem::monomial(i, -i - j));
  CHECK(psi1_inv(psi1(d(2, -3) + d(0, 1, 5))) == d(2, -3) + d(0, 1, 5));
  CHECK_THROWS_AS(psi1_inv(UVElem::monomial(-1, 0)), DomainError);
  CHECK(psi1(d(1, 0)).str() == "u*t^-1");
}

TEST_CASE("psi1 is multiplicative and nu is a valuation") {
  std::mt19937_64 rng(5);
  auto rand_z = [&] {
    ZSeries z;
    for (int k = 0; k < 4; ++k)
      z.add_to(static_cast<int>(rng() % 4), static_cast<int>(rng() % 6) - 3,
               QuadElem(testgen::rand_rat(rng)));
    return z;
  };
  for (int n = 0; n < 50; ++n) {
    ZSeries a = rand_z(), b = rand_z();
    CHECK(psi1(z_mul(a, b)) == uv_mul(psi1(a), psi1(b)));
    if (a.is_zero() || b.is_zero())
      continue;
    UVKey na = nu(a), nb = nu(b), nab = nu(z_mul(a, b));
    CHECK(nab.m == na.m + nb.m);
    CHECK(nab.l == na.l + nb.l);
  }
}

TEST_CASE("valuations and lowest terms") {
  CHECK(nu(UVElem::monomial(0, 1)) == UVKey{0, 1});
  CHECK(nu(UVElem::monomial(1, -1) + UVElem::monomial(0, 1)) == UVKey{1, -1});
  CHECK(nu_t(psi1(d(0, 2))) == -2);
  CHECK_THROWS_AS(nu(UVElem()), DomainError);
  CHECK_THROWS_AS(nu(UVElem(3)), IndeterminateError);

  CHECK(lowest_term(d(1, 1) + d(0, -1)) == OpKey{1, 1});
  CHECK(lowest_term(d(0, -3)) == OpKey{0, -3});
  CHECK(lowest_term(d(0, 0) + d(0, -1)) == OpKey{0, 0});
  CHECK_THROWS_AS(lowest_term(ZSeries()), DomainError);
  CHECK_THROWS_AS(lowest_term(ZSeries(-2)), IndeterminateError);
}

TEST_CASE("filtration dimensions") {
  SUBCASE("full polynomial ring") {
    auto tab = filtration_dims({d(1, 0), d(0, 1)}, {}, 10, 1);
    for (int n = 0; n <= 10; ++n)
      CHECK(tab.dims[n] == (n + 1) * (n + 2) / 2);
    for (int n = 0; n <= 10; ++n) {
      auto q = graded_quotient(tab, n);
      REQUIRE(q.size() == static_cast<std::size_t>(n + 1));
      for (int m = 0; m <= n; ++m)
        CHECK(q[m] == m);
    }
    auto fit = hilbert_fit(tab, 1);
    CHECK(fit.c2 == 1);
    CHECK(fit.integral);
  }
  SUBCASE("ring without d2") {
    auto tab = filtration_dims({d(0, 2), d(0, 3), d(1, 0)}, {}, 12, 1);
    CHECK(tab.dims[0] == 1);
    for (int n = 1; n <= 12; ++n)
      CHECK(tab.dims[n] == count_without_d2(n));
    CHECK(graded_quotient(tab, 1) == std::vector<int>{1});
    for (int n = 2; n <= 12; ++n)
      CHECK(graded_quotient(tab, n).size() == static_cast<std::size_t>(n));
    CHECK(hilbert_fit(tab, 1).c2 == 1);
  }
  SUBCASE("ring with a mixed cubic generator") {
    ZSeries cubic = d(0, 3) + d(2, 1, 3);
    auto tab = filtration_dims({d(0, 2), cubic, d(1, 0)}, {}, 12, 1);
    for (int n = 1; n <= 12; ++n)
      CHECK(tab.dims[n] == count_without_d2(n));
  }
  SUBCASE("half-size ring") {
    auto tab = filtration_dims({d(1, 0), d(0, 2)}, {}, 12, 1);
    CHECK_THROWS_AS(hilbert_fit(tab, 1), DomainError);
    auto fit = hilbert_fit(tab, 2);
    CHECK(fit.c2 == Rat(1, 2));
    CHECK_FALSE(fit.integral);
  }
  SUBCASE("module over a ring") {
    // W = k[d1, d2] over A = k[d1, d2^2]: generated by 1 and d2.
    auto tab = filtration_dims({d(0, 0), d(0, 1)}, {d(1, 0), d(0, 2)}, 8, 1);
    for (int n = 0; n <= 8; ++n)
      CHECK(tab.dims[n] == (n + 1) * (n + 2) / 2);
  }
  SUBCASE("monotone in the generator set") {
    auto small = filtration_dims({d(0, 2)}, {}, 8, 1);
    auto big = filtration_dims({d(0, 2), d(1, 1)}, {}, 8, 1);
    for (int n = 0; n <= 8; ++n) {
      CHECK(small.dims[n] <= big.dims[n]);
      if (n > 0)
        CHECK(big.dims[n - 1] <= big.dims[n]);
    }
  }
  CHECK_THROWS_AS(graded_quotient(filtration_dims({d(1, 0)}, {}, 3, 1), 4), DomainError);
}

TEST_CASE("N and strong admissibility") {
  auto a = invariants_NA({d(0, 2), d(0, 3), d(1, 0)});
  CHECK(a.N == 1);
  CHECK(a.N_tilde == 1);
  CHECK(a.strongly_admissible);
  CHECK(a.rank == 1);
  CHECK(a.bound == 9);

  auto b = invariants_NA({d(0, 2), d(0, 3)});
  CHECK_FALSE(b.strongly_admissible);
  CHECK_FALSE(b.rank.has_value());

  auto c = invariants_NA({d(0, 2), d(2, 0)});
  CHECK(c.N == 2);
  CHECK(c.N_tilde == 2);
  CHECK_FALSE(c.strongly_admissible);
}
