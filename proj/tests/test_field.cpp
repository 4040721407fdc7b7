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
#include "field.hpp"
#include "gen.hpp"

using namespace sato2d;

TEST_CASE("quadratic arithmetic with d = -3") {
  Field F = Field::quadratic(Rat(-3));
  QuadElem a = F.alpha();
  CHECK((QuadElem(1) + a) * (QuadElem(1) - a) == QuadElem(4));
  CHECK(a.inverse() == QuadElem(Rat(0), Rat(-1, 3), F.ext()));
  CHECK((QuadElem(1) + a).inverse() == QuadElem(Rat(1, 4), Rat(-1, 4), F.ext()));
  CHECK(QuadElem(Rat(1, 2)) * QuadElem(Rat(2, 3)) == QuadElem(Rat(1, 3)));
  CHECK(QuadElem(Rat(1, 2)).inverse() == QuadElem(2));
}

TEST_CASE("field configuration errors") {
  CHECK_THROWS_AS(Field::quadratic(Rat(4)), ConfigError);
  CHECK_THROWS_AS(Field::quadratic(Rat(9, 4)), ConfigError);
  CHECK_NOTHROW(Field::quadratic(Rat(2, 9)));
  CHECK_THROWS_AS(Field::parse("Q(i)"), ConfigError);
  CHECK(Field::parse("Q(sqrt,-3)").name() == "Q(sqrt,-3)");
  QuadElem x = Field::quadratic(Rat(2)).alpha();
  QuadElem y = Field::quadratic(Rat(3)).alpha();
  CHECK_THROWS_AS(x + y, ConfigError);
  CHECK_THROWS_AS(QuadElem().inverse(), DivisionByZero);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937_64 rng(11);
  const Extension *ext = Field::quadratic(Rat(-3)).ext();
  for (int n = 0; n < 1000; ++n) {
    QuadElem x = testgen::rand_elem(rng, ext), y = testgen::rand_elem(rng, ext),
             z = testgen::rand_elem(rng, ext);
    REQUIRE((x * y) * z == x * (y * z));
    REQUIRE(x * (y + z) == x * y + x * z);
    if (!x.is_zero())
      REQUIRE(x * x.inverse() == QuadElem(1));
  }
}

TEST_CASE("rational embedding stays rational") {
  std::mt19937_64 rng(12);
  const Extension *ext = Field::quadratic(Rat(5)).ext();
  for (int n = 0; n < 200; ++n) {
    QuadElem x(testgen::rand_rat(rng)), y(testgen::rand_rat(rng));
    QuadElem t(Rat(0), Rat(0), ext);
    CHECK((x + y + t).is_rational());
    CHECK((x * y).is_rational());
  }
}

TEST_CASE("generalized binomials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(-1, 3) == -1);
  CHECK(binomial(-2, 2) == 3);
  CHECK(binomial(3, 5) == 0);
  CHECK(factorial(5) == 120);
}
