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

#include <random>

#include "field.hpp"
#include "series.hpp"

namespace sato2d::testgen {

// Small random rationals; denominators up to 5 keep the GMP sizes modest.
inline Rat rand_rat(std::mt19937_64 &rng, int span = 6) {
  std::uniform_int_distribution<int> num(-span, span), den(1, 5);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline QuadElem rand_elem(std::mt19937_64 &rng, const Extension *ext) {
  if (!ext)
    return QuadElem(rand_rat(rng));
  return QuadElem(rand_rat(rng), rand_rat(rng), ext);
}

inline XSeries rand_series(std::mt19937_64 &rng, int prec, int density = 60,
                           bool unit = false) {
  std::uniform_int_distribution<int> pct(0, 99);
  std::vector<XSeries::Term> terms;
  for (int d = 0; d < prec; ++d)
    for (int j = 0; j <= d; ++j)
      if (pct(rng) < density)
        terms.push_back({d - j, j, QuadElem(rand_rat(rng))});
  if (unit)
    terms.push_back({0, 0, QuadElem(Rat(1 + pct(rng) % 3))});
  return XSeries::from_terms(std::move(terms), prec);
}

} // namespace sato2d::testgen
