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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "localfield.hpp"
#include "opalg.hpp"

namespace sato2d {

struct SchurPair {
  std::vector<ZSeries> a_gens;
  std::vector<ZSeries> w_gens; // spanning set of W inside the window
  int r = 1;
  Trunc window;
};

struct RingPresentation {
  std::vector<EOp> gens;
  std::optional<std::pair<int, int>> normalized_pair; // indices of P, Q
  Trunc trunc;
  // Some generator keeps negative d2-degrees or an unbounded d1-tail.
  bool completed = false;
  std::vector<std::string> notes;
};

// Anti-lexicographic echelon form on symbols: rows keyed by lowest_term.
class SymbolEchelon {
public:
  std::optional<OpKey> insert(ZSeries v);
  ZSeries reduce(ZSeries v) const;
  const std::map<OpKey, ZSeries, OpKeyOrder> &rows() const noexcept { return rows_; }

private:
  std::map<OpKey, ZSeries, OpKeyOrder> rows_;
};

// w_{ij} = z1^-i z2^-j + (terms with negative d2-degree) for i + j <= bound.
// Returned in the order (i + j, then i) ascending.
std::vector<ZSeries> admissible_basis(const std::vector<ZSeries> &w_gens,
                                      const std::vector<ZSeries> &a_gens, int degree_bound);

// S = 1 + sum_{q>=1} s_q d2^-q with act(z1^-i z2^-j, S) = w_{ij}.
EOp sato_solve(const std::vector<ZSeries> &basis, const Trunc &t);

// Images of W0 = k[d1, d2] under S for i + j <= bound.
std::vector<ZSeries> dressed_basis(const EOp &s, int bound);

RingPresentation ring_from_pair(const SchurPair &pair);

struct Normalized {
  EOp conjugator;
  EOp p;
  EOp q;
};
Normalized normalize_pair(const EOp &p, const EOp &q);

struct Dressing {
  EOp s;
  SchurPair pair;
};
Dressing dress_ring(const RingPresentation &ring);
SchurPair pair_from_ring(const RingPresentation &ring);

struct StabilizerResidual {
  std::size_t w_index;
  std::size_t a_index;
  OpKey at;
  std::string residual;
};
struct StabilizerReport {
  bool ok = true;
  int bound = 0; // products of degree above bound are outside the window
  std::size_t checked = 0;
  std::vector<StabilizerResidual> residuals;
};
StabilizerReport verify_stabilizer(const SchurPair &pair);

// PDO test on one operator: no certified negative d2-terms and no d1-tail
// reaching the precision horizon.
struct PdoVerdict {
  bool pdo = true;
  bool window_limited = false;
  std::string reason;
};
PdoVerdict pdo_test(const EOp &p);
bool constant_coefficients(const EOp &p, std::string *why = nullptr);

struct DarbouxReport {
  EOp F;
  PdoVerdict pdo;
  std::vector<bool> constant; // per generator
  std::vector<std::string> conjugates;
  bool completed_operator = false;
};
DarbouxReport darboux_transform(const RingPresentation &ring, const EOp &s, int n);

struct Partial1Report {
  bool contains = false;
  int bound = 0;
};
Partial1Report contains_partial1(const RingPresentation &ring, int bound = -1);

} // namespace sato2d
