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

#include <string>
#include <vector>

#include "opalg.hpp"
#include "ratexp.hpp"
#include "schur.hpp"

namespace sato2d {

struct CatalogCheck {
  std::string name;
  bool ok = false;
  // Informational checks record a known discrepancy and never abort.
  bool informational = false;
  int certified = 0; // coefficients agree modulo (x)^certified
  int s_lo = 0;      // lowest d2-degree compared
  std::string detail;
};

struct CatalogBlock {
  std::string name;
  std::string text;
};

struct CatalogExample {
  std::string id;
  std::string p; // the parameter polynomial P(d1)
  SchurPair pair;
  EOp S;
  RingPresentation ring;
  std::vector<CatalogCheck> checks;
  std::vector<CatalogBlock> blocks;
};

// P of degree <= 1 in d1; DomainError otherwise. Non-informational check
// failures raise InternalError.
CatalogExample build_ex_cuspidal(const UPoly &P, const Trunc &t);
CatalogExample build_ex_nodal(const UPoly &P, const Trunc &t);

struct CounterexampleInfo {
  std::string polynomial;
  std::vector<std::string> g;
  std::string statement;
  std::string flag;
};
// g_q are polynomials in X3, echoed as given.
CounterexampleInfo counterexample_info(const std::vector<std::string> &g = {});

// Default catalog window.
inline Trunc catalog_trunc() { return Trunc{8, 6, -8, 4}; }

} // namespace sato2d
