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

#include <cstddef>
#include <string>
#include <vector>

#include "field.hpp"
#include "opalg.hpp"

namespace sato2d {

struct Expr {
  enum class Kind { Num, Var, Add, Sub, Neg, Mul, Pow, Inv, Exp };
  Kind kind = Kind::Num;
  Rat value;        // Num
  std::string name; // Var: x1, x2, d1, d2, alpha
  int power = 0;    // Pow
  std::size_t pos = 0;
  std::vector<Expr> kids;
};

// expr   := ['-'] term (('+'|'-') term)*
// term   := factor ('*' factor)*
// factor := atom ['^' int]
// atom   := ident | literal | '(' expr ')' | 'inv(' expr ')' | 'exp(' expr ')'
// Literals are integers or p/q. Throws ParseError with the byte position.
Expr parse_expr(const std::string &text);

// Operator in left-normal form; juxtaposed factors compose in written order.
EOp elaborate_op(const Expr &e, const Trunc &t, const Field &f);
EOp parse_op(const std::string &text, const Trunc &t, const Field &f);

// Constant-coefficient symbol. Negative d1-exponents need allow_negative_d1.
ZSeries elaborate_symbol(const Expr &e, const Field &f, bool allow_negative_d1 = false);
ZSeries parse_symbol(const std::string &text, const Field &f, bool allow_negative_d1 = false);

std::string format_canonical(const EOp &p);
std::string format_canonical(const ZSeries &z);
std::string format_canonical(const XSeries &f);

} // namespace sato2d
