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

#include "parser.hpp"

#include <cctype>
#include <utility>

#include "errors.hpp"

namespace sato2d {
namespace {

constexpr int kMaxPower = 256;

class Parser {
public:
  explicit Parser(const std::string &s) : s_(s) {}

  Expr run() {
    skip();
    if (pos_ == s_.size())
      throw ParseError("empty expression", pos_);
    Expr e = expr();
    skip();
    if (pos_ != s_.size())
      throw ParseError(std::string("unexpected '") + s_[pos_] + "'", pos_);
    return e;
  }

private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c))
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  static Expr node(Expr::Kind k, std::size_t pos, std::vector<Expr> kids) {
    Expr e;
    e.kind = k;
    e.pos = pos;
    e.kids = std::move(kids);
    return e;
  }

  Expr expr() {
    std::size_t start = pos_;
    Expr acc;
    if (peek('-')) {
      ++pos_;
      acc = node(Expr::Kind::Neg, start, {term()});
    } else {
      acc = term();
    }
    while (true) {
      skip();
      if (peek('+') || peek('-')) {
        std::size_t at = pos_;
        auto k = s_[pos_] == '+' ? Expr::Kind::Add : Expr::Kind::Sub;
        ++pos_;
        acc = node(k, at, {std::move(acc), term()});
      } else {
        return acc;
      }
    }
  }

  Expr term() {
    Expr acc = factor();
    while (peek('*')) {
      std::size_t at = pos_++;
      acc = node(Expr::Kind::Mul, at, {std::move(acc), factor()});
    }
    return acc;
  }

  Expr factor() {
    Expr base = atom();
    if (!peek('^'))
      return base;
    std::size_t at = pos_++;
    skip();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    std::size_t digits = pos_;
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > kMaxPower)
        throw ParseError("exponent too large", digits);
      ++pos_;
    }
    if (pos_ == digits)
      throw ParseError("expected integer exponent", pos_);
    Expr e = node(Expr::Kind::Pow, at, {std::move(base)});
    e.power = static_cast<int>(neg ? -v : v);
    return e;
  }

  Expr atom() {
    skip();
    if (pos_ == s_.size())
      throw ParseError("unexpected end of input", pos_);
    std::size_t at = pos_;
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return literal();
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string id;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
        id += s_[pos_++];
      if (id == "inv" || id == "exp") {
        expect('(');
        Expr arg = expr();
        expect(')');
        return node(id == "inv" ? Expr::Kind::Inv : Expr::Kind::Exp, at, {std::move(arg)});
      }
      if (id == "x1" || id == "x2" || id == "d1" || id == "d2" || id == "alpha") {
        Expr e = node(Expr::Kind::Var, at, {});
        e.name = id;
        return e;
      }
      throw ParseError("unknown identifier '" + id + "'", at);
    }
    throw ParseError(std::string("unexpected '") + c + "'", at);
  }

  Expr literal() {
    std::size_t at = pos_;
    std::string text;
    auto digits = [&] {
      std::size_t from = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        text += s_[pos_++];
      if (pos_ == from)
        throw ParseError("expected digits", pos_);
    };
    digits();
    if (pos_ < s_.size() && s_[pos_] == '/') {
      text += s_[pos_++];
      std::size_t den = pos_;
      digits();
      if (text.find_first_not_of("0", text.find('/') + 1) == std::string::npos)
        throw ParseError("zero denominator", den);
    }
    Expr e = node(Expr::Kind::Num, at, {});
    e.value = Rat(text, 10);
    e.value.canonicalize();
    return e;
  }

  const std::string &s_;
  std::size_t pos_ = 0;
};

bool is_d2_power(const EOp &p, int &s) {
  if (!p.exact() || p.terms().size() != 1)
    return false;
  const auto &[k, c] = *p.terms().begin();
  if (k.i != 0 || !c.is_constant() || c.constant_term() != QuadElem(1))
    return false;
  s = k.s;
  return true;
}

EOp power(const EOp &base, int n, const Trunc &t) {
  EOp r = EOp::identity(t);
  for (int k = 0; k < n; ++k)
    r = compose(r, base);
  return r;
}

} // namespace

Expr parse_expr(const std::string &text) { return Parser(text).run(); }

EOp elaborate_op(const Expr &e, const Trunc &t, const Field &f) {
  using K = Expr::Kind;
  switch (e.kind) {
  case K::Num:
    return e.value == 0 ? EOp(t) : EOp::function(t, XSeries::constant(QuadElem(e.value)));
  case K::Var:
    if (e.name == "x1")
      return EOp::function(t, XSeries::monomial(1, 0, QuadElem(1)));
    if (e.name == "x2")
      return EOp::function(t, XSeries::monomial(0, 1, QuadElem(1)));
    if (e.name == "d1")
      return EOp::monomial(t, 1, 0);
    if (e.name == "d2")
      return EOp::monomial(t, 0, 1);
    return EOp::function(t, XSeries::constant(f.alpha()));
  case K::Add:
    return elaborate_op(e.kids[0], t, f) + elaborate_op(e.kids[1], t, f);
  case K::Sub:
    return elaborate_op(e.kids[0], t, f) - elaborate_op(e.kids[1], t, f);
  case K::Neg:
    return -elaborate_op(e.kids[0], t, f);
  case K::Mul:
    return compose(elaborate_op(e.kids[0], t, f), elaborate_op(e.kids[1], t, f));
  case K::Inv:
    return invert_unit(elaborate_op(e.kids[0], t, f));
  case K::Exp:
    return op_exp(elaborate_op(e.kids[0], t, f));
  case K::Pow: {
    EOp base = elaborate_op(e.kids[0], t, f);
    if (e.power >= 0)
      return power(base, e.power, t);
    int s = 0;
    if (is_d2_power(base, s) && s != 0) {
      int total = s * e.power;
      if (total < t.s_min)
        throw DomainError("d2^" + std::to_string(total) + " lies below the window floor s_min = " +
                          std::to_string(t.s_min));
      return EOp::monomial(t, 0, total);
    }
    return power(invert_unit(base), -e.power, t);
  }
  }
  throw ParseError("bad expression node", e.pos);
}

EOp parse_op(const std::string &text, const Trunc &t, const Field &f) {
  return elaborate_op(parse_expr(text), t, f);
}

ZSeries elaborate_symbol(const Expr &e, const Field &f, bool allow_negative_d1) {
  using K = Expr::Kind;
  auto rec = [&](const Expr &k) { return elaborate_symbol(k, f, allow_negative_d1); };
  switch (e.kind) {
  case K::Num: {
    ZSeries z;
    if (e.value != 0)
      z.set(0, 0, QuadElem(e.value));
    return z;
  }
  case K::Var:
    if (e.name == "d1")
      return ZSeries::monomial(1, 0);
    if (e.name == "d2")
      return ZSeries::monomial(0, 1);
    if (e.name == "alpha")
      return ZSeries::monomial(0, 0, f.alpha());
    throw DomainError("symbols have constant coefficients; '" + e.name + "' at position " +
                      std::to_string(e.pos) + " is not allowed");
  case K::Add:
    return rec(e.kids[0]) + rec(e.kids[1]);
  case K::Sub:
    return rec(e.kids[0]) - rec(e.kids[1]);
  case K::Neg:
    return -rec(e.kids[0]);
  case K::Mul:
    return z_mul(rec(e.kids[0]), rec(e.kids[1]));
  case K::Exp:
    throw DomainError("exp is not available for symbols");
  case K::Inv:
  case K::Pow: {
    ZSeries base = rec(e.kids[0]);
    int n = e.kind == K::Inv ? -1 : e.power;
    if (n >= 0) {
      ZSeries r = ZSeries::monomial(0, 0);
      for (int k = 0; k < n; ++k)
        r = z_mul(r, base);
      return r;
    }
    if (base.terms().size() != 1)
      throw DomainError("only monomial symbols can be inverted (position " +
                        std::to_string(e.pos) + ")");
    const auto &[k, c] = *base.terms().begin();
    QuadElem inv = QuadElem(1) / c, cn(1);
    for (int j = 0; j < -n; ++j)
      cn = cn * inv;
    int i = k.i * n, s = k.s * n;
    if (i < 0 && !allow_negative_d1)
      throw DomainError("negative d1-exponent at position " + std::to_string(e.pos));
    return ZSeries::monomial(i, s, cn);
  }
  }
  throw ParseError("bad expression node", e.pos);
}

ZSeries parse_symbol(const std::string &text, const Field &f, bool allow_negative_d1) {
  return elaborate_symbol(parse_expr(text), f, allow_negative_d1);
}

std::string format_canonical(const EOp &p) { return p.str(); }
std::string format_canonical(const ZSeries &z) { return z.str(); }
std::string format_canonical(const XSeries &f) { return f.str(); }

} // namespace sato2d
