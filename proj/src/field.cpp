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

#include "field.hpp"

#include <deque>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "errors.hpp"

namespace sato2d {

const Extension *Extension::intern(const Rat &d) {
  static std::mutex mu;
  static std::deque<std::unique_ptr<Extension>> pool;
  std::lock_guard<std::mutex> lock(mu);
  for (const auto &e : pool)
    if (e->d_ == d)
      return e.get();
  pool.push_back(std::unique_ptr<Extension>(new Extension(d)));
  return pool.back().get();
}

bool is_rational_square(const Rat &d) {
  if (sgn(d) < 0)
    return false;
  // p/q is a square iff p*q is a square of an integer (p, q coprime).
  Int prod = d.get_num() * d.get_den();
  return mpz_perfect_square_p(prod.get_mpz_t()) != 0;
}

QuadElem::QuadElem(Rat a, Rat b, const Extension *ext)
    : a_(std::move(a)), b_(std::move(b)), ext_(ext) {
  a_.canonicalize();
  b_.canonicalize();
  if (sgn(b_) != 0 && ext_ == nullptr)
    throw ConfigError("quadratic element requires an extension constant");
}

const Extension *QuadElem::join(const Extension *x, const Extension *y) {
  if (x == nullptr)
    return y;
  if (y == nullptr || x == y)
    return x;
  throw ConfigError("mismatched extension constants: d=" + x->d().get_str() +
                    " vs d=" + y->d().get_str());
}

QuadElem QuadElem::operator-() const {
  QuadElem r(*this);
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

QuadElem &QuadElem::operator+=(const QuadElem &o) {
  ext_ = join(ext_, o.ext_);
  a_ += o.a_;
  if (sgn(o.b_) != 0)
    b_ += o.b_;
  return *this;
}

QuadElem &QuadElem::operator-=(const QuadElem &o) {
  ext_ = join(ext_, o.ext_);
  a_ -= o.a_;
  if (sgn(o.b_) != 0)
    b_ -= o.b_;
  return *this;
}

QuadElem &QuadElem::operator*=(const QuadElem &o) {
  const Extension *e = join(ext_, o.ext_);
  if (sgn(b_) == 0 && sgn(o.b_) == 0) {
    a_ *= o.a_;
  } else {
    Rat na = a_ * o.a_ + b_ * o.b_ * e->d();
    Rat nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
  }
  ext_ = e;
  return *this;
}

void QuadElem::add_product(const QuadElem &x, const QuadElem &y) {
  if (sgn(x.b_) == 0 && sgn(y.b_) == 0 && sgn(b_) == 0) {
    ext_ = join(ext_, join(x.ext_, y.ext_));
    // mpq has no fused multiply-add; a temporary is unavoidable here.
    a_ += x.a_ * y.a_;
    return;
  }
  *this += x * y;
}

bool operator==(const QuadElem &x, const QuadElem &y) {
  if (x.ext_ != nullptr && y.ext_ != nullptr && x.ext_ != y.ext_)
    throw ConfigError("comparison across different extensions");
  return x.a_ == y.a_ && x.b_ == y.b_;
}

QuadElem QuadElem::inverse() const {
  if (is_zero())
    throw DivisionByZero("inverse of zero");
  if (sgn(b_) == 0) {
    QuadElem r;
    r.a_ = 1 / a_;
    r.ext_ = ext_;
    return r;
  }
  // (a + b alpha)^-1 = (a - b alpha) / (a^2 - d b^2); the norm is nonzero
  // because d is not a rational square.
  Rat norm = a_ * a_ - b_ * b_ * ext_->d();
  return QuadElem(Rat(a_ / norm), Rat(-b_ / norm), ext_);
}

std::string QuadElem::str() const {
  if (sgn(b_) == 0)
    return a_.get_str();
  std::string bs = b_.get_str() + "*alpha";
  if (sgn(a_) == 0)
    return bs;
  if (sgn(b_) > 0)
    return a_.get_str() + "+" + bs;
  return a_.get_str() + bs;
}

Field Field::quadratic(const Rat &d) {
  Rat dd(d);
  dd.canonicalize();
  if (is_rational_square(dd))
    throw ConfigError("extension constant " + dd.get_str() +
                      " is a rational square; Q(sqrt(d)) would not be a field");
  Field f;
  f.ext_ = Extension::intern(dd);
  return f;
}

Field Field::parse(const std::string &text) {
  if (text == "Q" || text == "q")
    return rationals();
  const std::string prefix = "Q(sqrt,";
  if (text.rfind(prefix, 0) == 0 && text.size() > prefix.size() + 1 && text.back() == ')') {
    std::string body = text.substr(prefix.size(), text.size() - prefix.size() - 1);
    Rat d;
    if (d.set_str(body, 10) != 0)
      throw ConfigError("bad extension constant '" + body + "'");
    return quadratic(d);
  }
  throw ConfigError("unknown field '" + text + "' (expected Q or Q(sqrt,d))");
}

QuadElem Field::alpha() const {
  if (!ext_)
    throw ConfigError("session field has no alpha (field is Q)");
  return QuadElem(Rat(0), Rat(1), ext_);
}

std::string Field::name() const {
  return ext_ ? "Q(sqrt," + ext_->d().get_str() + ")" : "Q";
}

std::string Field::d_str() const { return ext_ ? ext_->d().get_str() : "none"; }

Rat binomial(long s, long k) {
  if (k < 0)
    return Rat(0);
  Int num = 1;
  Int den = 1;
  for (long t = 0; t < k; ++t) {
    num *= s - t;
    den *= t + 1;
  }
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat factorial(long n) {
  Int r = 1;
  for (long t = 2; t <= n; ++t)
    r *= t;
  return Rat(r);
}

} // namespace sato2d
