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

#include <stdexcept>
#include <string>

namespace sato2d {

// Base of every error raised by the library. The C API maps the concrete
// subclass onto a status code.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// Mismatched or invalid session configuration (extension constants, windows).
class ConfigError : public Error {
public:
  using Error::Error;
};

class DivisionByZero : public Error {
public:
  using Error::Error;
};

// A truncated computation cannot certify any coefficient of its result.
class PrecisionError : public Error {
public:
  using Error::Error;
};

// Inversion of an element that is not a unit.
class NonUnitError : public Error {
public:
  using Error::Error;
};

// Generic mathematical domain violation (bad exp argument, wrong shape, ...).
class DomainError : public Error {
public:
  using Error::Error;
};

// A quantity cannot be decided inside the retained window.
class IndeterminateError : public Error {
public:
  using Error::Error;
};

// Bad input to a constructive correspondence (not a 1-space, inconsistent
// Sato system, obstruction in normalization or dressing).
class ConstructionError : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string &msg, std::size_t pos)
      : Error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

private:
  std::size_t pos_;
};

class UsageError : public Error {
public:
  using Error::Error;
};

// A built-in identity failed: the engine, not the input, is wrong.
class InternalError : public Error {
public:
  using Error::Error;
};

} // namespace sato2d
