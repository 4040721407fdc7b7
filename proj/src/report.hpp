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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "field.hpp"
#include "opalg.hpp"

namespace sato2d {

struct Session {
  Field field;
  Trunc trunc;
  std::optional<int> bound; // degree bound; nx - 1 when unset
  std::uint64_t seed = 0;
  int degree_bound() const { return bound ? *bound : trunc.nx - 1; }
  std::string window() const;
};

struct Verdict {
  enum class Value { True, False, Indeterminate };
  std::string name;
  Value value = Value::True;
  std::string reason;
  std::string window; // empty for exact verdicts
};

struct Block {
  std::string name;
  std::string text;
  nlohmann::json value;
};

struct Report {
  std::string command;
  std::vector<std::string> args;
  Session session;
  std::map<std::string, int> bounds;
  std::vector<Block> body;
  std::vector<Verdict> verdicts;

  void add(const std::string &name, const EOp &p);
  void add(const std::string &name, const ZSeries &z);
  void add_text(const std::string &name, const std::string &text,
                nlohmann::json value = nullptr);
  void verdict(const std::string &name, bool value, const std::string &reason = {},
               const std::string &window = {});
  void indeterminate(const std::string &name, const std::string &reason,
                     const std::string &window);

  std::string text() const;
  nlohmann::json json() const;
};

nlohmann::json to_json(const QuadElem &c);
nlohmann::json to_json(const XSeries &f);
nlohmann::json to_json(const EOp &p);
nlohmann::json to_json(const ZSeries &z);

} // namespace sato2d
