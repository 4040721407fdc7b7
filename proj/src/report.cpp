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

#include "report.hpp"

#include <sstream>

namespace sato2d {

using nlohmann::json;

std::string Session::window() const {
  std::ostringstream out;
  out << "x-degree < " << trunc.nx << ", d1-degree <= " << trunc.n1 << ", d2 in [" << trunc.s_min
      << ", " << trunc.s_max << "]";
  return out.str();
}

json to_json(const QuadElem &c) { return c.str(); }

json to_json(const XSeries &f) {
  json terms = json::array();
  for (const auto &t : f.terms())
    terms.push_back({{"x1", t.i}, {"x2", t.j}, {"c", t.c.str()}});
  return {{"prec", f.exact() ? json(nullptr) : json(f.prec())}, {"terms", terms}};
}

json to_json(const EOp &p) {
  json terms = json::array();
  for (const auto &[k, c] : p.terms()) {
    json t = to_json(c);
    t["d1"] = k.i;
    t["d2"] = k.s;
    terms.push_back(t);
  }
  return {{"kind", "operator"},
          {"floor", p.exact_in_d2() ? json(nullptr) : json(p.floor())},
          {"window_dropped", p.window_dropped()},
          {"terms", terms}};
}

json to_json(const ZSeries &z) {
  json terms = json::array();
  for (const auto &[k, c] : z.terms())
    terms.push_back({{"d1", k.i}, {"d2", k.s}, {"c", c.str()}});
  return {{"kind", "symbol"},
          {"floor", z.exact() ? json(nullptr) : json(z.floor())},
          {"terms", terms}};
}

void Report::add(const std::string &name, const EOp &p) {
  body.push_back({name, p.str(), to_json(p)});
}

void Report::add(const std::string &name, const ZSeries &z) {
  body.push_back({name, z.str(), to_json(z)});
}

void Report::add_text(const std::string &name, const std::string &text, nlohmann::json value) {
  body.push_back({name, text, std::move(value)});
}

void Report::verdict(const std::string &name, bool value, const std::string &reason,
                     const std::string &window) {
  verdicts.push_back(
      {name, value ? Verdict::Value::True : Verdict::Value::False, reason, window});
}

void Report::indeterminate(const std::string &name, const std::string &reason,
                           const std::string &window) {
  verdicts.push_back({name, Verdict::Value::Indeterminate, reason, window});
}

namespace {

const char *value_str(Verdict::Value v) {
  switch (v) {
  case Verdict::Value::True:
    return "true";
  case Verdict::Value::False:
    return "false";
  default:
    return "indeterminate";
  }
}

} // namespace

std::string Report::text() const {
  if (body.size() == 1 && verdicts.empty())
    return body.front().text + "\n";
  std::string out;
  for (const auto &b : body) {
    if (b.text.find('\n') == std::string::npos) {
      out += b.name + ": " + b.text + "\n";
      continue;
    }
    out += b.name + ":\n";
    std::istringstream lines(b.text);
    for (std::string line; std::getline(lines, line);)
      out += "  " + line + "\n";
  }
  for (const auto &v : verdicts) {
    out += "verdict " + v.name + " = " + value_str(v.value);
    if (!v.reason.empty())
      out += " (" + v.reason + ")";
    if (!v.window.empty())
      out += " [" + v.window + "]";
    out += "\n";
  }
  return out;
}

json Report::json() const {
  nlohmann::json header = {
      {"field", session.field.name()},
      {"d", session.field.d_str()},
      {"trunc",
       {{"nx", session.trunc.nx},
        {"n1", session.trunc.n1},
        {"s_min", session.trunc.s_min},
        {"s_max", session.trunc.s_max}}},
      {"degree_bound", session.degree_bound()},
      {"seed", std::to_string(session.seed)},
  };
  nlohmann::json b = nlohmann::json::object();
  for (const auto &[k, v] : bounds)
    b[k] = v;
  header["bounds"] = b;
  nlohmann::json blocks = nlohmann::json::array();
  for (const auto &blk : body)
    blocks.push_back({{"name", blk.name}, {"text", blk.text}, {"value", blk.value}});
  nlohmann::json vs = nlohmann::json::array();
  for (const auto &v : verdicts) {
    nlohmann::json e = {{"name", v.name}, {"reason", v.reason}};
    if (v.value == Verdict::Value::Indeterminate)
      e["value"] = "indeterminate";
    else
      e["value"] = v.value == Verdict::Value::True;
    e["window"] = v.window.empty() ? nlohmann::json(nullptr) : nlohmann::json(v.window);
    vs.push_back(e);
  }
  return {{"schema", "sato2d/1"}, {"command", command}, {"args", args},
          {"header", header},     {"body", blocks},     {"verdicts", vs}};
}

} // namespace sato2d
