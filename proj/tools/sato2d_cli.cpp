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

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sato2d/sato2d.h"

namespace {

struct Sub {
  const char *name;
  const char *help;
  const char *args_help;
  std::vector<std::pair<const char *, const char *>> opts; // name, help
};

const std::vector<Sub> &subcommands() {
  static const std::vector<Sub> subs = {
      {"mul", "Compose operators in the order given", "OP...", {}},
      {"comm", "Commutator [A, B]", "A B", {}},
      {"ord", "Bi-order ord_Gamma and monicity", "OP", {}},
      {"a1", "Check condition A1(m)", "OP", {{"m", "bound m (default: k + l of ord_Gamma)"}}},
      {"sato", "Solve for S from a spanning set of W", "W...",
       {{"a", "ring generator symbol (repeatable)"}}},
      {"ring-from-pair", "Ring generators B = S a S^-1 from a Schur pair", "",
       {{"a", "generator of A (repeatable)"},
        {"w", "spanning element of W (repeatable)"},
        {"r", "rank r"}}},
      {"pair-from-ring", "Schur pair of a commutative ring of operators", "OP...", {}},
      {"normalize", "Normalize a pair of commuting monic operators", "P Q", {}},
      {"hilbert", "Filtration dimensions and leading coefficient", "W...",
       {{"a", "ring generator symbol (repeatable)"},
        {"r", "rank r"},
        {"nmax", "largest level (default 12)"},
        {"step", "level step d of the fit (default 1)"},
        {"example", "use a catalog pair: ex_cuspidal or ex_nodal"},
        {"p", "parameter P(d1) for --example"}}},
      {"invariants", "Invariants N, N~, strong admissibility and rank", "A...",
       {{"example", "use a catalog ring: ex_cuspidal or ex_nodal"},
        {"p", "parameter P(d1) for --example"}}},
      {"darboux", "Darboux transformation F = S d2^n", "B...",
       {{"s", "operator S"}, {"n", "power n (default 1)"}}},
      {"expand", "Laurent expansion of P/Q", "P Q", {}},
      {"lemma36", "Membership lemma on one pair or a seeded sweep", "[P Q]",
       {{"m", "bound m"}, {"samples", "sweep size"}, {"deg", "sweep degree bound (default 4)"}}},
      {"example", "Catalog example: ex_cuspidal, ex_nodal, counterexample", "ID",
       {{"p", "parameter P(d1) (default 1)"}, {"g", "coefficient g_q (repeatable)"}}},
  };
  return subs;
}

int report_error(sato2d_status st) {
  std::cerr << "error: " << sato2d_status_name(st) << ": " << sato2d_last_error() << "\n";
  return sato2d_exit_code(st);
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"sato2d: Schur pairs and commutative rings of operators in two variables"};
  app.require_subcommand(1);
  app.fallthrough();

  int nx = 8, n1 = 6, smin = -8, smax = 4, bound = -1;
  std::string field = "Q", json_path;
  std::uint64_t seed = 0;
  app.add_option("--nx", nx, "x-degree truncation")->capture_default_str();
  app.add_option("--n1", n1, "d1-degree truncation")->capture_default_str();
  app.add_option("--smin", smin, "lowest d2-degree kept")->capture_default_str();
  app.add_option("--smax", smax, "declared highest d2-degree")->capture_default_str();
  app.add_option("--field", field, "Q or Q(sqrt,d)")->capture_default_str();
  app.add_option("--bound", bound, "degree bound (default nx - 1)");
  app.add_option("--seed", seed, "random seed")->capture_default_str();
  app.add_option("--json", json_path, "write the machine report to this path (- for stdout)");

  std::map<std::string, std::vector<std::string>> positional;
  std::map<std::string, std::map<std::string, std::vector<std::string>>> values;
  for (const auto &s : subcommands()) {
    CLI::App *sub = app.add_subcommand(s.name, s.help);
    if (*s.args_help)
      sub->add_option("args", positional[s.name], s.args_help);
    for (const auto &[name, help] : s.opts)
      sub->add_option(std::string("--") + name, values[s.name][name], help);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    int rc = app.exit(e);
    if (rc == 0)
      return 0;
    std::cerr << app.help();
    return 2;
  }

  CLI::App *chosen = app.get_subcommands().front();
  std::string name = chosen->get_name();
  std::vector<std::string> call = positional[name];
  for (const auto &[opt, vals] : values[name])
    for (const auto &v : vals) {
      call.push_back("--" + opt);
      call.push_back(v);
    }
  std::vector<const char *> cargv;
  for (const auto &a : call)
    cargv.push_back(a.c_str());

  sato2d_session *session = nullptr;
  sato2d_status st = sato2d_session_new(field.c_str(), nx, n1, smin, smax, &session);
  if (st != SATO2D_OK)
    return report_error(st);
  if (bound >= 0 && (st = sato2d_session_set_bound(session, bound)) != SATO2D_OK) {
    sato2d_session_free(session);
    return report_error(st);
  }
  sato2d_session_set_seed(session, seed);

  sato2d_report *rep = nullptr;
  st = sato2d_run(session, name.c_str(), static_cast<int>(cargv.size()), cargv.data(), &rep);
  sato2d_session_free(session);
  if (st != SATO2D_OK)
    return report_error(st);

  std::cout << sato2d_report_text(rep);
  int rc = 0;
  if (json_path == "-") {
    std::cout << sato2d_report_json(rep);
  } else if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    out << sato2d_report_json(rep);
    if (!out) {
      std::cerr << "error: cannot write " << json_path << "\n";
      rc = 1;
    }
  }
  sato2d_report_free(rep);
  return rc;
}
