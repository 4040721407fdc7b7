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

#include <map>
#include <string>
#include <vector>

#include "report.hpp"

namespace sato2d {

struct Command {
  std::string name;
  std::vector<std::string> args;
  std::map<std::string, std::vector<std::string>> opts; // option name without dashes
};

const std::vector<std::string> &command_names();

// Runs one subcommand. Throws UsageError for malformed invocations and the
// other Error subclasses for domain failures.
Report run_command(const Session &session, const Command &cmd);

} // namespace sato2d
