// Copyright 2026 The zfo Authors
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

#include "json.hpp"

namespace zfo::cli {

enum ExitCode : int {
  kSuccess = 0,
  kPropertyFails = 1,
  kUsageOrInput = 2,
};

/// Everything a command reports. The JSON form always carries the keys
/// command, verdicts, witnesses, trace, family and timing.
struct RunReport {
  std::string command;
  nlohmann::json verdicts = nlohmann::json::object();
  nlohmann::json witnesses = nlohmann::json::object();
  nlohmann::json trace = nullptr;
  nlohmann::json family = nullptr;
  nlohmann::json output = nullptr;  // written path or inline matrix
  double elapsed_ms = 0.0;
  std::vector<std::string> summary;  // human-readable lines

  nlohmann::json to_json() const;
  std::string to_text() const;
};

struct CommandResult {
  int exit_code = kSuccess;
  RunReport report;
  std::string out;  // what the binary prints on stdout
  std::string err;  // diagnostics for stderr
};

/// Parses and runs one command line (without the program name).
CommandResult run_command(const std::vector<std::string>& args);

}  // namespace zfo::cli
