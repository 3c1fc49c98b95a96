// Copyright 2026 The partfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "partfact/automata.hpp"

namespace partfact::cli {

/// Exit statuses of the command-line tool.
enum ExitCode : int {
  kOk = 0,
  kFalse = 1,  // a boolean verdict was false under --quiet
  kMalformed = 2,
  kResource = 3,
  kPrecondition = 4,
};

/// The fixed command set, in help order.
const std::vector<std::string>& commands();

struct AnalysisRequest {
  nlohmann::json input;
  std::string command;
  std::size_t max_len = 12;
  std::optional<std::string> word;
  std::optional<std::string> seq;
  std::optional<std::string> op;
  std::optional<std::string> left;
  std::optional<std::string> right;
  bool timing = true;
  Budget budget;
};

struct AnalysisReport {
  nlohmann::json body;
  /// Set for boolean commands.
  std::optional<bool> verdict;
};

/// Dispatches one analysis. Library errors propagate: InvalidInput for
/// malformed documents or options, ResourceLimit, PreconditionViolation.
AnalysisReport run(const AnalysisRequest& request);

/// Human-readable rendering of a report.
std::string render_table(const nlohmann::json& report);

/// Maps the exception in flight to an exit status and writes its message.
int report_error(std::ostream& err);

/// Full command-line entry point.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace partfact::cli
