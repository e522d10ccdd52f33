// Copyright 2026 the chainacl authors.
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

#ifndef CHAINACL_RUNNER_HPP
#define CHAINACL_RUNNER_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "chainacl/scenario.hpp"

namespace chainacl {

struct RunOptions {
  std::optional<uint32_t> difficultyOverride;
  std::optional<uint64_t> seedOverride;
  std::string outDir;  // empty => nothing written to disk
  bool strictTime = false;
  std::ostream* diagnostics = nullptr;  // warnings and progress; may be null
};

// Exit codes shared by the library and the CLI.
enum RunExit : int {
  kRunOk = 0,
  kRunExpectFailed = 1,
  kRunSchemaError = 2,
  kRunExecutionError = 3,
};

struct RunResult {
  int exitCode = kRunOk;
  // One JSON record per line: transactions with receipts, request outcomes
  // and expectation verdicts, in execution order. Identical scenario + seed
  // give byte-identical text.
  std::string runLog;
  std::string snapshotText;
  size_t expectFailures = 0;
  std::string error;  // first fatal error, when exitCode != 0
};

RunResult runScenario(const Scenario& scenario, const RunOptions& opts);
RunResult runScenarioFile(const std::string& path, const RunOptions& opts);

}  // namespace chainacl

#endif  // CHAINACL_RUNNER_HPP
