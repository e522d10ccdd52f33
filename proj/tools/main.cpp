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

// chainacl: scenario runner and snapshot verifier for the simulated
// smart-contract access control network.

#include <iostream>

#include <CLI11.hpp>

#include "chainacl/runner.hpp"
#include "chainacl/snapshot.hpp"

int main(int argc, char** argv) {
  CLI::App app{"chainacl: deterministic smart-contract access control simulator"};
  app.require_subcommand(1);

  std::string scenarioPath;
  std::string outDir = "out";
  uint32_t difficulty = 0;
  uint64_t seed = 0;
  bool strictTime = false;
  bool quiet = false;

  CLI::App* run = app.add_subcommand("run", "Run a scenario file");
  run->add_option("scenario", scenarioPath, "Scenario file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);
  run->add_option("-o,--out", outDir, "Output directory for run.log and the chain snapshot")
      ->capture_default_str();
  auto* diffOpt = run->add_option("-d,--difficulty", difficulty,
                                  "Override the scenario's proof-of-work difficulty (bits)");
  auto* seedOpt = run->add_option("-s,--seed", seed, "Override the scenario's seed");
  run->add_flag("--strict-time", strictTime,
                "Contracts use block timestamps instead of caller-supplied times");
  run->add_flag("-q,--quiet", quiet, "Suppress the run log on stdout");

  std::string snapshotPath;
  CLI::App* verify = app.add_subcommand("verify", "Replay and verify a chain snapshot");
  verify->add_option("snapshot", snapshotPath, "Snapshot file (JSON)")
      ->required()
      ->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  if (run->parsed()) {
    chainacl::RunOptions opts;
    opts.outDir = outDir;
    opts.strictTime = strictTime;
    opts.diagnostics = &std::cerr;
    if (diffOpt->count() > 0) opts.difficultyOverride = difficulty;
    if (seedOpt->count() > 0) opts.seedOverride = seed;

    chainacl::RunResult result = chainacl::runScenarioFile(scenarioPath, opts);
    if (!quiet) std::cout << result.runLog;
    if (result.exitCode != chainacl::kRunOk) {
      std::cerr << "run failed: " << result.error << "\n";
    } else {
      std::cerr << "run ok; outputs in " << outDir << "\n";
    }
    return result.exitCode;
  }

  if (verify->parsed()) {
    try {
      bool ok = chainacl::verifySnapshotFile(snapshotPath);
      std::cout << (ok ? "snapshot ok" : "snapshot INVALID") << "\n";
      return ok ? 0 : 1;
    } catch (const chainacl::ScenarioError& e) {
      std::cerr << "verify failed: " << e.what() << "\n";
      return chainacl::kRunSchemaError;
    }
  }
  return 0;
}
