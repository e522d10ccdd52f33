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

#include "chainacl/runner.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chainacl/errors.hpp"
#include "chainacl/snapshot.hpp"

namespace chainacl {

using nlohmann::json;

namespace {

json outcomeToJson(const AccessOutcome& o) {
  return json{
      {"methodName", o.methodName}, {"resource", o.resource},
      {"action", o.action},         {"time", o.time},
      {"result", o.result},         {"penalty", o.penaltySeconds},
      {"txId", "0x" + o.txId.hex()},
  };
}

class RunLogBuilder {
 public:
  void logRound(const ScenarioAction& action, const RoundResult& round) {
    for (const Receipt& r : round.receipts) {
      json line = r.toJson();
      line["record"] = "tx";
      line["height"] = round.blockHeight;
      line["action"] = actionKindName(action.kind);
      line["atTime"] = action.atTime;
      lines_ << line.dump() << "\n";
    }
  }

  void logOutcome(const ScenarioAction& action, const AccessOutcome& outcome) {
    json line{{"record", "outcome"},
              {"atTime", action.atTime},
              {"outcome", outcomeToJson(outcome)}};
    lines_ << line.dump() << "\n";
  }

  void logExpect(const ScenarioAction& action, const AccessOutcome& actual, bool pass) {
    json expected;
    if (action.expectResult) expected["result"] = *action.expectResult;
    if (action.expectPenalty) expected["penalty"] = *action.expectPenalty;
    json line{{"record", "expect"},
              {"atTime", action.atTime},
              {"expected", expected},
              {"actual", json{{"result", actual.result},
                              {"penalty", actual.penaltySeconds}}},
              {"status", pass ? "pass" : "fail"}};
    lines_ << line.dump() << "\n";
  }

  void logNote(const std::string& kind, const std::string& text) {
    json line{{"record", kind}, {"note", text}};
    lines_ << line.dump() << "\n";
  }

  std::string take() { return lines_.str(); }

 private:
  std::ostringstream lines_;
};

}  // namespace

RunResult runScenario(const Scenario& scenario, const RunOptions& opts) {
  RunResult result;
  RunLogBuilder log;

  SimConfig simCfg;
  simCfg.chain.difficultyBits =
      opts.difficultyOverride.value_or(scenario.difficultyBits);
  simCfg.seed = opts.seedOverride.value_or(scenario.seed);
  simCfg.strictTime = opts.strictTime;

  try {
    scenario.validate();
    Simulation sim(scenario.topology, simCfg);

    std::optional<AccessOutcome> lastOutcome;
    std::set<std::string> warnedDangling;
    const ScenarioAction* current = nullptr;
    sim.setRoundObserver([&](const RoundResult& round) {
      if (current != nullptr) log.logRound(*current, round);
    });

    for (const ScenarioAction& action : scenario.actions) {
      current = &action;
      sim.runRound(action.atTime);  // flush anything pending before this step
      switch (action.kind) {
        case ActionKind::DeployJc: {
          std::string name = action.methodName.empty() ? "JC" : action.methodName;
          sim.deployJudge(action.actor, scenario.jcParams.base,
                          scenario.jcParams.interval,
                          scenario.jcParams.penaltyUnitSeconds, name);
          break;
        }
        case ActionKind::RegisterMethod: {
          const Peer& subject = sim.peer(action.subject);
          const Peer& object = sim.peer(action.object);
          sim.registerAccessControlMethod(action.actor, subject.account,
                                          object.account, action.methodName,
                                          action.policies);
          break;
        }
        case ActionKind::UpdateMethod:
          sim.updateAccessControlMethod(action.actor, action.methodName,
                                        action.policies);
          break;
        case ActionKind::DeleteMethod:
          sim.deleteAccessControlMethod(action.actor, action.methodName);
          break;
        case ActionKind::PolicyAdd: {
          PolicySpec p;
          p.resource = action.resource;
          p.action = action.action;
          p.permission = action.permission.value_or("allow");
          p.minInterval = action.minInterval.value_or(0);
          p.threshold = action.threshold.value_or(1);
          sim.addPolicyThroughCreator(action.actor, action.methodName, p);
          break;
        }
        case ActionKind::PolicyUpdate:
          sim.updatePolicyThroughCreator(action.actor, action.methodName,
                                         action.resource, action.action,
                                         action.permission, action.minInterval,
                                         action.threshold);
          break;
        case ActionKind::PolicyDelete:
          sim.deletePolicyThroughCreator(action.actor, action.methodName,
                                         action.resource, action.action);
          break;
        case ActionKind::Request: {
          AccessOutcome outcome = sim.requestAccess(
              action.actor, action.methodName, action.resource, action.action,
              action.atTime, action.forwardedByObject);
          log.logOutcome(action, outcome);
          lastOutcome = outcome;
          break;
        }
        case ActionKind::Expect: {
          if (!lastOutcome) throw ScenarioError("expect with no request outcome");
          bool pass = true;
          if (action.expectResult && *action.expectResult != lastOutcome->result) {
            pass = false;
          }
          if (action.expectPenalty &&
              *action.expectPenalty != lastOutcome->penaltySeconds) {
            pass = false;
          }
          log.logExpect(action, *lastOutcome, pass);
          if (!pass) ++result.expectFailures;
          break;
        }
      }
      // A lookup-table entry whose contract died without methodDelete is
      // legal but worth flagging.
      for (const std::string& name : sim.danglingMethods()) {
        if (warnedDangling.insert(name).second) {
          log.logNote("warning", "method '" + name +
                                     "' points at a destroyed contract");
          if (opts.diagnostics != nullptr) {
            *opts.diagnostics << "warning: method '" << name
                              << "' points at a destroyed contract\n";
          }
        }
      }
      current = nullptr;
    }

    Snapshot snap = Snapshot::capture(sim.node(0));
    result.snapshotText = snap.toJsonText();
    if (result.expectFailures > 0) {
      result.exitCode = kRunExpectFailed;
      result.error = std::to_string(result.expectFailures) + " expectation(s) failed";
    }
  } catch (const ScenarioError& e) {
    result.exitCode = kRunSchemaError;
    result.error = e.what();
    log.logNote("error", e.what());
  } catch (const std::exception& e) {
    result.exitCode = kRunExecutionError;
    result.error = e.what();
    log.logNote("error", e.what());
  }

  result.runLog = log.take();

  if (!opts.outDir.empty()) {
    std::filesystem::create_directories(opts.outDir);
    std::filesystem::path dir(opts.outDir);
    std::ofstream logOut(dir / "run.log", std::ios::binary);
    logOut << result.runLog;
    if (!result.snapshotText.empty()) {
      std::ofstream snapOut(dir / "chain.snapshot.json", std::ios::binary);
      snapOut << result.snapshotText;
    }
  }
  return result;
}

RunResult runScenarioFile(const std::string& path, const RunOptions& opts) {
  try {
    Scenario scenario = Scenario::loadFile(path);
    return runScenario(scenario, opts);
  } catch (const ScenarioError& e) {
    RunResult result;
    result.exitCode = kRunSchemaError;
    result.error = e.what();
    return result;
  }
}

}  // namespace chainacl
