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

#ifndef CHAINACL_SCENARIO_HPP
#define CHAINACL_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "chainacl/sim.hpp"
#include "chainacl/topology.hpp"

namespace chainacl {

enum class ActionKind {
  DeployJc,
  RegisterMethod,
  UpdateMethod,
  DeleteMethod,
  PolicyAdd,
  PolicyUpdate,
  PolicyDelete,
  Request,
  Expect,
};

const char* actionKindName(ActionKind kind);

struct ScenarioAction {
  int64_t atTime = 0;
  ActionKind kind = ActionKind::Request;
  std::string actor;

  std::string methodName;
  std::string subject;  // peer id
  std::string object;   // peer id
  std::vector<PolicySpec> policies;

  std::string resource;
  std::string action;
  std::optional<std::string> permission;
  std::optional<int64_t> minInterval;
  std::optional<int64_t> threshold;

  bool forwardedByObject = false;

  // expect
  std::optional<bool> expectResult;
  std::optional<int64_t> expectPenalty;
};

struct JcParams {
  int64_t base = 2;
  int64_t interval = 3;
  int64_t penaltyUnitSeconds = 60;
};

// A timestamped action script plus the topology it runs against. Action
// times are strictly increasing and each time step gets exactly one mining
// round, so transaction-to-block latency is always one round.
struct Scenario {
  static constexpr int kSchemaVersion = 1;

  Topology topology;
  uint32_t difficultyBits = 8;
  uint64_t seed = 1;
  JcParams jcParams;
  std::vector<ScenarioAction> actions;

  // Schema checks beyond parsing: strictly increasing times, known actors,
  // expect only after a request, and every request time larger than every
  // policy minInterval in the script (keeps the ToLR=0 first-request
  // sentinel sound).
  void validate() const;  // throws ScenarioError

  static Scenario loadFile(const std::string& path);  // throws ScenarioError
};

}  // namespace chainacl

#endif  // CHAINACL_SCENARIO_HPP
