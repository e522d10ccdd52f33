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

#include "chainacl/scenario.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chainacl/errors.hpp"

namespace chainacl {

using nlohmann::json;

const char* actionKindName(ActionKind kind) {
  switch (kind) {
    case ActionKind::DeployJc: return "deployJC";
    case ActionKind::RegisterMethod: return "registerMethod";
    case ActionKind::UpdateMethod: return "updateMethod";
    case ActionKind::DeleteMethod: return "deleteMethod";
    case ActionKind::PolicyAdd: return "policyAdd";
    case ActionKind::PolicyUpdate: return "policyUpdate";
    case ActionKind::PolicyDelete: return "policyDelete";
    case ActionKind::Request: return "request";
    case ActionKind::Expect: return "expect";
  }
  return "unknown";
}

namespace {

std::optional<ActionKind> actionKindFromName(const std::string& name) {
  if (name == "deployJC") return ActionKind::DeployJc;
  if (name == "registerMethod") return ActionKind::RegisterMethod;
  if (name == "updateMethod") return ActionKind::UpdateMethod;
  if (name == "deleteMethod") return ActionKind::DeleteMethod;
  if (name == "policyAdd") return ActionKind::PolicyAdd;
  if (name == "policyUpdate") return ActionKind::PolicyUpdate;
  if (name == "policyDelete") return ActionKind::PolicyDelete;
  if (name == "request") return ActionKind::Request;
  if (name == "expect") return ActionKind::Expect;
  return std::nullopt;
}

PolicySpec policyFromJson(const json& j) {
  PolicySpec p;
  p.resource = j.at("resource").get<std::string>();
  p.action = j.at("action").get<std::string>();
  p.permission = j.at("permission").get<std::string>();
  p.minInterval = j.at("minInterval").get<int64_t>();
  p.threshold = j.at("threshold").get<int64_t>();
  return p;
}

ScenarioAction actionFromJson(const json& j) {
  ScenarioAction a;
  a.atTime = j.at("atTime").get<int64_t>();
  auto kind = actionKindFromName(j.at("kind").get<std::string>());
  if (!kind) {
    throw ScenarioError("unknown action kind '" +
                        j.at("kind").get<std::string>() + "'");
  }
  a.kind = *kind;
  if (j.contains("actor")) a.actor = j.at("actor").get<std::string>();
  if (j.contains("methodName")) a.methodName = j.at("methodName").get<std::string>();
  if (j.contains("subject")) a.subject = j.at("subject").get<std::string>();
  if (j.contains("object")) a.object = j.at("object").get<std::string>();
  if (j.contains("policies")) {
    for (const auto& p : j.at("policies")) a.policies.push_back(policyFromJson(p));
  }
  if (j.contains("resource")) a.resource = j.at("resource").get<std::string>();
  if (j.contains("action")) a.action = j.at("action").get<std::string>();
  if (j.contains("permission")) a.permission = j.at("permission").get<std::string>();
  if (j.contains("minInterval")) a.minInterval = j.at("minInterval").get<int64_t>();
  if (j.contains("threshold")) a.threshold = j.at("threshold").get<int64_t>();
  if (j.contains("flow")) {
    const std::string flow = j.at("flow").get<std::string>();
    if (flow == "objectForward") {
      a.forwardedByObject = true;
    } else if (flow != "subject") {
      throw ScenarioError("flow must be \"subject\" or \"objectForward\"");
    }
  }
  if (j.contains("result")) a.expectResult = j.at("result").get<bool>();
  if (j.contains("penalty")) a.expectPenalty = j.at("penalty").get<int64_t>();
  return a;
}

}  // namespace

void Scenario::validate() const {
  int64_t lastTime = -1;
  int64_t maxMinInterval = -1;
  bool sawRequest = false;
  size_t requestsBefore = 0;

  // Collect every minInterval appearing anywhere in the script.
  auto noteMinInterval = [&](int64_t v) {
    maxMinInterval = std::max(maxMinInterval, v);
  };
  for (const ScenarioAction& a : actions) {
    for (const PolicySpec& p : a.policies) noteMinInterval(p.minInterval);
    if (a.minInterval) noteMinInterval(*a.minInterval);
  }

  for (const ScenarioAction& a : actions) {
    if (a.atTime <= lastTime) {
      throw ScenarioError("action times must be strictly increasing (t=" +
                          std::to_string(a.atTime) + ")");
    }
    lastTime = a.atTime;

    if (a.kind != ActionKind::Expect) {
      if (a.actor.empty()) {
        throw ScenarioError(std::string(actionKindName(a.kind)) +
                            " action needs an actor");
      }
      if (topology.find(a.actor) == nullptr) {
        throw ScenarioError("unknown actor '" + a.actor + "'");
      }
    }
    switch (a.kind) {
      case ActionKind::RegisterMethod:
        if (topology.find(a.subject) == nullptr || topology.find(a.object) == nullptr) {
          throw ScenarioError("registerMethod needs known subject and object peers");
        }
        [[fallthrough]];
      case ActionKind::UpdateMethod:
      case ActionKind::DeleteMethod:
      case ActionKind::PolicyAdd:
      case ActionKind::PolicyUpdate:
      case ActionKind::PolicyDelete:
        if (a.methodName.empty()) {
          throw ScenarioError(std::string(actionKindName(a.kind)) +
                              " action needs a methodName");
        }
        break;
      case ActionKind::Request:
        if (a.methodName.empty() || a.resource.empty() || a.action.empty()) {
          throw ScenarioError("request action needs methodName, resource and action");
        }
        // Keep the ToLR=0 first-request sentinel sound: request times must
        // exceed every minInterval named in the script.
        if (maxMinInterval >= 0 && a.atTime <= maxMinInterval) {
          throw ScenarioError(
              "request at t=" + std::to_string(a.atTime) +
              " does not exceed the largest policy minInterval (" +
              std::to_string(maxMinInterval) + ")");
        }
        sawRequest = true;
        ++requestsBefore;
        break;
      case ActionKind::Expect:
        if (!sawRequest) {
          throw ScenarioError("expect action with no preceding request");
        }
        if (!a.expectResult && !a.expectPenalty) {
          throw ScenarioError("expect action needs result and/or penalty");
        }
        break;
      default:
        break;
    }
  }
  (void)requestsBefore;
}

Scenario Scenario::loadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot read scenario from " + path);
  std::ostringstream buf;
  buf << in.rdbuf();

  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("scenario parse error: ") + e.what());
  }

  Scenario s;
  try {
    if (j.at("schemaVersion").get<int>() != kSchemaVersion) {
      throw ScenarioError("unsupported scenario schemaVersion");
    }
    if (j.contains("topology")) {
      // Path relative to the scenario file.
      std::filesystem::path topoPath = j.at("topology").get<std::string>();
      if (topoPath.is_relative()) {
        topoPath = std::filesystem::path(path).parent_path() / topoPath;
      }
      s.topology = Topology::loadFile(topoPath.string());
    } else if (j.contains("peers")) {
      s.topology = Topology::fromJson(j);
    } else {
      throw ScenarioError("scenario needs a topology path or inline peers");
    }
    if (j.contains("difficulty")) s.difficultyBits = j.at("difficulty").get<uint32_t>();
    if (j.contains("seed")) s.seed = j.at("seed").get<uint64_t>();
    if (j.contains("jcParams")) {
      const auto& p = j.at("jcParams");
      s.jcParams.base = p.at("base").get<int64_t>();
      s.jcParams.interval = p.at("interval").get<int64_t>();
      if (p.contains("penaltyUnitSeconds")) {
        s.jcParams.penaltyUnitSeconds = p.at("penaltyUnitSeconds").get<int64_t>();
      }
    }
    for (const auto& a : j.at("actions")) s.actions.push_back(actionFromJson(a));
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("scenario schema error: ") + e.what());
  }
  s.validate();
  return s;
}

}  // namespace chainacl
