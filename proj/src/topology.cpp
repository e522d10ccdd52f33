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

#include "chainacl/topology.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chainacl/errors.hpp"

namespace chainacl {

using nlohmann::json;

const char* roleName(PeerRole role) {
  switch (role) {
    case PeerRole::Server: return "server";
    case PeerRole::Storage: return "storage";
    case PeerRole::UserDevice: return "userDevice";
    case PeerRole::Gateway: return "gateway";
    case PeerRole::IotDevice: return "iotDevice";
  }
  return "unknown";
}

std::optional<PeerRole> roleFromName(const std::string& name) {
  if (name == "server") return PeerRole::Server;
  if (name == "storage") return PeerRole::Storage;
  if (name == "userDevice") return PeerRole::UserDevice;
  if (name == "gateway") return PeerRole::Gateway;
  if (name == "iotDevice") return PeerRole::IotDevice;
  return std::nullopt;
}

const Peer* Topology::find(const std::string& id) const {
  for (const Peer& p : peers) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

Peer* Topology::find(const std::string& id) {
  for (Peer& p : peers) {
    if (p.id == id) return &p;
  }
  return nullptr;
}

void Topology::validate() {
  std::set<std::string> ids;
  for (Peer& p : peers) {
    if (p.id.empty()) throw ScenarioError("peer id must not be empty");
    if (!ids.insert(p.id).second) {
      throw ScenarioError("duplicate peer id '" + p.id + "'");
    }
    p.gatewayOf.clear();
  }
  for (Peer& p : peers) {
    if (p.role == PeerRole::IotDevice) {
      if (p.agentId.empty()) {
        throw ScenarioError("iotDevice '" + p.id + "' needs an agent gateway");
      }
      Peer* agent = find(p.agentId);
      if (agent == nullptr) {
        throw ScenarioError("agent '" + p.agentId + "' of '" + p.id + "' not found");
      }
      if (agent->role != PeerRole::Gateway) {
        throw ScenarioError("agent '" + p.agentId + "' of '" + p.id +
                            "' is not a gateway");
      }
      agent->gatewayOf.push_back(p.id);
    } else if (!p.agentId.empty()) {
      throw ScenarioError("peer '" + p.id + "' has an agent but is not an iotDevice");
    }
  }
}

Topology Topology::fromJson(const json& j) {
  Topology topo;
  try {
    for (const auto& pj : j.at("peers")) {
      Peer p;
      p.id = pj.at("id").get<std::string>();
      auto role = roleFromName(pj.at("role").get<std::string>());
      if (!role) {
        throw ScenarioError("unknown role '" + pj.at("role").get<std::string>() +
                            "' for peer '" + p.id + "'");
      }
      p.role = *role;
      if (pj.contains("agent")) p.agentId = pj.at("agent").get<std::string>();
      topo.peers.push_back(std::move(p));
    }
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("topology schema error: ") + e.what());
  }
  topo.validate();
  return topo;
}

Topology Topology::loadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot read topology from " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  json j;
  try {
    j = json::parse(buf.str());
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("topology parse error: ") + e.what());
  }
  return fromJson(j);
}

}  // namespace chainacl
