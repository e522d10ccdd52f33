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

#ifndef CHAINACL_TOPOLOGY_HPP
#define CHAINACL_TOPOLOGY_HPP

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chainacl/address.hpp"

namespace chainacl {

enum class PeerRole { Server, Storage, UserDevice, Gateway, IotDevice };

const char* roleName(PeerRole role);
std::optional<PeerRole> roleFromName(const std::string& name);

// One peer of the simulated IoT network. IoT devices never submit
// transactions themselves: their agent gateway signs with the device's
// account on their behalf.
struct Peer {
  std::string id;
  PeerRole role = PeerRole::Server;
  std::string agentId;                 // iotDevice only: its gateway
  std::vector<std::string> gatewayOf;  // gateway only: derived from agents
  Address account;                     // assigned when the world is built
};

struct Topology {
  std::vector<Peer> peers;

  const Peer* find(const std::string& id) const;
  Peer* find(const std::string& id);

  // Enforces the agency rules: agents exist and are gateways, every
  // iotDevice has exactly one agent, ids unique. Fills gatewayOf.
  void validate();

  static Topology fromJson(const nlohmann::json& j);
  static Topology loadFile(const std::string& path);
};

}  // namespace chainacl

#endif  // CHAINACL_TOPOLOGY_HPP
