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

#ifndef CHAINACL_SNAPSHOT_HPP
#define CHAINACL_SNAPSHOT_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chainacl/chain.hpp"

namespace chainacl {

// Chain snapshot: genesis parameters plus the full block list, as a
// versioned JSON document. Enough to rebuild the genesis world and replay
// every block on a fresh node.
struct Snapshot {
  static constexpr int kSchemaVersion = 1;

  uint64_t seed = 0;
  uint32_t difficultyBits = 8;
  std::vector<Address> genesisAccounts;  // creation order
  Digest finalStateRoot;
  std::vector<Block> blocks;  // including genesis at index 0

  static Snapshot capture(const Node& node);

  std::string toJsonText() const;
  static Snapshot fromJsonText(const std::string& text);  // throws ScenarioError

  void save(const std::string& path) const;
  static Snapshot load(const std::string& path);  // throws ScenarioError
};

// Rebuilds the genesis world described by the snapshot. `customize` runs
// before accounts are created so a harness can register extra contract
// kinds.
World rebuildGenesisWorld(const Snapshot& snap,
                          const std::function<void(World&)>& customize = {});

// Replays a snapshot from genesis on a fresh node: true iff the genesis
// parameters reproduce, every block validates and the final state root
// matches the recorded one.
bool verifySnapshot(const Snapshot& snap,
                    const std::function<void(World&)>& customize = {});
bool verifySnapshotFile(const std::string& path);  // throws ScenarioError on parse failure

}  // namespace chainacl

#endif  // CHAINACL_SNAPSHOT_HPP
