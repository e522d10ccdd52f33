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

#include "chainacl/snapshot.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "chainacl/errors.hpp"

namespace chainacl {

using nlohmann::json;

namespace {

json blockToJson(const Block& b) {
  json txs = json::array();
  for (const Transaction& tx : b.txList) txs.push_back(tx.toJson());
  return json{
      {"height", b.height},
      {"prevHash", "0x" + b.prevHash.hex()},
      {"txs", std::move(txs)},
      {"stateRoot", "0x" + b.stateRoot.hex()},
      {"nonce", b.nonce},
      {"miner", b.minerAddress.hex()},
      {"timestamp", b.timestamp},
  };
}

Block blockFromJson(const json& j) {
  Block b;
  b.height = j.at("height").get<uint64_t>();
  b.prevHash = Digest::fromHex(j.at("prevHash").get<std::string>());
  for (const auto& t : j.at("txs")) b.txList.push_back(Transaction::fromJson(t));
  b.stateRoot = Digest::fromHex(j.at("stateRoot").get<std::string>());
  b.nonce = j.at("nonce").get<uint64_t>();
  b.minerAddress = Address::fromHex(j.at("miner").get<std::string>());
  b.timestamp = j.at("timestamp").get<int64_t>();
  return b;
}

}  // namespace

Snapshot Snapshot::capture(const Node& node) {
  Snapshot s;
  s.seed = node.world().seed();
  s.difficultyBits = node.config().difficultyBits;
  s.finalStateRoot = node.tip().stateRoot;
  s.blocks = node.chain();
  // Genesis accounts are re-derivable from (seed, counter); the explicit
  // list makes the file self-describing and lets the loader cross-check.
  World probe(s.seed);
  for (uint64_t i = 0; i < node.world().accountCount(); ++i) {
    s.genesisAccounts.push_back(probe.createAccount());
  }
  return s;
}

std::string Snapshot::toJsonText() const {
  json accounts = json::array();
  for (const Address& a : genesisAccounts) accounts.push_back(a.hex());
  json blocksJson = json::array();
  for (const Block& b : blocks) blocksJson.push_back(blockToJson(b));
  json j{
      {"schemaVersion", kSchemaVersion},
      {"seed", seed},
      {"difficulty", difficultyBits},
      {"genesisAccounts", std::move(accounts)},
      {"finalStateRoot", "0x" + finalStateRoot.hex()},
      {"blocks", std::move(blocksJson)},
  };
  return j.dump(2) + "\n";
}

Snapshot Snapshot::fromJsonText(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("snapshot parse error: ") + e.what());
  }
  try {
    if (j.at("schemaVersion").get<int>() != kSchemaVersion) {
      throw ScenarioError("unsupported snapshot schemaVersion");
    }
    Snapshot s;
    s.seed = j.at("seed").get<uint64_t>();
    s.difficultyBits = j.at("difficulty").get<uint32_t>();
    for (const auto& a : j.at("genesisAccounts")) {
      s.genesisAccounts.push_back(Address::fromHex(a.get<std::string>()));
    }
    s.finalStateRoot = Digest::fromHex(j.at("finalStateRoot").get<std::string>());
    for (const auto& b : j.at("blocks")) s.blocks.push_back(blockFromJson(b));
    return s;
  } catch (const json::exception& e) {
    throw ScenarioError(std::string("snapshot schema error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ScenarioError(std::string("snapshot field error: ") + e.what());
  }
}

void Snapshot::save(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ScenarioError("cannot write snapshot to " + path);
  out << toJsonText();
}

Snapshot Snapshot::load(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot read snapshot from " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return fromJsonText(buf.str());
}

World rebuildGenesisWorld(const Snapshot& snap,
                          const std::function<void(World&)>& customize) {
  World w(snap.seed);
  if (customize) customize(w);
  for (const Address& expected : snap.genesisAccounts) {
    Address got = w.createAccount();
    if (got != expected) {
      throw ScenarioError("genesis account list does not match seed derivation");
    }
  }
  return w;
}

bool verifySnapshot(const Snapshot& snap,
                    const std::function<void(World&)>& customize) {
  if (snap.blocks.empty()) return false;
  std::optional<World> genesis;
  try {
    genesis = rebuildGenesisWorld(snap, customize);
  } catch (const ScenarioError&) {
    return false;
  }
  ChainConfig cfg;
  cfg.difficultyBits = snap.difficultyBits;
  Node node(std::move(*genesis), cfg);

  // The recorded genesis block must be the one this world produces.
  if (blockHash(snap.blocks[0]) != blockHash(node.tip())) return false;

  for (size_t i = 1; i < snap.blocks.size(); ++i) {
    if (!node.validateBlock(snap.blocks[i])) return false;
    node.acceptBlock(snap.blocks[i]);
  }
  if (node.tip().stateRoot != snap.finalStateRoot) return false;
  return node.world().digest() == snap.finalStateRoot;
}

bool verifySnapshotFile(const std::string& path) {
  return verifySnapshot(Snapshot::load(path));
}

}  // namespace chainacl
