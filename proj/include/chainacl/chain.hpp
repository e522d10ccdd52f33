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

#ifndef CHAINACL_CHAIN_HPP
#define CHAINACL_CHAIN_HPP

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "chainacl/digest.hpp"
#include "chainacl/errors.hpp"
#include "chainacl/events.hpp"
#include "chainacl/tx.hpp"
#include "chainacl/world.hpp"

namespace chainacl {

// Hash-chained batch of transactions plus the digest of the world after
// executing them. stateRoot is what lets every replica validate a block by
// re-execution instead of trusting the miner.
struct Block {
  uint64_t height = 0;
  Digest prevHash;
  std::vector<Transaction> txList;
  Digest stateRoot;
  uint64_t nonce = 0;
  Address minerAddress;
  int64_t timestamp = 0;

  Bytes canonical() const;
};

// Digest over the canonical serialization of every field.
Digest blockHash(const Block& b);

struct ChainConfig {
  uint32_t difficultyBits = 8;  // leading zero bits required of blockHash
  uint64_t nonceBudget = uint64_t{1} << 22;
  bool allowEmptyBlocks = false;
};

struct BlockValidation {
  bool ok = false;
  std::string failedCheck;  // empty when ok
};

// One replicated node: local chain, world state and mempool, all advanced
// exclusively through validated blocks. Single-threaded state machine;
// drive each instance from one thread and share only immutable Blocks and
// Transactions between nodes. Event subscribers may consume from other
// threads.
class Node {
 public:
  Node(World genesisWorld, ChainConfig config);

  const ChainConfig& config() const { return config_; }
  const std::vector<Block>& chain() const { return chain_; }
  const Block& tip() const { return chain_.back(); }
  uint64_t height() const { return chain_.back().height; }
  const World& world() const { return world_; }
  const std::vector<Transaction>& mempool() const { return mempool_; }

  // Queues a transaction. Rejects ill-formed ids, unregistered or contract
  // senders, and duplicates of anything pending or already on chain.
  void submit(const Transaction& tx);

  // Proof-of-work mining over the current mempool; does not mutate the
  // node. Throws ChainError("empty-mempool") when there is nothing to mine
  // and empty blocks are disabled, and ChainError("nonce-budget") when no
  // nonce within the budget satisfies the difficulty.
  Block mineBlock(const Address& miner, int64_t timestamp) const;

  bool validateBlock(const Block& b) const;
  BlockValidation validateBlockDetailed(const Block& b) const;

  // Appends a validated block: advances the world, drops included
  // transactions from the mempool and publishes the block's events.
  // Throws ChainError carrying the failed check on an invalid block.
  const std::vector<Receipt>& acceptBlock(const Block& b);

  // Events from accepted blocks, filtered, live from subscription time.
  std::shared_ptr<EventStream> subscribeEvents(EventFilter filter);

  // Receipts per accepted block; index 0 is the genesis (empty).
  const std::vector<std::vector<Receipt>>& receiptLog() const { return receipts_; }

  struct TxLocation {
    uint64_t blockHeight = 0;
    size_t indexInBlock = 0;
  };
  const Transaction* findTransaction(const Digest& txId,
                                     TxLocation* where = nullptr) const;

  // Thread-safe lookup for event consumers on other threads; returns a
  // copy of the included transaction.
  std::optional<Transaction> findTransactionCopy(const Digest& txId) const;

 private:
  std::vector<Receipt> executeOn(World& w, const std::vector<Transaction>& txs,
                                 uint64_t height, int64_t timestamp) const;

  ChainConfig config_;
  World world_;
  std::vector<Block> chain_;
  std::vector<Transaction> mempool_;
  std::vector<std::vector<Receipt>> receipts_;
  std::unordered_map<Digest, TxLocation, DigestHash> txIndex_;
  mutable std::mutex txCopyMu_;
  std::unordered_map<Digest, Transaction, DigestHash> txCopies_;
  EventHub hub_;
};

}  // namespace chainacl

#endif  // CHAINACL_CHAIN_HPP
