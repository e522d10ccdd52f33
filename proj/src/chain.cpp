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

#include "chainacl/chain.hpp"

#include <algorithm>

namespace chainacl {

Bytes Block::canonical() const {
  ByteWriter w;
  w.str("block");
  w.u64(height);
  w.fixed(prevHash.bytes);
  w.u32(static_cast<uint32_t>(txList.size()));
  for (const Transaction& tx : txList) {
    Bytes body = tx.canonicalFull();
    w.u32(static_cast<uint32_t>(body.size()));
    w.raw(body);
  }
  w.fixed(stateRoot.bytes);
  w.u64(nonce);
  w.fixed(minerAddress.bytes);
  w.i64(timestamp);
  return w.take();
}

Digest blockHash(const Block& b) { return sha256(b.canonical()); }

Node::Node(World genesisWorld, ChainConfig config)
    : config_(config), world_(std::move(genesisWorld)) {
  Block genesis;
  genesis.height = 0;
  genesis.stateRoot = world_.digest();
  genesis.timestamp = 0;
  chain_.push_back(std::move(genesis));
  receipts_.emplace_back();
}

void Node::submit(const Transaction& tx) {
  if (tx.txId != tx.computeId()) {
    throw ChainError("tx-format", "transaction id does not match its fields");
  }
  if (!world_.isAccount(tx.sender)) {
    throw ChainError("tx-format", "sender is not a registered account");
  }
  if (txIndex_.count(tx.txId)) {
    throw ChainError("tx-format", "transaction already included in the chain");
  }
  for (const Transaction& pending : mempool_) {
    if (pending.txId == tx.txId) {
      throw ChainError("tx-format", "transaction already pending");
    }
  }
  mempool_.push_back(tx);
}

std::vector<Receipt> Node::executeOn(World& w, const std::vector<Transaction>& txs,
                                     uint64_t height, int64_t timestamp) const {
  std::vector<Receipt> receipts;
  receipts.reserve(txs.size());
  for (const Transaction& tx : txs) {
    receipts.push_back(w.execTransaction(tx, height, timestamp));
  }
  return receipts;
}

Block Node::mineBlock(const Address& miner, int64_t timestamp) const {
  if (mempool_.empty() && !config_.allowEmptyBlocks) {
    throw ChainError("empty-mempool",
                     "nothing to mine and empty-block mining is disabled");
  }
  Block b;
  b.height = chain_.back().height + 1;
  b.prevHash = blockHash(chain_.back());
  b.txList = mempool_;  // arrival order
  b.minerAddress = miner;
  b.timestamp = timestamp;

  World scratch(world_);
  executeOn(scratch, b.txList, b.height, b.timestamp);
  b.stateRoot = scratch.digest();

  for (uint64_t nonce = 0; nonce < config_.nonceBudget; ++nonce) {
    b.nonce = nonce;
    if (leadingZeroBits(blockHash(b)) >= config_.difficultyBits) {
      return b;
    }
  }
  throw ChainError("nonce-budget",
                   "no nonce within budget satisfies difficulty " +
                       std::to_string(config_.difficultyBits) +
                       " (difficulty too high for this configuration)");
}

BlockValidation Node::validateBlockDetailed(const Block& b) const {
  if (b.height != chain_.back().height + 1) {
    return {false, "height"};
  }
  if (b.prevHash != blockHash(chain_.back())) {
    return {false, "prev-hash"};
  }
  if (leadingZeroBits(blockHash(b)) < config_.difficultyBits) {
    return {false, "pow"};
  }
  for (const Transaction& tx : b.txList) {
    if (tx.txId != tx.computeId()) return {false, "tx-format"};
    if (!world_.isAccount(tx.sender)) return {false, "tx-format"};
    if (world_.contractExists(tx.sender)) return {false, "tx-format"};
  }
  // Validation-by-re-execution: the claimed post-state must reproduce
  // exactly on our own copy of the world.
  World scratch(world_);
  executeOn(scratch, b.txList, b.height, b.timestamp);
  if (scratch.digest() != b.stateRoot) {
    return {false, "state-root"};
  }
  return {true, ""};
}

bool Node::validateBlock(const Block& b) const {
  try {
    return validateBlockDetailed(b).ok;
  } catch (const std::exception&) {
    // Malformed input is a verdict, not an error.
    return false;
  }
}

const std::vector<Receipt>& Node::acceptBlock(const Block& b) {
  BlockValidation v = validateBlockDetailed(b);
  if (!v.ok) {
    throw ChainError(v.failedCheck, "block rejected at height " +
                                        std::to_string(b.height));
  }
  std::vector<Receipt> receipts = executeOn(world_, b.txList, b.height, b.timestamp);
  chain_.push_back(b);
  for (size_t i = 0; i < b.txList.size(); ++i) {
    txIndex_.emplace(b.txList[i].txId, TxLocation{b.height, i});
  }
  {
    // Copies for cross-thread event consumers; published before the events.
    std::lock_guard<std::mutex> lock(txCopyMu_);
    for (const Transaction& tx : b.txList) txCopies_.emplace(tx.txId, tx);
  }
  std::erase_if(mempool_, [&](const Transaction& tx) {
    return txIndex_.count(tx.txId) != 0;
  });
  receipts_.push_back(std::move(receipts));
  for (const Receipt& r : receipts_.back()) {
    for (const Event& e : r.events) hub_.publish(e);
  }
  return receipts_.back();
}

std::shared_ptr<EventStream> Node::subscribeEvents(EventFilter filter) {
  return hub_.subscribe(std::move(filter));
}

const Transaction* Node::findTransaction(const Digest& txId, TxLocation* where) const {
  auto it = txIndex_.find(txId);
  if (it == txIndex_.end()) return nullptr;
  if (where != nullptr) *where = it->second;
  return &chain_[it->second.blockHeight].txList[it->second.indexInBlock];
}

std::optional<Transaction> Node::findTransactionCopy(const Digest& txId) const {
  std::lock_guard<std::mutex> lock(txCopyMu_);
  auto it = txCopies_.find(txId);
  if (it == txCopies_.end()) return std::nullopt;
  return it->second;
}

}  // namespace chainacl
