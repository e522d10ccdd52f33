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

#ifndef CHAINACL_WORLD_HPP
#define CHAINACL_WORLD_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chainacl/contract.hpp"
#include "chainacl/digest.hpp"
#include "chainacl/tx.hpp"

namespace chainacl {

// Deterministic execution layer: externally controlled accounts, deployed
// contracts and the transaction/message/read-only call semantics. A world
// is a value: copying it snapshots every contract, which is how per-
// transaction atomicity and read-only calls are implemented.
//
// Replay determinism is the core contract here: the digest (and therefore
// every state root in the chain) is a pure function of the construction
// seed and the sequence of account creations and executed transactions.
class World {
 public:
  explicit World(uint64_t seed);
  World(const World& other);
  World& operator=(const World& other);
  World(World&&) = default;
  World& operator=(World&&) = default;

  // --- accounts -----------------------------------------------------------

  // Registers a fresh externally controlled account. The address is derived
  // from (seed, creation counter), so two worlds built the same way agree.
  Address createAccount();
  bool isAccount(const Address& a) const { return accounts_.count(a) != 0; }

  // --- contracts ----------------------------------------------------------

  // Immediate deployment primitive; the chain path reaches this through a
  // deployment transaction. The address is derived from (creator, number of
  // contracts this creator has deployed).
  Address deployContract(const Address& creator, const std::string& kind,
                         const ValueList& initArgs);
  // Address the next deployment by `creator` will get, `offset` deployments
  // from now. Lets a harness know an address before the block is mined.
  Address peekContractAddress(const Address& creator, uint64_t offset = 0) const;

  bool contractExists(const Address& a) const { return contracts_.count(a) != 0; }
  bool contractAlive(const Address& a) const;
  // Kind tag of an alive contract; nullopt when absent or destroyed.
  std::optional<std::string> aliveKind(const Address& a) const;
  const Address* contractCreator(const Address& a) const;

  // Typed inspection for tests and monitors; nullptr when the contract is
  // absent, dead, or of another type.
  template <typename T>
  const T* contractAs(const Address& a) const {
    auto it = contracts_.find(a);
    if (it == contracts_.end() || !it->second.alive) return nullptr;
    return dynamic_cast<const T*>(it->second.instance.get());
  }

  // Direct selfdestruct op (ABI paths call CallContext::destroySelf).
  // Only the recorded creator may destroy a contract.
  void selfdestruct(const Address& contract, const Address& caller);

  // Contract kinds are dispatched through a registry so a harness can add
  // synthetic kinds; ACC/JC/RC are pre-registered.
  void registerKind(const std::string& kind, ContractFactory factory);

  // --- execution ----------------------------------------------------------

  // Applies one transaction atomically: on any ABI error the world is
  // restored and the receipt carries the error instead. Never throws for
  // ABI-level failures.
  Receipt execTransaction(const Transaction& tx, uint64_t blockHeight,
                          int64_t blockTime);

  // EVM-style call: runs against a scratch copy, so any mutations the ABI
  // attempts are discarded and the digest provably cannot change.
  ValueList callReadOnly(const Address& caller, const Address& target,
                         const std::string& abiName, const ValueList& args) const;

  // --- digest -------------------------------------------------------------

  // Canonical digest over (seed, counters, accounts, contracts), sorted by
  // address. Equality of digests is the replication check.
  Digest digest() const;

  uint64_t seed() const { return seed_; }
  uint64_t accountCount() const { return accountCounter_; }

  // Strict-time mode: contracts that take a caller-supplied time argument
  // use the block timestamp instead. Off by default.
  void setStrictTime(bool on) { strictTime_ = on; }
  bool strictTime() const { return strictTime_; }

 private:
  friend struct CallContext;

  struct AccountRecord {
    uint64_t deployCount = 0;
  };

  struct ContractRecord {
    Address creator;
    std::string kind;
    bool alive = false;
    std::unique_ptr<Contract> instance;
  };

  using ExecFrame = detail::ExecFrame;

  ValueList invokeInternal(ExecFrame& frame, const Address& caller,
                           bool viaMessage, int depth, const Address& target,
                           const std::string& abiName, const ValueList& args);
  void reapDestroyed();
  void copyFrom(const World& other);

  uint64_t seed_ = 0;
  uint64_t accountCounter_ = 0;
  bool strictTime_ = false;
  std::map<Address, AccountRecord> accounts_;
  std::map<Address, ContractRecord> contracts_;
  std::map<std::string, ContractFactory> kinds_;
};

}  // namespace chainacl

#endif  // CHAINACL_WORLD_HPP
