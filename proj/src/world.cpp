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

#include "chainacl/world.hpp"

#include <cstring>

#include "chainacl/contracts/acc.hpp"
#include "chainacl/contracts/jc.hpp"
#include "chainacl/contracts/rc.hpp"
#include "chainacl/errors.hpp"

namespace chainacl {

namespace {

Address addressFromDigest(const Digest& d) {
  Address a;
  std::memcpy(a.bytes.data(), d.bytes.data(), a.bytes.size());
  return a;
}

Address deriveAccountAddress(uint64_t seed, uint64_t counter) {
  ByteWriter w;
  w.str("account");
  w.u64(seed);
  w.u64(counter);
  return addressFromDigest(sha256(w.bytes()));
}

Address deriveContractAddress(const Address& creator, uint64_t deployCount) {
  ByteWriter w;
  w.str("contract");
  w.fixed(creator.bytes);
  w.u64(deployCount);
  return addressFromDigest(sha256(w.bytes()));
}

}  // namespace

World::World(uint64_t seed) : seed_(seed) {
  AccessControlContract::registerWith(*this);
  JudgeContract::registerWith(*this);
  RegisterContract::registerWith(*this);
}

World::World(const World& other) { copyFrom(other); }

World& World::operator=(const World& other) {
  if (this != &other) copyFrom(other);
  return *this;
}

void World::copyFrom(const World& other) {
  seed_ = other.seed_;
  accountCounter_ = other.accountCounter_;
  strictTime_ = other.strictTime_;
  accounts_ = other.accounts_;
  kinds_ = other.kinds_;
  contracts_.clear();
  for (const auto& [addr, rec] : other.contracts_) {
    ContractRecord copy;
    copy.creator = rec.creator;
    copy.kind = rec.kind;
    copy.alive = rec.alive;
    copy.instance = rec.instance ? rec.instance->clone() : nullptr;
    contracts_.emplace(addr, std::move(copy));
  }
}

Address World::createAccount() {
  Address a = deriveAccountAddress(seed_, accountCounter_);
  ++accountCounter_;
  accounts_.emplace(a, AccountRecord{});
  return a;
}

Address World::peekContractAddress(const Address& creator, uint64_t offset) const {
  auto it = accounts_.find(creator);
  uint64_t count = it == accounts_.end() ? 0 : it->second.deployCount;
  return deriveContractAddress(creator, count + offset);
}

Address World::deployContract(const Address& creator, const std::string& kind,
                              const ValueList& initArgs) {
  auto acct = accounts_.find(creator);
  if (acct == accounts_.end()) {
    throw ContractError(ErrCode::UnknownAccount,
                        "deployment creator is not a registered account");
  }
  auto factory = kinds_.find(kind);
  if (factory == kinds_.end()) {
    throw ContractError(ErrCode::UnknownKind, "no contract kind '" + kind + "'");
  }
  Address addr = deriveContractAddress(creator, acct->second.deployCount);
  ContractRecord rec;
  rec.creator = creator;
  rec.kind = kind;
  rec.instance = factory->second(addr, creator, initArgs);
  rec.alive = true;
  // The deploy counter advances only after the factory validated initArgs,
  // so a failed deployment does not burn an address.
  acct->second.deployCount += 1;
  contracts_.emplace(addr, std::move(rec));
  return addr;
}

bool World::contractAlive(const Address& a) const {
  auto it = contracts_.find(a);
  return it != contracts_.end() && it->second.alive;
}

std::optional<std::string> World::aliveKind(const Address& a) const {
  auto it = contracts_.find(a);
  if (it == contracts_.end() || !it->second.alive) return std::nullopt;
  return it->second.kind;
}

const Address* World::contractCreator(const Address& a) const {
  auto it = contracts_.find(a);
  if (it == contracts_.end()) return nullptr;
  return &it->second.creator;
}

void World::selfdestruct(const Address& contract, const Address& caller) {
  auto it = contracts_.find(contract);
  if (it == contracts_.end() || !it->second.alive) {
    throw ContractError(ErrCode::ContractDestroyed, "contract not alive");
  }
  if (caller != it->second.creator) {
    throw ContractError(ErrCode::PermissionDenied,
                        "only the creator may destroy a contract");
  }
  it->second.alive = false;
  reapDestroyed();
}

void World::registerKind(const std::string& kind, ContractFactory factory) {
  kinds_[kind] = std::move(factory);
}

void World::reapDestroyed() {
  // Dead records stay (no address reuse) but their state is erased.
  for (auto& [addr, rec] : contracts_) {
    if (!rec.alive) rec.instance.reset();
  }
}

ValueList World::invokeInternal(ExecFrame& frame, const Address& caller,
                                bool viaMessage, int depth, const Address& target,
                                const std::string& abiName,
                                const ValueList& args) {
  if (depth > kMaxMessageDepth) {
    throw ContractError(ErrCode::DepthLimit, "message depth limit exceeded");
  }
  auto it = contracts_.find(target);
  if (it == contracts_.end()) {
    throw ContractError(ErrCode::NoSuchContract,
                        "no contract at " + target.hex());
  }
  if (!it->second.alive) {
    throw ContractError(ErrCode::ContractDestroyed,
                        "contract " + target.hex() + " was destroyed");
  }
  CallContext ctx{
      .world = *this,
      .self = target,
      .creator = it->second.creator,
      .caller = caller,
      .origin = frame.origin,
      .viaMessage = viaMessage,
      .depth = depth,
      .blockHeight = frame.blockHeight,
      .blockTime = frame.blockTime,
      .txId = frame.txId,
      .readOnly = frame.readOnly,
  };
  ctx.framePtr_ = &frame;
  return it->second.instance->invoke(ctx, abiName, args);
}

Receipt World::execTransaction(const Transaction& tx, uint64_t blockHeight,
                               int64_t blockTime) {
  Receipt receipt;
  receipt.txId = tx.txId;

  ExecFrame frame;
  frame.blockHeight = blockHeight;
  frame.blockTime = blockTime;
  frame.txId = tx.txId;
  frame.origin = tx.sender;

  World snapshot(*this);
  try {
    if (!isAccount(tx.sender)) {
      throw ContractError(ErrCode::UnknownAccount,
                          "transaction sender is not a registered account");
    }
    if (!tx.target) {
      Address addr = deployContract(tx.sender, tx.abiName, tx.args);
      receipt.returnValues = {Value(addr)};
    } else {
      receipt.returnValues = invokeInternal(frame, tx.sender, false, 0,
                                            *tx.target, tx.abiName, tx.args);
    }
    reapDestroyed();
    receipt.ok = true;
    receipt.events = std::move(frame.events);
    for (Event& e : receipt.events) {
      e.blockHeight = blockHeight;
      e.txId = tx.txId;
    }
  } catch (const ContractError& err) {
    *this = std::move(snapshot);
    receipt.ok = false;
    receipt.code = err.code();
    receipt.errorDetail = err.detail();
  }
  return receipt;
}

ValueList World::callReadOnly(const Address& caller, const Address& target,
                              const std::string& abiName,
                              const ValueList& args) const {
  // Runs on a scratch copy: any state the ABI touches dies with the copy.
  World scratch(*this);
  ExecFrame frame;
  frame.origin = caller;
  frame.readOnly = true;
  return scratch.invokeInternal(frame, caller, false, 0, target, abiName, args);
}

Digest World::digest() const {
  ByteWriter w;
  w.str("world");
  w.u64(seed_);
  w.u64(accountCounter_);
  w.u32(static_cast<uint32_t>(accounts_.size()));
  for (const auto& [addr, rec] : accounts_) {
    w.fixed(addr.bytes);
    w.u64(rec.deployCount);
  }
  w.u32(static_cast<uint32_t>(contracts_.size()));
  for (const auto& [addr, rec] : contracts_) {
    w.fixed(addr.bytes);
    w.fixed(rec.creator.bytes);
    w.str(rec.kind);
    w.boolean(rec.alive);
    if (rec.alive) {
      ByteWriter state;
      rec.instance->encodeState(state);
      w.u32(static_cast<uint32_t>(state.bytes().size()));
      w.raw(state.bytes());
    }
  }
  return sha256(w.bytes());
}

// --- CallContext ------------------------------------------------------------

ValueList CallContext::sendMessage(const Address& target,
                                   const std::string& abiName, ValueList args) {
  return world.invokeInternal(*framePtr_, self, true, depth + 1, target,
                              abiName, args);
}

void CallContext::emitEvent(std::string name, ValueList payload) {
  Event e;
  e.emitter = self;
  e.name = std::move(name);
  e.payload = std::move(payload);
  framePtr_->events.push_back(std::move(e));
}

void CallContext::destroySelf() {
  auto it = world.contracts_.find(self);
  if (it != world.contracts_.end()) it->second.alive = false;
  // The instance itself is reaped after the enclosing call returns.
}

}  // namespace chainacl
