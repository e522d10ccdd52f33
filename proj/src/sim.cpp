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

#include "chainacl/sim.hpp"

#include <algorithm>

#include "chainacl/contracts/acc.hpp"
#include "chainacl/contracts/jc.hpp"
#include "chainacl/contracts/rc.hpp"
#include "chainacl/errors.hpp"

namespace chainacl {

namespace {

const std::vector<std::string> kAccAbis = {
    "accessControl", "policyAdd",  "policyUpdate", "policyDelete",
    "setJC",         "deleteACC",  "getPolicy"};

ValueList policyAddArgs(const PolicySpec& p) {
  return {Value(p.resource), Value(p.action), Value(p.permission),
          Value(p.minInterval), Value(p.threshold)};
}

}  // namespace

Simulation::Simulation(Topology topology, SimConfig config)
    : topo_(std::move(topology)), cfg_(config) {
  topo_.validate();
  if (cfg_.replicas < 1) throw ScenarioError("need at least one replica node");

  World genesis(cfg_.seed);
  genesis.setStrictTime(cfg_.strictTime);
  for (Peer& p : topo_.peers) {
    p.account = genesis.createAccount();
    if (p.role != PeerRole::IotDevice) minerIds_.push_back(p.id);
  }
  if (minerIds_.empty()) {
    throw ScenarioError("topology has no mining-capable peer");
  }

  nodes_.reserve(cfg_.replicas);
  for (size_t i = 0; i < cfg_.replicas; ++i) {
    nodes_.push_back(std::make_unique<Node>(genesis, cfg_.chain));
  }

  // The register contract is the one piece of shared infrastructure;
  // bootstrap it through an ordinary deployment transaction so even it is
  // on chain. The first mining-capable peer deploys it at time 0.
  rcAddress_ = submitDeployFor(minerIds_.front(), RegisterContract::kKind, {});
  runRound(0);
  if (!node(0).world().contractAlive(rcAddress_)) {
    throw ScenarioError("register contract bootstrap failed");
  }
}

const Peer& Simulation::peer(const std::string& id) const {
  const Peer* p = topo_.find(id);
  if (p == nullptr) throw ScenarioError("no peer '" + id + "'");
  return *p;
}

const Peer& Simulation::submitterFor(const Peer& actor) const {
  if (actor.role != PeerRole::IotDevice) return actor;
  return peer(actor.agentId);
}

const Peer* Simulation::ownerOf(const Address& account) const {
  for (const Peer& p : topo_.peers) {
    if (p.account == account) return &p;
  }
  return nullptr;
}

Digest Simulation::broadcast(const Peer& submitter, const Peer& sender,
                             Transaction tx) {
  // Agency gate: an IoT device's account may only be used by its agent
  // gateway; everyone else signs for themselves.
  if (sender.id != submitter.id) {
    if (sender.role != PeerRole::IotDevice || sender.agentId != submitter.id) {
      throw ScenarioError("peer '" + submitter.id +
                          "' may not submit for account of '" + sender.id + "'");
    }
  } else if (sender.role == PeerRole::IotDevice) {
    throw ScenarioError("iotDevice '" + sender.id +
                        "' cannot submit transactions directly");
  }
  for (auto& node : nodes_) node->submit(tx);
  audit_.push_back(SubmissionAudit{submitter.id, sender.id, tx.txId});
  return tx.txId;
}

Digest Simulation::submitFor(const std::string& actorId,
                             std::optional<Address> target,
                             const std::string& abiName, ValueList args) {
  const Peer& actor = peer(actorId);
  const Peer& submitter = submitterFor(actor);
  Transaction tx = Transaction::make(actor.account, target, abiName,
                                     std::move(args), now_,
                                     nonces_[actor.account]++);
  return broadcast(submitter, actor, std::move(tx));
}

Address Simulation::submitDeployFor(const std::string& actorId,
                                    const std::string& kind, ValueList initArgs) {
  const Peer& actor = peer(actorId);
  const Peer& submitter = submitterFor(actor);
  Address predicted = node(0).world().peekContractAddress(
      actor.account, pendingDeploys_[actor.account]);
  Transaction tx = Transaction::make(actor.account, std::nullopt, kind,
                                     std::move(initArgs), now_,
                                     nonces_[actor.account]++);
  broadcast(submitter, actor, std::move(tx));
  pendingDeploys_[actor.account] += 1;
  return predicted;
}

RoundResult Simulation::runRound(int64_t time) {
  now_ = std::max(now_, time);
  RoundResult result;
  if (node(0).mempool().empty()) {
    pendingDeploys_.clear();
    return result;
  }
  const Peer& miner = peer(minerIds_[roundCounter_ % minerIds_.size()]);
  ++roundCounter_;
  Block block = node(0).mineBlock(miner.account, now_);
  for (auto& n : nodes_) n->acceptBlock(block);
  pendingDeploys_.clear();
  result.mined = true;
  result.blockHeight = block.height;
  result.receipts = node(0).receiptLog().back();
  if (roundObserver_) roundObserver_(result);
  return result;
}

ValueList Simulation::readOnly(const std::string& callerId, const Address& target,
                               const std::string& abiName, ValueList args) const {
  const Peer& caller = peer(callerId);
  return node(0).world().callReadOnly(caller.account, target, abiName, args);
}

Address Simulation::resolveMethod(const std::string& methodName,
                                  std::vector<std::string>* abiList) const {
  const auto* rc = node(0).world().contractAs<RegisterContract>(rcAddress_);
  if (rc == nullptr) throw ScenarioError("register contract unavailable");
  const MethodEntry* e = rc->entry(methodName);
  if (e == nullptr) {
    throw ContractError(ErrCode::NoSuchMethod, "no method '" + methodName + "'");
  }
  if (abiList != nullptr) *abiList = e->abiList;
  return e->scAddress;
}

Address Simulation::deployJudge(const std::string& creatorId, int64_t base,
                                int64_t interval, int64_t unitSeconds,
                                const std::string& methodName) {
  const Peer& creator = peer(creatorId);
  Address addr = submitDeployFor(
      creatorId, JudgeContract::kKind,
      {Value(base), Value(interval), Value(unitSeconds)});
  submitFor(creatorId, rcAddress_, "methodRegister",
            {Value(methodName), Value(Address{}), Value(Address{}),
             Value(std::string("Judge")), Value(creator.account), Value(addr),
             Value(std::string("misbehaviorJudge"))});
  RoundResult round = runRound(now_);
  for (const Receipt& r : round.receipts) {
    if (!r.ok) {
      throw ScenarioError(std::string("deployJudge failed: ") + errName(r.code) +
                          " (" + r.errorDetail + ")");
    }
  }
  judgeAddress_ = addr;
  return addr;
}

std::string Simulation::registerAccessControlMethod(
    const std::string& creatorId, const Address& subject, const Address& object,
    const std::string& methodName, const std::vector<PolicySpec>& policySeed) {
  const Peer& creator = peer(creatorId);
  // The paper's flows put registration in the object's hands: the creator
  // must be the object itself or the gateway fronting it.
  const Peer* objectPeer = ownerOf(object);
  if (objectPeer == nullptr) {
    throw ScenarioError("object address does not belong to any peer");
  }
  bool creatorIsObject = objectPeer->id == creator.id;
  bool creatorIsAgent = objectPeer->role == PeerRole::IotDevice &&
                        objectPeer->agentId == creator.id;
  if (!creatorIsObject && !creatorIsAgent) {
    throw ScenarioError("creator '" + creator.id +
                        "' is neither the object nor its agent gateway");
  }
  if (!judgeAddress_) {
    throw ScenarioError("no judge contract deployed yet");
  }
  // The ACC is created under the object's account even when the gateway
  // submits, matching the lookup-table convention.
  const std::string accOwnerId = objectPeer->id;

  int step = 0;
  try {
    step = 1;  // deploy the ACC
    Address acc = submitDeployFor(accOwnerId, AccessControlContract::kKind,
                                  {Value(subject), Value(object)});
    step = 2;  // point it at the judge
    submitFor(accOwnerId, acc, "setJC", {Value(*judgeAddress_)});
    step = 3;  // seed policies
    for (const PolicySpec& p : policySeed) {
      submitFor(accOwnerId, acc, "policyAdd", policyAddArgs(p));
    }
    step = 4;  // enter it in the lookup table
    ValueList regArgs = {Value(methodName),        Value(subject),
                         Value(object),            Value("ACC:" + methodName),
                         Value(objectPeer->account), Value(acc)};
    for (const std::string& abiName : kAccAbis) regArgs.emplace_back(abiName);
    submitFor(accOwnerId, rcAddress_, "methodRegister", regArgs);

    step = 5;  // mine it all into one block, in submission order
    RoundResult round = runRound(now_);
    for (const Receipt& r : round.receipts) {
      if (!r.ok) {
        throw ScenarioError(std::string("receipt error: ") + errName(r.code) +
                            " (" + r.errorDetail + ")");
      }
    }
  } catch (const std::exception& e) {
    throw ScenarioError("registerAccessControlMethod step " +
                        std::to_string(step) + " failed: " + e.what());
  }
  return methodName;
}

void Simulation::updateAccessControlMethod(
    const std::string& creatorId, const std::string& methodName,
    const std::vector<PolicySpec>& newPolicySeed) {
  const Peer& creator = peer(creatorId);
  const auto* rc = node(0).world().contractAs<RegisterContract>(rcAddress_);
  if (rc == nullptr) throw ScenarioError("register contract unavailable");
  const MethodEntry* entry = rc->entry(methodName);
  if (entry == nullptr) {
    throw ScenarioError("no method '" + methodName + "' to update");
  }
  const Peer* ownerPeer = ownerOf(entry->creator);
  if (ownerPeer == nullptr) throw ScenarioError("method creator unknown");
  bool allowed = ownerPeer->id == creator.id ||
                 (ownerPeer->role == PeerRole::IotDevice &&
                  ownerPeer->agentId == creator.id);
  if (!allowed) {
    throw ScenarioError("creator '" + creator.id + "' does not own method '" +
                        methodName + "'");
  }
  if (!judgeAddress_) throw ScenarioError("no judge contract deployed yet");

  Address oldAcc = entry->scAddress;
  Address subject = entry->subject;
  Address object = entry->object;

  int step = 0;
  try {
    step = 1;  // deploy the replacement ACC (fresh state, policies reseeded)
    Address acc = submitDeployFor(ownerPeer->id, AccessControlContract::kKind,
                                  {Value(subject), Value(object)});
    submitFor(ownerPeer->id, acc, "setJC", {Value(*judgeAddress_)});
    for (const PolicySpec& p : newPolicySeed) {
      submitFor(ownerPeer->id, acc, "policyAdd", policyAddArgs(p));
    }
    step = 2;  // swap the lookup-table entry
    ValueList updArgs = {Value(methodName), Value("ACC:" + methodName), Value(acc)};
    for (const std::string& abiName : kAccAbis) updArgs.emplace_back(abiName);
    submitFor(ownerPeer->id, rcAddress_, "methodUpdate", updArgs);
    step = 3;  // destroy the old contract
    submitFor(ownerPeer->id, oldAcc, "deleteACC", {});

    step = 4;
    RoundResult round = runRound(now_);
    for (const Receipt& r : round.receipts) {
      if (!r.ok) {
        throw ScenarioError(std::string("receipt error: ") + errName(r.code) +
                            " (" + r.errorDetail + ")");
      }
    }
  } catch (const std::exception& e) {
    throw ScenarioError("updateAccessControlMethod step " +
                        std::to_string(step) + " failed: " + e.what());
  }
}

void Simulation::deleteAccessControlMethod(const std::string& creatorId,
                                           const std::string& methodName) {
  const Peer& creator = peer(creatorId);
  const auto* rc = node(0).world().contractAs<RegisterContract>(rcAddress_);
  if (rc == nullptr) throw ScenarioError("register contract unavailable");
  const MethodEntry* entry = rc->entry(methodName);
  if (entry == nullptr) {
    throw ScenarioError("no method '" + methodName + "' to delete");
  }
  const Peer* ownerPeer = ownerOf(entry->creator);
  if (ownerPeer == nullptr) throw ScenarioError("method creator unknown");
  bool allowed = ownerPeer->id == creator.id ||
                 (ownerPeer->role == PeerRole::IotDevice &&
                  ownerPeer->agentId == creator.id);
  if (!allowed) {
    throw ScenarioError("creator '" + creator.id + "' does not own method '" +
                        methodName + "'");
  }
  Address acc = entry->scAddress;

  int step = 0;
  try {
    step = 1;  // drop the lookup-table entry first, then the contract
    submitFor(ownerPeer->id, rcAddress_, "methodDelete", {Value(methodName)});
    step = 2;
    submitFor(ownerPeer->id, acc, "deleteACC", {});
    step = 3;
    RoundResult round = runRound(now_);
    for (const Receipt& r : round.receipts) {
      if (!r.ok) {
        throw ScenarioError(std::string("receipt error: ") + errName(r.code) +
                            " (" + r.errorDetail + ")");
      }
    }
  } catch (const std::exception& e) {
    throw ScenarioError("deleteAccessControlMethod step " +
                        std::to_string(step) + " failed: " + e.what());
  }
}

void Simulation::addPolicyThroughCreator(const std::string& creatorId,
                                         const std::string& methodName,
                                         const PolicySpec& policy) {
  Address acc = resolveMethod(methodName);
  submitFor(creatorId, acc, "policyAdd", policyAddArgs(policy));
  runRound(now_);
}

void Simulation::updatePolicyThroughCreator(
    const std::string& creatorId, const std::string& methodName,
    const std::string& resource, const std::string& action,
    const std::optional<std::string>& permission,
    const std::optional<int64_t>& minInterval,
    const std::optional<int64_t>& threshold) {
  Address acc = resolveMethod(methodName);
  submitFor(creatorId, acc, "policyUpdate",
            {Value(resource), Value(action),
             Value(permission.value_or(std::string())),
             Value(minInterval.value_or(-1)), Value(threshold.value_or(-1))});
  runRound(now_);
}

void Simulation::deletePolicyThroughCreator(const std::string& creatorId,
                                            const std::string& methodName,
                                            const std::string& resource,
                                            const std::string& action) {
  Address acc = resolveMethod(methodName);
  submitFor(creatorId, acc, "policyDelete", {Value(resource), Value(action)});
  runRound(now_);
}

AccessOutcome Simulation::waitOutcome(const std::string& methodName,
                                      std::shared_ptr<EventStream>& stream,
                                      const Digest& txId, int64_t time) {
  for (int round = 0; round <= cfg_.maxWaitRounds; ++round) {
    while (auto e = stream->tryNext()) {
      if (e->txId != txId) continue;  // someone else's request
      AccessOutcome out;
      out.methodName = methodName;
      const Transaction* tx = node(0).findTransaction(txId);
      if (tx != nullptr && tx->args.size() == 3) {
        out.resource = tx->args[0].asStr();
        out.action = tx->args[1].asStr();
        out.time = tx->args[2].asInt();
      }
      out.result = e->payload.at(0).asBool();
      out.penaltySeconds = e->payload.at(1).asInt();
      out.txId = txId;
      return out;
    }
    if (round < cfg_.maxWaitRounds) runRound(now_);
  }
  throw ScenarioError("pending-timeout: no returnResult for request at time " +
                      std::to_string(time));
}

AccessOutcome Simulation::requestAccess(const std::string& subjectId,
                                        const std::string& methodName,
                                        const std::string& resource,
                                        const std::string& action, int64_t time,
                                        bool forwardedByObject) {
  // Steps 1-2: resolve the method through the lookup table.
  ValueList resolved = readOnly(subjectId, rcAddress_, "getContract",
                                {Value(methodName)});
  Address acc = resolved.at(0).asAddr();

  // The receipt event is matched by transaction id, so parallel requests
  // cannot cross-talk.
  auto stream = node(0).subscribeEvents(
      EventFilter{acc, std::string("returnResult")});

  const auto* accView = node(0).world().contractAs<AccessControlContract>(acc);
  std::string callerId = subjectId;
  if (forwardedByObject) {
    if (accView == nullptr) throw ScenarioError("method contract unavailable");
    const Peer* objectPeer = ownerOf(accView->object());
    if (objectPeer == nullptr) throw ScenarioError("object peer unknown");
    callerId = objectPeer->id;
  }

  // Step 3: the access request transaction.
  Digest txId = submitFor(callerId, acc, "accessControl",
                          {Value(resource), Value(action), Value(time)});
  runRound(std::max(now_, time));

  // Steps 4-6 happen inside the contract; wait for the result event.
  AccessOutcome out = waitOutcome(methodName, stream, txId, time);
  out.resource = resource;
  out.action = action;
  out.time = time;
  return out;
}

AccessMonitor Simulation::monitorAccess(const std::string& observerId,
                                        const std::string& methodName,
                                        size_t replicaIndex) {
  peer(observerId);  // must exist
  if (replicaIndex >= nodes_.size()) {
    throw ScenarioError("replica index out of range");
  }
  Address acc = resolveMethod(methodName);
  AccessMonitor mon;
  mon.methodName_ = methodName;
  mon.node_ = nodes_[replicaIndex].get();
  mon.stream_ = nodes_[replicaIndex]->subscribeEvents(
      EventFilter{acc, std::string("returnResult")});
  return mon;
}

std::vector<std::string> Simulation::danglingMethods() const {
  std::vector<std::string> out;
  const auto* rc = node(0).world().contractAs<RegisterContract>(rcAddress_);
  if (rc == nullptr) return out;
  for (const auto& [name, entry] : rc->table()) {
    if (!node(0).world().contractAlive(entry.scAddress)) out.push_back(name);
  }
  return out;
}

// --- AccessMonitor ----------------------------------------------------------

std::optional<AccessOutcome> AccessMonitor::fromEvent(const Event& e) const {
  AccessOutcome out;
  out.methodName = methodName_;
  std::optional<Transaction> tx = node_->findTransactionCopy(e.txId);
  if (!tx || tx->args.size() != 3) return std::nullopt;
  out.resource = tx->args[0].asStr();
  out.action = tx->args[1].asStr();
  out.time = tx->args[2].asInt();
  out.result = e.payload.at(0).asBool();
  out.penaltySeconds = e.payload.at(1).asInt();
  out.txId = e.txId;
  return out;
}

std::vector<AccessOutcome> AccessMonitor::drain() {
  std::vector<AccessOutcome> out;
  while (auto e = stream_->tryNext()) {
    if (auto o = fromEvent(*e)) out.push_back(std::move(*o));
  }
  return out;
}

std::optional<AccessOutcome> AccessMonitor::tryNext() {
  while (auto e = stream_->tryNext()) {
    if (auto o = fromEvent(*e)) return o;
  }
  return std::nullopt;
}

}  // namespace chainacl
