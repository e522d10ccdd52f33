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

#ifndef CHAINACL_SIM_HPP
#define CHAINACL_SIM_HPP

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "chainacl/chain.hpp"
#include "chainacl/topology.hpp"

namespace chainacl {

struct SimConfig {
  ChainConfig chain;
  uint64_t seed = 1;
  size_t replicas = 3;
  int maxWaitRounds = 8;  // extra mining rounds before a request times out
  bool strictTime = false;
};

struct PolicySpec {
  std::string resource;
  std::string action;
  std::string permission;  // "allow" | "deny"
  int64_t minInterval = 0;
  int64_t threshold = 1;
};

// The visible result of one access request, built from a returnResult
// event plus its originating transaction.
struct AccessOutcome {
  std::string methodName;
  std::string resource;
  std::string action;
  int64_t time = 0;
  bool result = false;
  int64_t penaltySeconds = 0;
  Digest txId;

  bool operator==(const AccessOutcome&) const = default;
};

// Object-side view of one access control method: yields outcomes in chain
// order as their blocks are accepted.
class AccessMonitor {
 public:
  std::vector<AccessOutcome> drain();
  std::optional<AccessOutcome> tryNext();

 private:
  friend class Simulation;
  std::string methodName_;
  const Node* node_ = nullptr;
  std::shared_ptr<EventStream> stream_;
  std::optional<AccessOutcome> fromEvent(const Event& e) const;
};

struct SubmissionAudit {
  std::string submitterId;  // peer whose client sent the transaction
  std::string senderOwnerId;  // peer whose account signed it
  Digest txId;
};

struct RoundResult {
  bool mined = false;
  uint64_t blockHeight = 0;
  std::vector<Receipt> receipts;
};

// Deterministic round-driven IoT network simulation over replicated nodes:
// submit phase, mining phase (one designated miner per round, round-robin
// over mining-capable peers), event-delivery phase. All replicas accept the
// same block, so observable state never diverges.
class Simulation {
 public:
  Simulation(Topology topology, SimConfig config);

  const Topology& topology() const { return topo_; }
  const Peer& peer(const std::string& id) const;
  size_t replicaCount() const { return nodes_.size(); }
  Node& node(size_t i) { return *nodes_[i]; }
  const Node& node(size_t i) const { return *nodes_[i]; }
  int64_t now() const { return now_; }

  // --- primitives ---------------------------------------------------------

  // Builds, audits and broadcasts a transaction to every replica's mempool.
  // The sender is the actor's own account; IoT-device actors are routed
  // through their agent gateway, anything else submits for itself.
  Digest submitFor(const std::string& actorId, std::optional<Address> target,
                   const std::string& abiName, ValueList args);
  // Deployment transaction; returns the address the contract will occupy
  // once the block is accepted.
  Address submitDeployFor(const std::string& actorId, const std::string& kind,
                          ValueList initArgs);

  // One mining round at `time`: designated miner mines the pending
  // transactions, every replica validates and accepts the block. No-op
  // when every mempool is empty.
  RoundResult runRound(int64_t time);

  ValueList readOnly(const std::string& callerId, const Address& target,
                     const std::string& abiName, ValueList args) const;

  using RoundObserver = std::function<void(const RoundResult&)>;
  void setRoundObserver(RoundObserver cb) { roundObserver_ = std::move(cb); }

  // --- framework functions ------------------------------------------------

  // Deploys the judge contract and registers it in the lookup table under
  // `methodName` with blank subject/object columns.
  Address deployJudge(const std::string& creatorId, int64_t base,
                      int64_t interval, int64_t unitSeconds,
                      const std::string& methodName = "JC");

  // Register a new access control method: deploy the ACC, point it at the
  // judge, seed its policies and enter it in the lookup table — one block,
  // ordered. The creator must be the object or its agent gateway.
  std::string registerAccessControlMethod(const std::string& creatorId,
                                          const Address& subject,
                                          const Address& object,
                                          const std::string& methodName,
                                          const std::vector<PolicySpec>& policySeed);

  // Replace the ACC behind a method: deploy the new contract, update the
  // lookup table, selfdestruct the old contract, in that order.
  void updateAccessControlMethod(const std::string& creatorId,
                                 const std::string& methodName,
                                 const std::vector<PolicySpec>& newPolicySeed);

  // Remove the lookup-table entry, then selfdestruct the ACC.
  void deleteAccessControlMethod(const std::string& creatorId,
                                 const std::string& methodName);

  void addPolicyThroughCreator(const std::string& creatorId,
                               const std::string& methodName,
                               const PolicySpec& policy);
  void updatePolicyThroughCreator(const std::string& creatorId,
                                  const std::string& methodName,
                                  const std::string& resource,
                                  const std::string& action,
                                  const std::optional<std::string>& permission,
                                  const std::optional<int64_t>& minInterval,
                                  const std::optional<int64_t>& threshold);
  void deletePolicyThroughCreator(const std::string& creatorId,
                                  const std::string& methodName,
                                  const std::string& resource,
                                  const std::string& action);

  // One access request end to end: resolve the method through the lookup
  // table, send the accessControl transaction, mine, and wait for the
  // returnResult event with the matching transaction id. With
  // `forwardedByObject` the object submits the subject's request instead.
  AccessOutcome requestAccess(const std::string& subjectId,
                              const std::string& methodName,
                              const std::string& resource,
                              const std::string& action, int64_t time,
                              bool forwardedByObject = false);

  AccessMonitor monitorAccess(const std::string& observerId,
                              const std::string& methodName,
                              size_t replicaIndex = 0);

  // --- bookkeeping ---------------------------------------------------------

  const Address& rcAddress() const { return rcAddress_; }
  std::optional<Address> judgeAddress() const { return judgeAddress_; }
  Address resolveMethod(const std::string& methodName,
                        std::vector<std::string>* abiList = nullptr) const;

  const std::vector<SubmissionAudit>& submissionAudit() const { return audit_; }
  // Lookup-table entries whose contract is no longer alive.
  std::vector<std::string> danglingMethods() const;

 private:
  const Peer& submitterFor(const Peer& actor) const;
  const Peer* ownerOf(const Address& account) const;
  Digest broadcast(const Peer& submitter, const Peer& sender, Transaction tx);
  AccessOutcome waitOutcome(const std::string& methodName,
                            std::shared_ptr<EventStream>& stream,
                            const Digest& txId, int64_t time);

  Topology topo_;
  SimConfig cfg_;
  std::vector<std::unique_ptr<Node>> nodes_;
  std::vector<std::string> minerIds_;
  size_t roundCounter_ = 0;
  int64_t now_ = 0;
  Address rcAddress_;
  std::optional<Address> judgeAddress_;
  std::map<Address, uint64_t> nonces_;
  std::map<Address, uint64_t> pendingDeploys_;
  std::vector<SubmissionAudit> audit_;
  RoundObserver roundObserver_;
};

}  // namespace chainacl

#endif  // CHAINACL_SIM_HPP
