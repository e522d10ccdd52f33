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

#ifndef CHAINACL_CONTRACTS_ACC_HPP
#define CHAINACL_CONTRACTS_ACC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chainacl/contract.hpp"

namespace chainacl {

// One policy row, keyed by (resource, action). Static permission plus the
// request-frequency bookkeeping used for dynamic validation.
struct Policy {
  std::string resource;
  std::string action;
  bool allow = false;
  int64_t timeOfLastRequest = 0;  // ToLR; 0 until the first request
  int64_t minInterval = 0;        // seconds; requests closer than this are "frequent"
  int64_t frequentRequests = 0;   // NoFR; runs back to 0 on any non-frequent request
  int64_t threshold = 1;          // NoFR >= threshold detects a misbehavior
};

struct MisbehaviorEntry {
  std::string misbehavior;
  int64_t time = 0;
  int64_t penaltySeconds = 0;
};

// Per-resource blocking window and append-only misbehavior ledger.
struct ResourceState {
  int64_t timeOfUnblock = 0;  // 0 while unblocked
  std::vector<MisbehaviorEntry> misbehaviors;
};

// Access Control Contract: static (policy) plus dynamic (behavior)
// validation of access requests for exactly one subject-object pair.
//
// ABIs: policyAdd, policyUpdate, policyDelete, accessControl, setJC,
// deleteACC, getPolicy. Event: returnResult(result, penalty).
//
// All mutating ABIs except accessControl are creator-only. accessControl
// accepts the subject directly or the object forwarding the subject's
// request; both run the same decision procedure.
class AccessControlContract : public Contract {
 public:
  static constexpr const char* kKind = "ACC";

  // initArgs: [subject address, object address]
  AccessControlContract(const Address& self, const Address& creator,
                        const ValueList& initArgs);

  std::string kindName() const override { return kKind; }
  std::unique_ptr<Contract> clone() const override;
  void encodeState(ByteWriter& w) const override;
  ValueList invoke(CallContext& ctx, const std::string& abiName,
                   const ValueList& args) override;

  // Typed read access for tests and monitors (no ABI round-trip).
  const Address& subject() const { return subject_; }
  const Address& object() const { return object_; }
  const Address& judgeAddress() const { return judge_; }
  bool judgeSet() const { return judgeSet_; }
  const Policy* policy(const std::string& resource, const std::string& action) const;
  const ResourceState* resourceState(const std::string& resource) const;

  static void registerWith(World& world);

 private:
  ValueList abiPolicyAdd(CallContext& ctx, const ValueList& args);
  ValueList abiPolicyUpdate(CallContext& ctx, const ValueList& args);
  ValueList abiPolicyDelete(CallContext& ctx, const ValueList& args);
  ValueList abiSetJc(CallContext& ctx, const ValueList& args);
  ValueList abiAccessControl(CallContext& ctx, const ValueList& args);
  ValueList abiGetPolicy(CallContext& ctx, const ValueList& args);
  void requireCreator(const CallContext& ctx) const;

  Address self_;
  Address creator_;
  Address subject_;
  Address object_;
  Address judge_;
  bool judgeSet_ = false;
  std::map<std::pair<std::string, std::string>, Policy> policies_;
  std::map<std::string, ResourceState> resources_;
};

}  // namespace chainacl

#endif  // CHAINACL_CONTRACTS_ACC_HPP
