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

#include "chainacl/contracts/acc.hpp"

#include "abi_util.hpp"
#include "chainacl/contracts/jc.hpp"
#include "chainacl/world.hpp"

namespace chainacl {

namespace {

bool parsePermission(const std::string& s) {
  if (s == "allow") return true;
  if (s == "deny") return false;
  throw ContractError(ErrCode::BadArgs,
                      "permission must be \"allow\" or \"deny\", got \"" + s + "\"");
}

}  // namespace

AccessControlContract::AccessControlContract(const Address& self,
                                             const Address& creator,
                                             const ValueList& initArgs)
    : self_(self), creator_(creator) {
  abi::expectArity(initArgs, 2, "ACC constructor");
  subject_ = abi::asAddr(initArgs[0], "subject");
  object_ = abi::asAddr(initArgs[1], "object");
}

std::unique_ptr<Contract> AccessControlContract::clone() const {
  return std::make_unique<AccessControlContract>(*this);
}

void AccessControlContract::encodeState(ByteWriter& w) const {
  w.fixed(subject_.bytes);
  w.fixed(object_.bytes);
  w.boolean(judgeSet_);
  if (judgeSet_) w.fixed(judge_.bytes);
  w.u32(static_cast<uint32_t>(policies_.size()));
  for (const auto& [key, p] : policies_) {
    w.str(p.resource);
    w.str(p.action);
    w.boolean(p.allow);
    w.i64(p.timeOfLastRequest);
    w.i64(p.minInterval);
    w.i64(p.frequentRequests);
    w.i64(p.threshold);
  }
  w.u32(static_cast<uint32_t>(resources_.size()));
  for (const auto& [name, rs] : resources_) {
    w.str(name);
    w.i64(rs.timeOfUnblock);
    w.u32(static_cast<uint32_t>(rs.misbehaviors.size()));
    for (const auto& m : rs.misbehaviors) {
      w.str(m.misbehavior);
      w.i64(m.time);
      w.i64(m.penaltySeconds);
    }
  }
}

ValueList AccessControlContract::invoke(CallContext& ctx, const std::string& abiName,
                                        const ValueList& args) {
  if (abiName == "accessControl") return abiAccessControl(ctx, args);
  if (abiName == "policyAdd") return abiPolicyAdd(ctx, args);
  if (abiName == "policyUpdate") return abiPolicyUpdate(ctx, args);
  if (abiName == "policyDelete") return abiPolicyDelete(ctx, args);
  if (abiName == "setJC") return abiSetJc(ctx, args);
  if (abiName == "getPolicy") return abiGetPolicy(ctx, args);
  if (abiName == "deleteACC") {
    requireCreator(ctx);
    ctx.destroySelf();
    return {};
  }
  throw ContractError(ErrCode::NoSuchAbi, "ACC has no ABI '" + abiName + "'");
}

void AccessControlContract::requireCreator(const CallContext& ctx) const {
  if (ctx.caller != creator_) {
    throw ContractError(ErrCode::PermissionDenied,
                        "only the ACC creator may call this ABI");
  }
}

const Policy* AccessControlContract::policy(const std::string& resource,
                                            const std::string& action) const {
  auto it = policies_.find({resource, action});
  return it == policies_.end() ? nullptr : &it->second;
}

const ResourceState* AccessControlContract::resourceState(
    const std::string& resource) const {
  auto it = resources_.find(resource);
  return it == resources_.end() ? nullptr : &it->second;
}

// args: resource, action, permission, minInterval, threshold
ValueList AccessControlContract::abiPolicyAdd(CallContext& ctx, const ValueList& args) {
  requireCreator(ctx);
  abi::expectArity(args, 5, "policyAdd");
  const std::string& resource = abi::asStr(args[0], "resource");
  const std::string& action = abi::asStr(args[1], "action");
  Policy p;
  p.resource = resource;
  p.action = action;
  p.allow = parsePermission(abi::asStr(args[2], "permission"));
  p.minInterval = abi::asInt(args[3], "minInterval");
  p.threshold = abi::asInt(args[4], "threshold");
  if (p.minInterval < 0) {
    throw ContractError(ErrCode::BadArgs, "minInterval must be non-negative");
  }
  if (p.threshold < 1) {
    throw ContractError(ErrCode::BadArgs, "threshold must be positive");
  }
  auto key = std::make_pair(resource, action);
  if (policies_.count(key)) {
    throw ContractError(ErrCode::DuplicatePolicy,
                        "policy (" + resource + ", " + action + ") already exists");
  }
  policies_.emplace(std::move(key), std::move(p));
  // ResourceState survives policy deletion so the misbehavior ledger and a
  // pending block window are never forgotten by re-adding the policy.
  resources_.try_emplace(resource);
  return {};
}

// args: resource, action, permission|"" to keep, minInterval|-1 to keep,
// threshold|-1 to keep. ToLR and NoFR are never touched by an update.
ValueList AccessControlContract::abiPolicyUpdate(CallContext& ctx, const ValueList& args) {
  requireCreator(ctx);
  abi::expectArity(args, 5, "policyUpdate");
  const std::string& resource = abi::asStr(args[0], "resource");
  const std::string& action = abi::asStr(args[1], "action");
  auto it = policies_.find({resource, action});
  if (it == policies_.end()) {
    throw ContractError(ErrCode::NoSuchPolicy,
                        "no policy (" + resource + ", " + action + ")");
  }
  const std::string& permission = abi::asStr(args[2], "permission");
  int64_t minInterval = abi::asInt(args[3], "minInterval");
  int64_t threshold = abi::asInt(args[4], "threshold");
  if (!permission.empty()) it->second.allow = parsePermission(permission);
  if (minInterval >= 0) it->second.minInterval = minInterval;
  if (threshold >= 0) {
    if (threshold < 1) {
      throw ContractError(ErrCode::BadArgs, "threshold must be positive");
    }
    it->second.threshold = threshold;
  }
  return {};
}

ValueList AccessControlContract::abiPolicyDelete(CallContext& ctx, const ValueList& args) {
  requireCreator(ctx);
  abi::expectArity(args, 2, "policyDelete");
  const std::string& resource = abi::asStr(args[0], "resource");
  const std::string& action = abi::asStr(args[1], "action");
  auto it = policies_.find({resource, action});
  if (it == policies_.end()) {
    throw ContractError(ErrCode::NoSuchPolicy,
                        "no policy (" + resource + ", " + action + ")");
  }
  policies_.erase(it);
  return {};
}

ValueList AccessControlContract::abiSetJc(CallContext& ctx, const ValueList& args) {
  requireCreator(ctx);
  abi::expectArity(args, 1, "setJC");
  const Address& addr = abi::asAddr(args[0], "jcAddress");
  auto kind = ctx.world.aliveKind(addr);
  if (!kind || *kind != JudgeContract::kKind) {
    throw ContractError(ErrCode::NotAJc,
                        addr.hex() + " does not host an alive judge contract");
  }
  judge_ = addr;
  judgeSet_ = true;
  return {};
}

// The access decision. Static validation checks the stored permission;
// dynamic validation counts frequent requests (inter-arrival <= minInterval)
// and, at threshold, reports a misbehavior to the judge and blocks the
// resource until time + penalty.
//
// args: resource, action, time. Returns (result, penalty) and emits
// returnResult(result, penalty). Requests while blocked return (false, 0)
// without consulting the judge; ToLR still advances. Unknown policies yield
// (false, 0) with the event, so monitors observe the denial.
ValueList AccessControlContract::abiAccessControl(CallContext& ctx, const ValueList& args) {
  abi::expectArity(args, 3, "accessControl");
  const std::string& resource = abi::asStr(args[0], "resource");
  const std::string& action = abi::asStr(args[1], "action");
  int64_t time = abi::asInt(args[2], "time");
  if (ctx.world.strictTime() && !ctx.readOnly) time = ctx.blockTime;

  // Both the subject's direct call and the object forwarding the subject's
  // request attribute the request to the subject. Anyone else is rejected
  // outright (no event).
  if (ctx.caller != subject_ && ctx.caller != object_) {
    throw ContractError(ErrCode::UnauthorizedCaller,
                        "caller is neither the subject nor the object");
  }
  if (!judgeSet_) {
    throw ContractError(ErrCode::JcUnset, "setJC has not been called");
  }

  bool policyCheck = false;
  bool behaviorCheck = true;
  int64_t penalty = 0;

  auto policyIt = policies_.find({resource, action});
  if (policyIt != policies_.end()) {
    Policy& p = policyIt->second;
    ResourceState& rs = resources_[resource];
    if (rs.timeOfUnblock <= time) {
      if (rs.timeOfUnblock > 0) {
        // Block window expired: clear it together with the frequency state.
        p.frequentRequests = 0;
        p.timeOfLastRequest = 0;
        rs.timeOfUnblock = 0;
      }
      policyCheck = p.allow;
      if (time - p.timeOfLastRequest <= p.minInterval) {
        p.frequentRequests += 1;
        if (p.frequentRequests >= p.threshold) {
          std::string misbehavior = "frequent-request resource=" + resource +
                                    " action=" + action +
                                    " noFR=" + std::to_string(p.frequentRequests);
          behaviorCheck = false;
          ValueList judged = ctx.sendMessage(
              judge_, "misbehaviorJudge",
              {Value(subject_), Value(object_), Value(misbehavior), Value(time)});
          penalty = judged.at(0).asInt();
          rs.timeOfUnblock = time + penalty;
          rs.misbehaviors.push_back({misbehavior, time, penalty});
        }
      } else {
        p.frequentRequests = 0;
      }
    }
    // Outside the block-window guard on purpose: ToLR advances even while
    // blocked.
    p.timeOfLastRequest = time;
  }

  bool result = policyCheck && behaviorCheck;
  ctx.emitEvent("returnResult", {Value(result), Value(penalty)});
  return {Value(result), Value(penalty)};
}

ValueList AccessControlContract::abiGetPolicy(CallContext&, const ValueList& args) {
  abi::expectArity(args, 2, "getPolicy");
  const std::string& resource = abi::asStr(args[0], "resource");
  const std::string& action = abi::asStr(args[1], "action");
  auto it = policies_.find({resource, action});
  if (it == policies_.end()) {
    throw ContractError(ErrCode::NoSuchPolicy,
                        "no policy (" + resource + ", " + action + ")");
  }
  const Policy& p = it->second;
  return {Value(p.resource),           Value(p.action),
          Value(p.allow ? std::string("allow") : std::string("deny")),
          Value(p.timeOfLastRequest),  Value(p.minInterval),
          Value(p.frequentRequests),   Value(p.threshold)};
}

void AccessControlContract::registerWith(World& world) {
  world.registerKind(kKind, [](const Address& self, const Address& creator,
                               const ValueList& initArgs) {
    return std::make_unique<AccessControlContract>(self, creator, initArgs);
  });
}

}  // namespace chainacl
