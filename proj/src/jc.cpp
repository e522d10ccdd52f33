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

#include "chainacl/contracts/jc.hpp"

#include "abi_util.hpp"
#include "chainacl/world.hpp"

namespace chainacl {

JudgeContract::JudgeContract(const Address& self, const Address& creator,
                             const ValueList& initArgs)
    : self_(self), creator_(creator) {
  abi::expectMinArity(initArgs, 2, "JC constructor");
  if (initArgs.size() > 3) {
    throw ContractError(ErrCode::BadArgs, "JC constructor takes 2 or 3 arguments");
  }
  base_ = abi::asInt(initArgs[0], "base");
  interval_ = abi::asInt(initArgs[1], "interval");
  if (initArgs.size() == 3) {
    unitSeconds_ = abi::asInt(initArgs[2], "penaltyUnitSeconds");
  }
  if (base_ < 1) throw ContractError(ErrCode::BadArgs, "base must be >= 1");
  if (interval_ < 1) throw ContractError(ErrCode::BadArgs, "interval must be >= 1");
  if (unitSeconds_ < 1) {
    throw ContractError(ErrCode::BadArgs, "penaltyUnitSeconds must be >= 1");
  }
}

std::unique_ptr<Contract> JudgeContract::clone() const {
  return std::make_unique<JudgeContract>(*this);
}

void JudgeContract::encodeState(ByteWriter& w) const {
  w.i64(base_);
  w.i64(interval_);
  w.i64(unitSeconds_);
  w.u32(static_cast<uint32_t>(records_.size()));
  for (const auto& [subject, list] : records_) {
    w.fixed(subject.bytes);
    w.u32(static_cast<uint32_t>(list.size()));
    for (const auto& r : list) {
      w.fixed(r.object.bytes);
      w.str(r.misbehavior);
      w.i64(r.time);
      w.i64(r.penaltySeconds);
      w.boolean(r.capped);
    }
  }
}

ValueList JudgeContract::invoke(CallContext& ctx, const std::string& abiName,
                                const ValueList& args) {
  if (abiName == "misbehaviorJudge") return abiMisbehaviorJudge(ctx, args);
  if (abiName == "getRecords") return abiGetRecords(args);
  if (abiName == "deleteJC") {
    if (ctx.caller != creator_) {
      throw ContractError(ErrCode::PermissionDenied,
                          "only the JC creator may delete it");
    }
    ctx.destroySelf();
    return {};
  }
  throw ContractError(ErrCode::NoSuchAbi, "JC has no ABI '" + abiName + "'");
}

const std::vector<JudgeRecord>* JudgeContract::recordsFor(const Address& subject) const {
  auto it = records_.find(subject);
  return it == records_.end() ? nullptr : &it->second;
}

// args: subject, object, misbehavior, time. Message-only: a direct
// transaction from an account is rejected, so every record provably comes
// from a contract report. The record is appended first; the count used by
// the penalty formula includes it.
ValueList JudgeContract::abiMisbehaviorJudge(CallContext& ctx, const ValueList& args) {
  if (!ctx.viaMessage) {
    throw ContractError(ErrCode::AccOnly,
                        "misbehaviorJudge accepts only contract messages");
  }
  abi::expectArity(args, 4, "misbehaviorJudge");
  const Address& subject = abi::asAddr(args[0], "subject");
  const Address& object = abi::asAddr(args[1], "object");
  const std::string& misbehavior = abi::asStr(args[2], "misbehavior");
  int64_t time = abi::asInt(args[3], "time");

  auto& history = records_[subject];
  history.push_back(JudgeRecord{object, misbehavior, time, 0, false});
  const int64_t count = static_cast<int64_t>(history.size());

  const int64_t exponent = count / interval_;
  unsigned __int128 units = 1;
  bool capped = false;
  for (int64_t i = 0; i < exponent && !capped; ++i) {
    units *= static_cast<unsigned __int128>(base_);
    if (units > static_cast<unsigned __int128>(kPenaltyCapSeconds)) capped = true;
  }
  unsigned __int128 seconds = units * static_cast<unsigned __int128>(unitSeconds_);
  if (seconds > static_cast<unsigned __int128>(kPenaltyCapSeconds)) capped = true;
  int64_t penalty = capped ? kPenaltyCapSeconds : static_cast<int64_t>(seconds);

  history.back().penaltySeconds = penalty;
  history.back().capped = capped;
  return {Value(penalty)};
}

// args: subject. Returns the records flattened as
// (object, misbehavior, time, penalty) quads; empty for unknown subjects.
ValueList JudgeContract::abiGetRecords(const ValueList& args) const {
  abi::expectArity(args, 1, "getRecords");
  const Address& subject = abi::asAddr(args[0], "subject");
  ValueList out;
  auto it = records_.find(subject);
  if (it == records_.end()) return out;
  out.reserve(it->second.size() * 4);
  for (const auto& r : it->second) {
    out.emplace_back(r.object);
    out.emplace_back(r.misbehavior);
    out.emplace_back(r.time);
    out.emplace_back(r.penaltySeconds);
  }
  return out;
}

void JudgeContract::registerWith(World& world) {
  world.registerKind(kKind, [](const Address& self, const Address& creator,
                               const ValueList& initArgs) {
    return std::make_unique<JudgeContract>(self, creator, initArgs);
  });
}

}  // namespace chainacl
