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

#include "chainacl/contracts/rc.hpp"

#include "abi_util.hpp"
#include "chainacl/world.hpp"

namespace chainacl {

RegisterContract::RegisterContract(const Address& self, const Address& creator,
                                   const ValueList& initArgs)
    : self_(self), creator_(creator) {
  abi::expectArity(initArgs, 0, "RC constructor");
}

std::unique_ptr<Contract> RegisterContract::clone() const {
  return std::make_unique<RegisterContract>(*this);
}

void RegisterContract::encodeState(ByteWriter& w) const {
  w.u32(static_cast<uint32_t>(table_.size()));
  for (const auto& [name, e] : table_) {
    w.str(e.methodName);
    w.fixed(e.subject.bytes);
    w.fixed(e.object.bytes);
    w.str(e.scName);
    w.fixed(e.creator.bytes);
    w.fixed(e.scAddress.bytes);
    w.u32(static_cast<uint32_t>(e.abiList.size()));
    for (const auto& abiName : e.abiList) w.str(abiName);
  }
}

ValueList RegisterContract::invoke(CallContext& ctx, const std::string& abiName,
                                   const ValueList& args) {
  if (abiName == "methodRegister") return abiMethodRegister(ctx, args);
  if (abiName == "methodUpdate") return abiMethodUpdate(ctx, args);
  if (abiName == "methodDelete") return abiMethodDelete(ctx, args);
  if (abiName == "getContract") return abiGetContract(args);
  throw ContractError(ErrCode::NoSuchAbi, "RC has no ABI '" + abiName + "'");
}

const MethodEntry* RegisterContract::entry(const std::string& methodName) const {
  auto it = table_.find(methodName);
  return it == table_.end() ? nullptr : &it->second;
}

// args: methodName, subject, object, scName, creator, scAddress,
// abi name strings... The caller must be the entry's creator and the
// contract address must be alive right now; later liveness is not tracked
// (a stale entry is representable, as the manual update/delete flows leave
// one until methodDelete).
ValueList RegisterContract::abiMethodRegister(CallContext& ctx, const ValueList& args) {
  abi::expectMinArity(args, 6, "methodRegister");
  MethodEntry e;
  e.methodName = abi::asStr(args[0], "methodName");
  e.subject = abi::asAddr(args[1], "subject");
  e.object = abi::asAddr(args[2], "object");
  e.scName = abi::asStr(args[3], "scName");
  e.creator = abi::asAddr(args[4], "creator");
  e.scAddress = abi::asAddr(args[5], "scAddress");
  for (size_t i = 6; i < args.size(); ++i) {
    e.abiList.push_back(abi::asStr(args[i], "abi list entry"));
  }
  if (e.methodName.empty()) {
    throw ContractError(ErrCode::BadArgs, "methodName must not be empty");
  }
  if (ctx.caller != e.creator) {
    throw ContractError(ErrCode::CreatorMismatch,
                        "only the method creator may register it");
  }
  if (table_.count(e.methodName)) {
    throw ContractError(ErrCode::DuplicateName,
                        "method '" + e.methodName + "' already registered");
  }
  if (!ctx.world.contractAlive(e.scAddress)) {
    throw ContractError(ErrCode::DanglingAddress,
                        e.scAddress.hex() + " does not host an alive contract");
  }
  table_.emplace(e.methodName, std::move(e));
  return {};
}

// args: methodName, newScName, newScAddress, new abi name strings...
// Subject, object and creator are immutable.
ValueList RegisterContract::abiMethodUpdate(CallContext& ctx, const ValueList& args) {
  abi::expectMinArity(args, 3, "methodUpdate");
  const std::string& methodName = abi::asStr(args[0], "methodName");
  auto it = table_.find(methodName);
  if (it == table_.end()) {
    throw ContractError(ErrCode::NoSuchMethod, "no method '" + methodName + "'");
  }
  if (ctx.caller != it->second.creator) {
    throw ContractError(ErrCode::PermissionDenied,
                        "only the method creator may update it");
  }
  const std::string& scName = abi::asStr(args[1], "scName");
  const Address& scAddress = abi::asAddr(args[2], "scAddress");
  if (!ctx.world.contractAlive(scAddress)) {
    throw ContractError(ErrCode::DanglingAddress,
                        scAddress.hex() + " does not host an alive contract");
  }
  std::vector<std::string> abiList;
  for (size_t i = 3; i < args.size(); ++i) {
    abiList.push_back(abi::asStr(args[i], "abi list entry"));
  }
  it->second.scName = scName;
  it->second.scAddress = scAddress;
  it->second.abiList = std::move(abiList);
  return {};
}

ValueList RegisterContract::abiMethodDelete(CallContext& ctx, const ValueList& args) {
  abi::expectArity(args, 1, "methodDelete");
  const std::string& methodName = abi::asStr(args[0], "methodName");
  auto it = table_.find(methodName);
  if (it == table_.end()) {
    throw ContractError(ErrCode::NoSuchMethod, "no method '" + methodName + "'");
  }
  if (ctx.caller != it->second.creator) {
    throw ContractError(ErrCode::PermissionDenied,
                        "only the method creator may delete it");
  }
  table_.erase(it);
  return {};
}

// args: methodName. Open read returning [scAddress, abi names...].
ValueList RegisterContract::abiGetContract(const ValueList& args) const {
  abi::expectArity(args, 1, "getContract");
  const std::string& methodName = abi::asStr(args[0], "methodName");
  auto it = table_.find(methodName);
  if (it == table_.end()) {
    throw ContractError(ErrCode::NoSuchMethod, "no method '" + methodName + "'");
  }
  ValueList out;
  out.emplace_back(it->second.scAddress);
  for (const auto& abiName : it->second.abiList) out.emplace_back(abiName);
  return out;
}

void RegisterContract::registerWith(World& world) {
  world.registerKind(kKind, [](const Address& self, const Address& creator,
                               const ValueList& initArgs) {
    return std::make_unique<RegisterContract>(self, creator, initArgs);
  });
}

}  // namespace chainacl
