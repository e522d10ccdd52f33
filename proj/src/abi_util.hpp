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

// Internal argument-unpacking helpers shared by the contract
// implementations. Wrong arity or type is a bad-args receipt, never a crash.

#ifndef CHAINACL_SRC_ABI_UTIL_HPP
#define CHAINACL_SRC_ABI_UTIL_HPP

#include <string>

#include "chainacl/errors.hpp"
#include "chainacl/value.hpp"

namespace chainacl::abi {

inline void expectArity(const ValueList& args, size_t n, const std::string& abiName) {
  if (args.size() != n) {
    throw ContractError(ErrCode::BadArgs,
                        abiName + " expects " + std::to_string(n) + " argument(s), got " +
                            std::to_string(args.size()));
  }
}

inline void expectMinArity(const ValueList& args, size_t n, const std::string& abiName) {
  if (args.size() < n) {
    throw ContractError(ErrCode::BadArgs,
                        abiName + " expects at least " + std::to_string(n) +
                            " argument(s), got " + std::to_string(args.size()));
  }
}

inline int64_t asInt(const Value& v, const std::string& what) {
  if (!v.isInt()) throw ContractError(ErrCode::BadArgs, what + " must be an integer");
  return v.asInt();
}

inline const std::string& asStr(const Value& v, const std::string& what) {
  if (!v.isStr()) throw ContractError(ErrCode::BadArgs, what + " must be a string");
  return v.asStr();
}

inline const Address& asAddr(const Value& v, const std::string& what) {
  if (!v.isAddr()) throw ContractError(ErrCode::BadArgs, what + " must be an address");
  return v.asAddr();
}

inline bool asBool(const Value& v, const std::string& what) {
  if (!v.isBool()) throw ContractError(ErrCode::BadArgs, what + " must be a boolean");
  return v.asBool();
}

}  // namespace chainacl::abi

#endif  // CHAINACL_SRC_ABI_UTIL_HPP
