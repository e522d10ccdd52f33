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

#ifndef CHAINACL_CONTRACTS_RC_HPP
#define CHAINACL_CONTRACTS_RC_HPP

#include <map>
#include <string>
#include <vector>

#include "chainacl/contract.hpp"

namespace chainacl {

// One lookup-table row binding a method name to the contract serving it.
// Subject/object stay blank (zero address) only for the judge entry.
struct MethodEntry {
  std::string methodName;
  Address subject;
  Address object;
  std::string scName;
  Address creator;
  Address scAddress;
  std::vector<std::string> abiList;
};

// Register Contract: method-name lookup table with creator-gated
// register/update/delete and open reads.
//
// ABIs: methodRegister, methodUpdate, methodDelete, getContract.
// methodUpdate replaces only the contract-related fields (scName,
// scAddress, abiList); methodName, subject, object and creator are
// immutable once registered.
class RegisterContract : public Contract {
 public:
  static constexpr const char* kKind = "RC";

  RegisterContract(const Address& self, const Address& creator,
                   const ValueList& initArgs);

  std::string kindName() const override { return kKind; }
  std::unique_ptr<Contract> clone() const override;
  void encodeState(ByteWriter& w) const override;
  ValueList invoke(CallContext& ctx, const std::string& abiName,
                   const ValueList& args) override;

  const MethodEntry* entry(const std::string& methodName) const;
  const std::map<std::string, MethodEntry>& table() const { return table_; }

  static void registerWith(World& world);

 private:
  ValueList abiMethodRegister(CallContext& ctx, const ValueList& args);
  ValueList abiMethodUpdate(CallContext& ctx, const ValueList& args);
  ValueList abiMethodDelete(CallContext& ctx, const ValueList& args);
  ValueList abiGetContract(const ValueList& args) const;

  Address self_;
  Address creator_;
  std::map<std::string, MethodEntry> table_;
};

}  // namespace chainacl

#endif  // CHAINACL_CONTRACTS_RC_HPP
