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

#ifndef CHAINACL_CONTRACTS_JC_HPP
#define CHAINACL_CONTRACTS_JC_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "chainacl/contract.hpp"

namespace chainacl {

struct JudgeRecord {
  Address object;
  std::string misbehavior;
  int64_t time = 0;
  int64_t penaltySeconds = 0;
  bool capped = false;  // set when the overflow cap clipped the penalty
};

// Judge Contract: keeps one append-only misbehavior history per subject
// (global across objects) and prices each report at
//   base^floor(count / interval) * penaltyUnitSeconds,
// where count includes the report being judged. Every report is accepted
// as misbehavior; the judging strategy is a seam, but only this one ships.
class JudgeContract : public Contract {
 public:
  static constexpr const char* kKind = "JC";
  static constexpr int64_t kPenaltyCapSeconds = 2147483647;
  static constexpr int64_t kDefaultUnitSeconds = 60;

  // initArgs: [base, interval] or [base, interval, penaltyUnitSeconds]
  JudgeContract(const Address& self, const Address& creator,
                const ValueList& initArgs);

  std::string kindName() const override { return kKind; }
  std::unique_ptr<Contract> clone() const override;
  void encodeState(ByteWriter& w) const override;
  ValueList invoke(CallContext& ctx, const std::string& abiName,
                   const ValueList& args) override;

  int64_t base() const { return base_; }
  int64_t interval() const { return interval_; }
  int64_t penaltyUnitSeconds() const { return unitSeconds_; }
  const std::vector<JudgeRecord>* recordsFor(const Address& subject) const;

  static void registerWith(World& world);

 private:
  ValueList abiMisbehaviorJudge(CallContext& ctx, const ValueList& args);
  ValueList abiGetRecords(const ValueList& args) const;

  Address self_;
  Address creator_;
  int64_t base_ = 2;
  int64_t interval_ = 3;
  int64_t unitSeconds_ = kDefaultUnitSeconds;
  std::map<Address, std::vector<JudgeRecord>> records_;
};

}  // namespace chainacl

#endif  // CHAINACL_CONTRACTS_JC_HPP
