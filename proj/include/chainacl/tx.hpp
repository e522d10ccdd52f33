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

#ifndef CHAINACL_TX_HPP
#define CHAINACL_TX_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chainacl/address.hpp"
#include "chainacl/digest.hpp"
#include "chainacl/errors.hpp"
#include "chainacl/value.hpp"

namespace chainacl {

// Account-originated ABI invocation. An empty target means contract
// deployment, with abiName carrying the contract-kind tag and args the
// constructor arguments. The nonce is a per-sender counter that keeps
// ids of otherwise identical transactions distinct.
struct Transaction {
  Address sender;
  std::optional<Address> target;  // empty => deployment
  std::string abiName;
  ValueList args;
  int64_t suppliedTime = 0;  // the caller-side time argument, not the block timestamp
  uint64_t nonce = 0;
  Digest txId;

  // Canonical bytes of everything except txId; txId = sha256 of this.
  Bytes canonicalBody() const;
  // Canonical bytes including txId, as hashed into blocks and snapshotted.
  Bytes canonicalFull() const;
  Digest computeId() const { return sha256(canonicalBody()); }

  static Transaction make(const Address& sender, std::optional<Address> target,
                          std::string abiName, ValueList args,
                          int64_t suppliedTime, uint64_t nonce);

  nlohmann::json toJson() const;
  static Transaction fromJson(const nlohmann::json& j);
};

// Contract-originated invocation. Exists only inside an executing
// transaction; never enters a mempool.
struct Message {
  Address fromContract;
  Address target;
  std::string abiName;
  ValueList args;
};

struct Event {
  Address emitter;
  std::string name;
  ValueList payload;
  uint64_t blockHeight = 0;
  Digest txId;

  bool operator==(const Event&) const = default;

  nlohmann::json toJson() const;
};

struct Receipt {
  Digest txId;
  bool ok = false;
  ErrCode code = ErrCode::None;
  std::string errorDetail;
  ValueList returnValues;
  std::vector<Event> events;

  nlohmann::json toJson() const;
};

}  // namespace chainacl

#endif  // CHAINACL_TX_HPP
