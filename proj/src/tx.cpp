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

#include "chainacl/tx.hpp"

#include <nlohmann/json.hpp>

namespace chainacl {

using nlohmann::json;

Bytes Transaction::canonicalBody() const {
  ByteWriter w;
  w.str("tx");
  w.fixed(sender.bytes);
  w.boolean(target.has_value());
  if (target) w.fixed(target->bytes);
  w.str(abiName);
  encodeValues(w, args);
  w.i64(suppliedTime);
  w.u64(nonce);
  return w.take();
}

Bytes Transaction::canonicalFull() const {
  ByteWriter w;
  w.raw(canonicalBody());
  w.fixed(txId.bytes);
  return w.take();
}

Transaction Transaction::make(const Address& sender, std::optional<Address> target,
                              std::string abiName, ValueList args,
                              int64_t suppliedTime, uint64_t nonce) {
  Transaction tx;
  tx.sender = sender;
  tx.target = target;
  tx.abiName = std::move(abiName);
  tx.args = std::move(args);
  tx.suppliedTime = suppliedTime;
  tx.nonce = nonce;
  tx.txId = tx.computeId();
  return tx;
}

json Transaction::toJson() const {
  json a = json::array();
  for (const Value& v : args) a.push_back(v.toJson());
  return json{
      {"sender", sender.hex()},
      {"target", target ? json(target->hex()) : json(nullptr)},
      {"abi", abiName},
      {"args", a},
      {"suppliedTime", suppliedTime},
      {"nonce", nonce},
      {"txId", "0x" + txId.hex()},
  };
}

Transaction Transaction::fromJson(const json& j) {
  Transaction tx;
  tx.sender = Address::fromHex(j.at("sender").get<std::string>());
  if (!j.at("target").is_null()) {
    tx.target = Address::fromHex(j.at("target").get<std::string>());
  }
  tx.abiName = j.at("abi").get<std::string>();
  for (const auto& v : j.at("args")) tx.args.push_back(Value::fromJson(v));
  tx.suppliedTime = j.at("suppliedTime").get<int64_t>();
  tx.nonce = j.at("nonce").get<uint64_t>();
  tx.txId = Digest::fromHex(j.at("txId").get<std::string>());
  return tx;
}

json Event::toJson() const {
  json p = json::array();
  for (const Value& v : payload) p.push_back(v.toJson());
  return json{
      {"emitter", emitter.hex()},
      {"name", name},
      {"payload", p},
      {"blockHeight", blockHeight},
      {"txId", "0x" + txId.hex()},
  };
}

json Receipt::toJson() const {
  json r = json::array();
  for (const Value& v : returnValues) r.push_back(v.toJson());
  json e = json::array();
  for (const Event& ev : events) e.push_back(ev.toJson());
  json out{
      {"txId", "0x" + txId.hex()},
      {"status", ok ? "ok" : std::string("error:") + errName(code)},
      {"returnValues", r},
      {"events", e},
  };
  if (!ok) out["detail"] = errorDetail;
  return out;
}

}  // namespace chainacl
