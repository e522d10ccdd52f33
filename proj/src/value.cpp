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

#include "chainacl/value.hpp"

#include <nlohmann/json.hpp>

#include "chainacl/errors.hpp"

namespace chainacl {

using nlohmann::json;

void Value::encode(ByteWriter& w) const {
  w.u8(static_cast<uint8_t>(kind()));
  switch (kind()) {
    case Kind::Int: w.i64(asInt()); break;
    case Kind::Str: w.str(asStr()); break;
    case Kind::Addr: w.fixed(asAddr().bytes); break;
    case Kind::Bool: w.boolean(asBool()); break;
  }
}

Value Value::decode(ByteReader& r) {
  switch (static_cast<Kind>(r.u8())) {
    case Kind::Int: return Value(r.i64());
    case Kind::Str: return Value(r.str());
    case Kind::Addr: {
      Address a;
      a.bytes = r.fixed<20>();
      return Value(a);
    }
    case Kind::Bool: return Value(r.boolean());
  }
  throw std::out_of_range("bad value tag");
}

json Value::toJson() const {
  switch (kind()) {
    case Kind::Int: return json{{"int", asInt()}};
    case Kind::Str: return json{{"str", asStr()}};
    case Kind::Addr: return json{{"addr", asAddr().hex()}};
    case Kind::Bool: return json{{"bool", asBool()}};
  }
  return json{};
}

Value Value::fromJson(const json& j) {
  if (!j.is_object() || j.size() != 1) {
    throw ScenarioError("value must be a single-key object");
  }
  if (j.contains("int")) return Value(j.at("int").get<int64_t>());
  if (j.contains("str")) return Value(j.at("str").get<std::string>());
  if (j.contains("addr")) return Value(Address::fromHex(j.at("addr").get<std::string>()));
  if (j.contains("bool")) return Value(j.at("bool").get<bool>());
  throw ScenarioError("unknown value kind in " + j.dump());
}

void encodeValues(ByteWriter& w, const ValueList& values) {
  w.u32(static_cast<uint32_t>(values.size()));
  for (const Value& v : values) v.encode(w);
}

ValueList decodeValues(ByteReader& r) {
  uint32_t n = r.u32();
  ValueList out;
  out.reserve(n);
  for (uint32_t i = 0; i < n; ++i) out.push_back(Value::decode(r));
  return out;
}

}  // namespace chainacl
