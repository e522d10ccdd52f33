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

#ifndef CHAINACL_VALUE_HPP
#define CHAINACL_VALUE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "chainacl/address.hpp"
#include "chainacl/bytes.hpp"

namespace chainacl {

// Typed ABI argument / return value: integer, string, address or boolean.
// These four cover every contract interface in the system.
class Value {
 public:
  enum class Kind : uint8_t { Int = 0, Str = 1, Addr = 2, Bool = 3 };

  Value() : v_(int64_t{0}) {}
  Value(int64_t v) : v_(v) {}
  Value(int v) : v_(int64_t{v}) {}
  Value(std::string v) : v_(std::move(v)) {}
  Value(const char* v) : v_(std::string(v)) {}
  Value(Address v) : v_(v) {}
  Value(bool v) : v_(v) {}

  Kind kind() const { return static_cast<Kind>(v_.index()); }
  bool isInt() const { return kind() == Kind::Int; }
  bool isStr() const { return kind() == Kind::Str; }
  bool isAddr() const { return kind() == Kind::Addr; }
  bool isBool() const { return kind() == Kind::Bool; }

  int64_t asInt() const { return std::get<int64_t>(v_); }
  const std::string& asStr() const { return std::get<std::string>(v_); }
  const Address& asAddr() const { return std::get<Address>(v_); }
  bool asBool() const { return std::get<bool>(v_); }

  bool operator==(const Value&) const = default;

  void encode(ByteWriter& w) const;
  static Value decode(ByteReader& r);

  nlohmann::json toJson() const;
  static Value fromJson(const nlohmann::json& j);

 private:
  std::variant<int64_t, std::string, Address, bool> v_;
};

using ValueList = std::vector<Value>;

void encodeValues(ByteWriter& w, const ValueList& values);
ValueList decodeValues(ByteReader& r);

}  // namespace chainacl

#endif  // CHAINACL_VALUE_HPP
