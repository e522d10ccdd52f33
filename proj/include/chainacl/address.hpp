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

#ifndef CHAINACL_ADDRESS_HPP
#define CHAINACL_ADDRESS_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace chainacl {

// 20-byte identity shared by externally controlled accounts and contracts.
// The all-zero address is reserved as "blank" (e.g. the subject/object
// columns of the judge row in the register contract lookup table).
struct Address {
  std::array<uint8_t, 20> bytes{};

  auto operator<=>(const Address&) const = default;

  bool isZero() const {
    for (auto b : bytes)
      if (b != 0) return false;
    return true;
  }
  std::string hex() const;  // 0x-prefixed, lower case
  static Address fromHex(const std::string& hex);
};

}  // namespace chainacl

#endif  // CHAINACL_ADDRESS_HPP
