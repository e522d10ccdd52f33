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

#include "chainacl/address.hpp"

#include <cstring>
#include <stdexcept>

#include "chainacl/bytes.hpp"

namespace chainacl {

std::string Address::hex() const {
  return "0x" + toHex(std::span<const uint8_t>(bytes.data(), bytes.size()));
}

Address Address::fromHex(const std::string& hex) {
  Bytes raw = chainacl::fromHex(hex);
  if (raw.size() != 20) throw std::invalid_argument("address must be 20 bytes");
  Address a;
  std::memcpy(a.bytes.data(), raw.data(), 20);
  return a;
}

}  // namespace chainacl
