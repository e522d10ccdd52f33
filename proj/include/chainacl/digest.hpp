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

#ifndef CHAINACL_DIGEST_HPP
#define CHAINACL_DIGEST_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <cstring>
#include <span>
#include <string>

#include "chainacl/bytes.hpp"

namespace chainacl {

// 32-byte SHA-256 digest.
struct Digest {
  std::array<uint8_t, 32> bytes{};

  auto operator<=>(const Digest&) const = default;

  bool isZero() const {
    for (auto b : bytes)
      if (b != 0) return false;
    return true;
  }
  std::string hex() const { return toHex(bytes); }
  static Digest fromHex(const std::string& hex);
};

struct DigestHash {
  size_t operator()(const Digest& d) const {
    size_t out;
    static_assert(sizeof(out) <= 32);
    std::memcpy(&out, d.bytes.data(), sizeof(out));
    return out;
  }
};

Digest sha256(std::span<const uint8_t> data);
inline Digest sha256(const Bytes& data) {
  return sha256(std::span<const uint8_t>(data.data(), data.size()));
}

// Number of leading zero bits, MSB of byte 0 first. Used by the
// proof-of-work difficulty test.
unsigned leadingZeroBits(const Digest& d);

}  // namespace chainacl

#endif  // CHAINACL_DIGEST_HPP
