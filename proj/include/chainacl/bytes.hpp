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

#ifndef CHAINACL_BYTES_HPP
#define CHAINACL_BYTES_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace chainacl {

using Bytes = std::vector<uint8_t>;

std::string toHex(std::span<const uint8_t> data);
Bytes fromHex(const std::string& hex);  // accepts optional 0x prefix; throws std::invalid_argument

// Canonical encoder. Every digest in the system (transaction ids, block
// hashes, state roots, address derivation) is computed over bytes produced
// here, so the rules are fixed: big-endian fixed-width integers, u32
// length-prefixed strings and lists, raw fixed-size arrays, bool as one
// byte. Field order is the caller's responsibility and must never change.
class ByteWriter {
 public:
  void u8(uint8_t v) { buf_.push_back(v); }
  void u32(uint32_t v);
  void u64(uint64_t v);
  void i64(int64_t v) { u64(static_cast<uint64_t>(v)); }
  void boolean(bool v) { u8(v ? 1 : 0); }
  void str(const std::string& s);
  void raw(std::span<const uint8_t> data);
  template <size_t N>
  void fixed(const std::array<uint8_t, N>& a) {
    raw(std::span<const uint8_t>(a.data(), a.size()));
  }

  const Bytes& bytes() const { return buf_; }
  Bytes take() { return std::move(buf_); }

 private:
  Bytes buf_;
};

// Mirror decoder for the snapshot loader and tamper tests.
// Throws std::out_of_range on truncated input.
class ByteReader {
 public:
  explicit ByteReader(std::span<const uint8_t> data) : data_(data) {}

  uint8_t u8();
  uint32_t u32();
  uint64_t u64();
  int64_t i64() { return static_cast<int64_t>(u64()); }
  bool boolean() { return u8() != 0; }
  std::string str();
  template <size_t N>
  std::array<uint8_t, N> fixed() {
    std::array<uint8_t, N> out{};
    for (auto& b : out) b = u8();
    return out;
  }
  bool atEnd() const { return pos_ == data_.size(); }

 private:
  std::span<const uint8_t> data_;
  size_t pos_ = 0;
};

}  // namespace chainacl

#endif  // CHAINACL_BYTES_HPP
