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

#include "chainacl/digest.hpp"

#include <openssl/evp.h>

#include <bit>
#include <cstring>
#include <stdexcept>

namespace chainacl {

Digest Digest::fromHex(const std::string& hex) {
  Bytes raw = chainacl::fromHex(hex);
  if (raw.size() != 32) throw std::invalid_argument("digest must be 32 bytes");
  Digest d;
  std::memcpy(d.bytes.data(), raw.data(), 32);
  return d;
}

Digest sha256(std::span<const uint8_t> data) {
  Digest out;
  unsigned int len = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr) throw std::runtime_error("EVP_MD_CTX_new failed");
  if (EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1 ||
      EVP_DigestUpdate(ctx, data.data(), data.size()) != 1 ||
      EVP_DigestFinal_ex(ctx, out.bytes.data(), &len) != 1 || len != 32) {
    EVP_MD_CTX_free(ctx);
    throw std::runtime_error("sha256 failed");
  }
  EVP_MD_CTX_free(ctx);
  return out;
}

unsigned leadingZeroBits(const Digest& d) {
  unsigned bits = 0;
  for (uint8_t b : d.bytes) {
    if (b == 0) {
      bits += 8;
      continue;
    }
    bits += std::countl_zero(b);
    break;
  }
  return bits;
}

}  // namespace chainacl
