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

#ifndef CHAINACL_CONTRACT_HPP
#define CHAINACL_CONTRACT_HPP

#include <cstdint>
#include <functional>
#include <memory>
#include <string>

#include "chainacl/address.hpp"
#include "chainacl/digest.hpp"
#include "chainacl/tx.hpp"
#include "chainacl/value.hpp"

namespace chainacl {

class World;
struct CallContext;

namespace detail {
// Per-transaction execution scratchpad shared by all nested calls: buffered
// events (committed only if the transaction succeeds) and the immutable
// call environment.
struct ExecFrame {
  std::vector<Event> events;
  uint64_t blockHeight = 0;
  int64_t blockTime = 0;
  Digest txId;
  Address origin;
  bool readOnly = false;
};
}  // namespace detail

// Contracts are native state machines dispatched by kind tag. State must be
// value-like: clone() deep-copies it and encodeState() writes the canonical
// bytes that feed the world digest.
class Contract {
 public:
  virtual ~Contract() = default;

  virtual std::string kindName() const = 0;
  virtual std::unique_ptr<Contract> clone() const = 0;
  virtual void encodeState(ByteWriter& w) const = 0;
  virtual ValueList invoke(CallContext& ctx, const std::string& abiName,
                           const ValueList& args) = 0;
};

// Per-call view handed to an executing ABI. Nested messages and events go
// through here so the executor can enforce depth limits and keep events
// atomic with the transaction.
struct CallContext {
  World& world;
  Address self;
  Address creator;
  Address caller;  // immediate caller: account for transactions, contract for messages
  Address origin;  // the account that signed the enclosing transaction
  bool viaMessage = false;
  int depth = 0;  // message nesting depth; 0 for the transaction's direct call
  uint64_t blockHeight = 0;
  int64_t blockTime = 0;
  Digest txId;
  bool readOnly = false;

  // Synchronous contract-to-contract call; commits or aborts with the
  // enclosing transaction.
  ValueList sendMessage(const Address& target, const std::string& abiName,
                        ValueList args);
  void emitEvent(std::string name, ValueList payload);
  // selfdestruct: marks this contract dead; its state is erased when the
  // transaction commits.
  void destroySelf();

  detail::ExecFrame* framePtr_ = nullptr;
};

using ContractFactory = std::function<std::unique_ptr<Contract>(
    const Address& self, const Address& creator, const ValueList& initArgs)>;

constexpr int kMaxMessageDepth = 8;

}  // namespace chainacl

#endif  // CHAINACL_CONTRACT_HPP
