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

// Synthetic contract kind for runtime tests: relays messages (so tests can
// drive message-only ABIs), recurses to probe the depth limit, and mutates
// local state before failing to probe rollback.

#ifndef CHAINACL_TESTS_SUPPORT_FORWARDER_HPP
#define CHAINACL_TESTS_SUPPORT_FORWARDER_HPP

#include "chainacl/contract.hpp"
#include "chainacl/errors.hpp"
#include "chainacl/world.hpp"

namespace chainacl::testing {

class ForwarderContract : public Contract {
 public:
  static constexpr const char* kKind = "forwarder";

  ForwarderContract(const Address& self, const Address&, const ValueList&)
      : self_(self) {}

  std::string kindName() const override { return kKind; }

  std::unique_ptr<Contract> clone() const override {
    return std::make_unique<ForwarderContract>(*this);
  }

  void encodeState(ByteWriter& w) const override {
    w.str(note_);
    w.i64(counter_);
  }

  ValueList invoke(CallContext& ctx, const std::string& abiName,
                   const ValueList& args) override {
    if (abiName == "forward") {
      // args: target, abi, forwarded args...
      ValueList rest(args.begin() + 2, args.end());
      return ctx.sendMessage(args.at(0).asAddr(), args.at(1).asStr(), rest);
    }
    if (abiName == "recurse") {
      // args: remaining depth; each level is one more nested message.
      int64_t n = args.at(0).asInt();
      ++counter_;
      if (n <= 0) return {Value(int64_t(ctx.depth))};
      return ctx.sendMessage(self_, "recurse", {Value(n - 1)});
    }
    if (abiName == "setNote") {
      note_ = args.at(0).asStr();
      return {};
    }
    if (abiName == "noteThenFail") {
      // Mutate state, emit an event, then abort: nothing may survive.
      note_ = args.at(0).asStr();
      ctx.emitEvent("noted", {Value(note_)});
      throw ContractError(ErrCode::BadArgs, "deliberate failure");
    }
    if (abiName == "getNote") return {Value(note_)};
    if (abiName == "getCounter") return {Value(counter_)};
    throw ContractError(ErrCode::NoSuchAbi, "forwarder has no ABI '" + abiName + "'");
  }

  static void registerWith(World& world) {
    world.registerKind(kKind, [](const Address& self, const Address& creator,
                                 const ValueList& initArgs) {
      return std::make_unique<ForwarderContract>(self, creator, initArgs);
    });
  }

 private:
  Address self_;
  std::string note_;
  int64_t counter_ = 0;
};

}  // namespace chainacl::testing

#endif  // CHAINACL_TESTS_SUPPORT_FORWARDER_HPP
