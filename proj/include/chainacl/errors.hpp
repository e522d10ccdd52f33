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

#ifndef CHAINACL_ERRORS_HPP
#define CHAINACL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace chainacl {

// Receipt-level error codes. A failing ABI aborts its whole transaction
// (state and events roll back) but never poisons the enclosing block:
// the executor turns the throw into a failed receipt.
enum class ErrCode {
  None,
  PermissionDenied,
  DuplicatePolicy,
  NoSuchPolicy,
  NotAJc,
  JcUnset,
  UnauthorizedCaller,
  NoSuchAbi,
  NoSuchContract,
  ContractDestroyed,
  UnknownKind,
  UnknownAccount,
  BadArgs,
  DepthLimit,
  AccOnly,
  DuplicateName,
  CreatorMismatch,
  DanglingAddress,
  NoSuchMethod,
};

// Stable wire/runlog names ("permission-denied", ...).
const char* errName(ErrCode code);

class ContractError : public std::runtime_error {
 public:
  ContractError(ErrCode code, const std::string& message)
      : std::runtime_error(std::string(errName(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  ErrCode code() const { return code_; }
  const std::string& detail() const { return detail_; }

 private:
  ErrCode code_;
  std::string detail_;
};

// Mining and block-acceptance failures. `check` names the failed step
// ("height", "prev-hash", "pow", "tx-format", "state-root", "empty-mempool",
// "nonce-budget").
class ChainError : public std::runtime_error {
 public:
  ChainError(std::string check, const std::string& message)
      : std::runtime_error(check + ": " + message), check_(std::move(check)) {}

  const std::string& check() const { return check_; }

 private:
  std::string check_;
};

// Scenario/topology/snapshot schema problems.
class ScenarioError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace chainacl

#endif  // CHAINACL_ERRORS_HPP
