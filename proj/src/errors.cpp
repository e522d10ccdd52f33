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

#include "chainacl/errors.hpp"

namespace chainacl {

const char* errName(ErrCode code) {
  switch (code) {
    case ErrCode::None: return "none";
    case ErrCode::PermissionDenied: return "permission-denied";
    case ErrCode::DuplicatePolicy: return "duplicate-policy";
    case ErrCode::NoSuchPolicy: return "no-such-policy";
    case ErrCode::NotAJc: return "not-a-jc";
    case ErrCode::JcUnset: return "jc-unset";
    case ErrCode::UnauthorizedCaller: return "unauthorized-caller";
    case ErrCode::NoSuchAbi: return "no-such-abi";
    case ErrCode::NoSuchContract: return "no-such-contract";
    case ErrCode::ContractDestroyed: return "contract-destroyed";
    case ErrCode::UnknownKind: return "unknown-kind";
    case ErrCode::UnknownAccount: return "unknown-account";
    case ErrCode::BadArgs: return "bad-args";
    case ErrCode::DepthLimit: return "depth-limit";
    case ErrCode::AccOnly: return "acc-only";
    case ErrCode::DuplicateName: return "duplicate-name";
    case ErrCode::CreatorMismatch: return "creator-mismatch";
    case ErrCode::DanglingAddress: return "dangling-address";
    case ErrCode::NoSuchMethod: return "no-such-method";
  }
  return "unknown";
}

}  // namespace chainacl
