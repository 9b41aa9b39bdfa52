// Copyright 2026 The qcc Authors
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

#include "ir/Errors.hpp"

namespace qcc {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnsupportedConstruct: return "UnsupportedConstruct";
    case ErrorCode::UnsupportedGate: return "UnsupportedGate";
    case ErrorCode::UnknownUnit: return "UnknownUnit";
    case ErrorCode::ArityMismatch: return "ArityMismatch";
    case ErrorCode::SignatureMismatch: return "SignatureMismatch";
    case ErrorCode::BoxesPresent: return "BoxesPresent";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::PostconditionFailed: return "PostconditionFailed";
    case ErrorCode::IncompatibleComposition: return "IncompatibleComposition";
    case ErrorCode::NonCliffordGate: return "NonCliffordGate";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NonUnitaryBlock: return "NonUnitaryBlock";
    case ErrorCode::UnsupportedTarget: return "UnsupportedTarget";
    case ErrorCode::MissingErrorData: return "MissingErrorData";
    case ErrorCode::TooManyQubits: return "TooManyQubits";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::SymbolicParams: return "SymbolicParams";
    case ErrorCode::NonUnitaryOps: return "NonUnitaryOps";
    case ErrorCode::InvalidSize: return "InvalidSize";
    case ErrorCode::Timeout: return "Timeout";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace qcc
