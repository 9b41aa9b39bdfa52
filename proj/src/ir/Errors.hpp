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

#pragma once

#include <stdexcept>
#include <string>

namespace qcc {

// Values are mirrored by QCC_ERR_* in qcc.h; keep them in sync.
enum class ErrorCode : int {
  InvalidArgument = 1,
  ParseError = 2,
  UnsupportedConstruct = 3,
  UnsupportedGate = 4,
  UnknownUnit = 5,
  ArityMismatch = 6,
  SignatureMismatch = 7,
  BoxesPresent = 8,
  PreconditionFailed = 9,
  PostconditionFailed = 10,
  IncompatibleComposition = 11,
  NonCliffordGate = 12,
  LengthMismatch = 13,
  NonUnitaryBlock = 14,
  UnsupportedTarget = 15,
  MissingErrorData = 16,
  TooManyQubits = 17,
  TooLarge = 18,
  SymbolicParams = 19,
  NonUnitaryOps = 20,
  InvalidSize = 21,
  Timeout = 22,
  Io = 23,
  Internal = 99,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& msg, unsigned line, unsigned column)
      : Error(
            ErrorCode::ParseError, "line " + std::to_string(line) + ", column " +
                                       std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  unsigned line() const { return line_; }
  unsigned column() const { return column_; }

 private:
  unsigned line_;
  unsigned column_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace qcc
