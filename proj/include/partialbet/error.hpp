/*
 * Copyright 2026 The partialbet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace partialbet {

enum class ErrorKind {
  UniverseMismatch,
  Arity,
  Parse,
  InvalidValue,
  Precondition,
  Input,
};

inline const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::UniverseMismatch: return "universe-mismatch";
    case ErrorKind::Arity: return "arity";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::InvalidValue: return "invalid-value";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Input: return "input";
  }
  return "unknown";
}

/// Base of every error raised by the library. `kind()` is stable and meant
/// for programmatic dispatch; `what()` is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t position, const std::string& msg)
      : Error(ErrorKind::Parse,
              "at position " + std::to_string(position) + ": " + msg),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Raised when an operation's documented precondition does not hold.
/// `code()` names the failed condition (e.g. "equal-to-sigma").
class PreconditionError : public Error {
 public:
  PreconditionError(std::string code, const std::string& msg)
      : Error(ErrorKind::Precondition, code + ": " + msg),
        code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

}  // namespace partialbet
