// Copyright 2026 The fallacyforge Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace fallacy {

/// Root of every exception thrown by the library.
///
/// Errors fall into three families that callers (the CLI in particular) map
/// onto exit codes: `InputError` for malformed or inconsistent inputs,
/// `ProviderError` for anything that went wrong talking to or interpreting a
/// language model, and the remaining engine/contract errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  /// Stable snake_case identifier used in machine-readable error lines.
  [[nodiscard]] virtual const char* kind() const noexcept { return "error"; }
};

class PreconditionError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "precondition"; }
};

// ---------------------------------------------------------------------------
// Input errors.

class InputError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "input_error"; }
};

class SyntaxError : public InputError {
 public:
  SyntaxError(std::size_t line, std::size_t column, std::string token,
              const std::string& message);

  [[nodiscard]] std::size_t line() const noexcept { return line_; }
  [[nodiscard]] std::size_t column() const noexcept { return column_; }
  [[nodiscard]] const std::string& token() const noexcept { return token_; }
  const char* kind() const noexcept override { return "syntax_error"; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string token_;
};

class GroundnessError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "non_ground_fact"; }
};

class UnknownSchemaError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "unknown_schema"; }
};

class SignatureError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "signature_error"; }
};

class MismatchError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "mismatch"; }
};

class DuplicateLabelError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "duplicate_label"; }
};

class LengthMismatchError : public InputError {
 public:
  using InputError::InputError;
  const char* kind() const noexcept override { return "length_mismatch"; }
};

// ---------------------------------------------------------------------------
// Engine and knowledge-base errors.

class FlounderError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "flounder"; }
};

class DepthLimitError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "depth_limit"; }
};

class SealedError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "sealed"; }
};

class DivisionDomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "division_domain"; }
};

// ---------------------------------------------------------------------------
// Provider errors.

class ProviderError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "provider_error"; }
};

/// A failure worth retrying: rate limiting, 5xx, dropped connections.
class TransientProviderError : public ProviderError {
 public:
  explicit TransientProviderError(
      const std::string& message,
      std::optional<std::chrono::milliseconds> retry_after = std::nullopt)
      : ProviderError(message), retry_after_(retry_after) {}

  [[nodiscard]] std::optional<std::chrono::milliseconds> retry_after()
      const noexcept {
    return retry_after_;
  }
  const char* kind() const noexcept override { return "transient_provider"; }

 private:
  std::optional<std::chrono::milliseconds> retry_after_;
};

class ReplayMissError : public ProviderError {
 public:
  using ProviderError::ProviderError;
  const char* kind() const noexcept override { return "replay_miss"; }
};

class EmptyYieldError : public ProviderError {
 public:
  using ProviderError::ProviderError;
  const char* kind() const noexcept override { return "empty_yield"; }
};

class CountMismatchError : public ProviderError {
 public:
  using ProviderError::ProviderError;
  const char* kind() const noexcept override { return "count_mismatch"; }
};

class ScoreParseError : public ProviderError {
 public:
  using ProviderError::ProviderError;
  const char* kind() const noexcept override { return "score_parse"; }
};

class JsonError : public ProviderError {
 public:
  using ProviderError::ProviderError;
  const char* kind() const noexcept override { return "json_error"; }
};

}  // namespace fallacy
