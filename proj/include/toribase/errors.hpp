// Copyright 2026 The toribase Authors
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

#ifndef TORIBASE_ERRORS_HPP
#define TORIBASE_ERRORS_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace toribase {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector lengths or matrix shapes do not agree.
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Caller passed a value outside the operation's domain.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// A configured budget (fiber size, reduction steps, time, integer width)
/// was exhausted. Results are never silently truncated.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

/// Two independent computations of the same mathematical object disagree,
/// or a proven inclusion failed. Always an implementation bug.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

/// Text input did not match the instance grammar.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int column)
      : Error("line " + std::to_string(line) + ", column " +
              std::to_string(column) + ": " + what),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Budgets shared by all potentially expensive operations.
struct Limits {
  std::int64_t fiber_cap = 1'000'000;
  std::int64_t step_cap = 10'000'000;
  std::int64_t cycle_cap = 100'000;
  std::int64_t subset_cap = 10'000'000;
  std::optional<std::chrono::steady_clock::time_point> deadline;

  static Limits with_timeout(std::chrono::seconds secs) {
    Limits l;
    l.deadline = std::chrono::steady_clock::now() + secs;
    return l;
  }

  void check_deadline() const {
    if (deadline && std::chrono::steady_clock::now() > *deadline) {
      throw ResourceLimitError("timeout exceeded");
    }
  }
};

}  // namespace toribase

#endif  // TORIBASE_ERRORS_HPP
