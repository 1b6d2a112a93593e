// Copyright 2026 The qaesolve Authors
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
#include <vector>

namespace qaesolve {

/// Bad argument: length mismatch, index out of range, duplicate index, etc.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Problem larger than a solver's hard cap.
class SizeError : public std::runtime_error {
 public:
  SizeError(const std::string& what, std::size_t cap)
      : std::runtime_error(what), cap_(cap) {}
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Zero vector where a nonzero one is required.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Iterative method ran out of sweeps/iterations.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what,
                            std::vector<double> lambda_history = {})
      : std::runtime_error(what), history_(std::move(lambda_history)) {}
  const std::vector<double>& lambda_history() const noexcept {
    return history_;
  }

 private:
  std::vector<double> history_;
};

/// Malformed text input. line() is 1-based; 0 when not attributable.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + msg
                                : msg),
        line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed input that violates a semantic invariant (e.g. asymmetry).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace qaesolve
