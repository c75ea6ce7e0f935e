// Copyright 2026 The Hamlets Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace hamlets {

/// Invalid arguments to a library call (bad color, infeasible generator
/// parameters, capacity mismatch, ...).
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `line()` is 1-based; 0 means "whole file".
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : std::runtime_error(line == 0 ? what
                                     : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Operation on a graph-state qubit that is not live.
class StateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A protocol step was attempted with violated preconditions, or the
/// protocol produced a state different from its target.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A brute-force oracle was asked to enumerate an instance that is too big.
class OracleSizeError : public std::length_error {
 public:
  using std::length_error::length_error;
};

}  // namespace hamlets
