// Copyright 2026 The qngmetric Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exception types thrown by the library. Each maps to one CLI exit code.
 */
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace qng {

/// Violated precondition: bad qubit index, dimension mismatch, wrong
/// parameter count and similar.
class DomainError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Gate description the simulator refuses to handle (e.g. a generator whose
/// support exceeds the small-matrix limit).
class UnsupportedGateError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Allocation would exceed the configured memory budget.
class ResourceError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// The metric system (g + lambda I) could not be factorized.
class SingularMetricError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed circuit or Hamiltonian file.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string &source, std::size_t line,
               const std::string &what)
        : std::runtime_error(source + ":" + std::to_string(line) + ": " +
                             what),
          line_(line) {}

    [[nodiscard]] std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

} // namespace qng
