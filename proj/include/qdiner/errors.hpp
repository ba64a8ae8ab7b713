// Copyright 2026 The qdiner Authors
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

namespace qdiner {

/// An argument lies outside the mathematical domain of an operation
/// (qubit index out of range, angle outside the strategy domain, ...).
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// A value violates a structural invariant (non-unitary matrix, unnormalized
/// distribution, incomplete profile table, ...).
class ValidationError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed text input. `line()` is 1-based, or 0 when not line oriented.
class ParseError : public std::runtime_error {
   public:
    ParseError(const std::string &what, std::size_t line = 0)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

   private:
    std::size_t line_;
};

}  // namespace qdiner
