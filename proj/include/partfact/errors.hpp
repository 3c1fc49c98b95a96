// Copyright 2026 The partfact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
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

namespace partfact {

/// Root of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed or inconsistent input: bad words, foreign symbols, partitions
/// that do not cover their code, and so on.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public InvalidInput {
 public:
  ParseError(const std::string& what, std::size_t position)
      : InvalidInput(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class AlphabetMismatch : public InvalidInput {
 public:
  AlphabetMismatch() : InvalidInput("operands are over different alphabets") {}
};

/// Analyses are undefined on the empty code.
class EmptyCode : public InvalidInput {
 public:
  EmptyCode() : InvalidInput("code is empty") {}
};

/// An automaton construction exceeded the configured state cap.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// The operation is well-formed but its mathematical preconditions do not
/// hold (e.g. a maximality query on a dense code).
class PreconditionViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace partfact
