// Copyright 2026 The biprod Authors.
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

namespace biprod {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A table refers to an object or morphism index that does not exist.
class IndexOutOfBounds : public Error {
 public:
  using Error::Error;
};

/// An operation was called outside its precondition (uncertified witness,
/// missing zero structure, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// User-supplied algebraic data does not satisfy its axioms.
class InvalidStructure : public Error {
 public:
  using Error::Error;
};

/// A construction would exceed the configured size limit.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

/// The uniqueness of zero morphisms failed; indicates a bug, not bad input.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

/// Diagnostic for the category description language, with a 1-based source
/// location.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace biprod
