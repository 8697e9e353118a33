// Copyright 2026 The SmartEmbed Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace smartembed {

/// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An error anchored to a position in Solidity source.
class SourceError : public Error {
 public:
  SourceError(const std::string& what, int line, int column)
      : Error(what + " at line " + std::to_string(line) + ", column " + std::to_string(column)),
        line_(line),
        column_(column) {}

  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

class LexError : public SourceError {
 public:
  using SourceError::SourceError;
};

class ParseError : public SourceError {
 public:
  using SourceError::SourceError;
};

/// A statement was serialized against a function/contract that does not contain it.
class ContextError : public Error {
 public:
  using Error::Error;
};

class EmptyContract : public Error {
 public:
  using Error::Error;
};

class EmptyDocument : public Error {
 public:
  using Error::Error;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class DegenerateVocab : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t actual)
      : Error("dimension mismatch: expected " + std::to_string(expected) + ", got " +
              std::to_string(actual)) {}
};

class NonFiniteInput : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

class FormatVersionMismatch : public Error {
 public:
  FormatVersionMismatch(std::uint32_t supported, std::uint32_t found)
      : Error("unsupported format version " + std::to_string(found) +
              " (this build reads version " + std::to_string(supported) + ")"),
        supported_(supported),
        found_(found) {}

  std::uint32_t supported() const noexcept { return supported_; }
  std::uint32_t found() const noexcept { return found_; }

 private:
  std::uint32_t supported_;
  std::uint32_t found_;
};

/// Malformed configuration or data value (bad bug-db row, bad address, out-of-range flag).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NetworkError : public Error {
 public:
  using Error::Error;
};

class NotVerified : public Error {
 public:
  using Error::Error;
};

class RateLimited : public Error {
 public:
  using Error::Error;
};

/// More than half of the corpus files failed to parse.
class BuildFailed : public Error {
 public:
  using Error::Error;
};

}  // namespace smartembed
