/*
 * Copyright 2026 The fraccite Authors
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
#include <utility>

namespace fraccite {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A file or stream could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// An output file or directory could not be created or written.
class OutputError : public IoError {
 public:
  using IoError::IoError;
};

/// Fatal problem with an input file as a whole (record-level problems are
/// collected in a ParseReport instead).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Affiliation query text that does not belong to the grammar.
class QuerySyntaxError : public Error {
 public:
  QuerySyntaxError(std::size_t offset, std::string expected, const std::string& message)
      : Error("query syntax error at offset " + std::to_string(offset) + ": " + message +
              (expected.empty() ? std::string() : " (expected " + expected + ")")),
        offset_(offset),
        expected_(std::move(expected)) {}

  std::size_t offset() const noexcept { return offset_; }
  const std::string& expected() const noexcept { return expected_; }

 private:
  std::size_t offset_;
  std::string expected_;
};

/// A `#n` reference with no matching named result set.
class UnresolvedReferenceError : public Error {
 public:
  explicit UnresolvedReferenceError(int ref)
      : Error("unresolved result reference #" + std::to_string(ref)), ref_(ref) {}
  int reference() const noexcept { return ref_; }

 private:
  int ref_;
};

/// Unit-definition config that cannot be interpreted.
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// Records whose fields contradict each other (e.g. references without a
/// reference count).
class DataIntegrityError : public Error {
 public:
  using Error::Error;
};

/// Precondition violation on arguments (empty vectors, bad alpha, ...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A statistic is undefined for the given sample (zero variance, all ties).
class DegenerateSampleError : public Error {
 public:
  using Error::Error;
};

/// Numerical routine failed to reach its tolerance.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace fraccite
