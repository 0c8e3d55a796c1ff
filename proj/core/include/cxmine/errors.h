// Copyright 2026 The cxmine Authors.
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

#ifndef CXMINE_ERRORS_H_
#define CXMINE_ERRORS_H_

#include <stdexcept>
#include <string>

namespace cxmine {

// Root of every exception thrown by the library. Two families exist:
// DataError covers bad input files and inconsistent data, ConfigError
// covers bad user-supplied settings. The CLI maps them to exit codes 2 and 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DataError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

// A malformed line in a line-oriented input file. line() is 1-based.
class ParseError : public DataError {
 public:
  ParseError(const std::string& what, std::size_t line)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

class LexiconConflictError : public DataError {
 public:
  using DataError::DataError;
};

// Raised by the SCAN interpreter on an ungrammatical command.
class InterpretError : public DataError {
 public:
  InterpretError(const std::string& what, std::string token)
      : DataError(what), token_(std::move(token)) {}

  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

}  // namespace cxmine

#endif  // CXMINE_ERRORS_H_
