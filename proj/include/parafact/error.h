// Copyright 2026 The Parafact Authors.
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

#ifndef PARAFACT_ERROR_H_
#define PARAFACT_ERROR_H_

#include <stdexcept>
#include <string>

namespace parafact {

// Base class for all data errors raised by the library. Callers that only
// care about "bad input" versus "bug" catch this.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string &message) : std::runtime_error(message) {}
};

// Malformed input file. Line numbers are 1-based; 0 means "whole file".
class ParseError : public Error {
 public:
  ParseError(const std::string &source, int line, const std::string &message)
      : Error(source + ":" + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const { return line_; }

 private:
  int line_;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

class ConflictError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace parafact

#endif  // PARAFACT_ERROR_H_
