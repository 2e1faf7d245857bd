// Copyright 2026 The itc Authors
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

namespace itc {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Structural problem with a gate or circuit (range, arity, ordering).
class CircuitError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class DecompositionFailed : public Error {
 public:
  using Error::Error;
};

/// Raised by the compile pipeline; names the pass that failed.
class CompileError : public Error {
 public:
  CompileError(std::string pass, const std::string& message)
      : Error(pass + ": " + message), pass_(std::move(pass)) {}

  const std::string& pass() const noexcept { return pass_; }

 private:
  std::string pass_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

}  // namespace itc
