/*
Copyright 2026 The updom Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <stdexcept>
#include <string>

namespace updom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph or partition text. `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
  public:
    ParseError(const std::string &what, int line = 0)
        : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    int line() const noexcept { return line_; }

  private:
    int line_;
};

/// A caller broke an operation's precondition.
class ContractError : public Error {
  public:
    using Error::Error;
};

/// A class-specific solver was handed a graph outside its class.
class ClassMismatchError : public ContractError {
  public:
    using ContractError::ContractError;
};

/// The exhaustive oracle refused an instance above its size cap.
class SizeCapError : public Error {
  public:
    using Error::Error;
};

/// A constructed object failed its own re-verification. Always a bug or a
/// misread construction, never a user error.
class VerificationError : public Error {
  public:
    using Error::Error;
};

} // namespace updom
