// Copyright 2026 The pmkit Authors. All rights reserved.
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

#ifndef PMKIT_ERROR_HPP_
#define PMKIT_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace pmkit {

// Base class of every error raised by the library. The CLI maps each
// subclass onto a distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed game document, rational literal or CLI value.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Structurally well-formed input that violates a Game invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// A policy refuses a game outside its class. `witness` names the offending
// action pair (1-based, as printed to users), or is empty.
class RefusalError : public Error {
 public:
  RefusalError(const std::string& what, std::string witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::string& witness() const { return witness_; }

 private:
  std::string witness_;
};

// Iterative numerical routine failed (e.g. stationary distribution).
class NumericError : public Error {
 public:
  using Error::Error;
};

// Caller broke an operation's precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace pmkit

#endif  // PMKIT_ERROR_HPP_
