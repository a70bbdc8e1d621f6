// Copyright 2026 The lly Authors
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

#ifndef LLY_ERRORS_H_
#define LLY_ERRORS_H_

#include <stdexcept>
#include <string>

namespace lly {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad input to an operation: out-of-range vertex, missing edge, etc.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// An operation's documented precondition does not hold for the input.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// Input graph is disconnected where a connected one is required, or two
// vertices are at infinite distance.
class DisconnectedError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// An exhaustive routine would exceed its configured size budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// kappa_rho / (1 - rho) differs between two idleness values that should
// both lie in the linear region.
class LinearityViolation : public Error {
 public:
  using Error::Error;
};

// A self-check that must hold by construction failed.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace lly

#endif  // LLY_ERRORS_H_
