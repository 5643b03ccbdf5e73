// Copyright 2026 The aegame Authors
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

#ifndef AEGAME_ERRORS_H_
#define AEGAME_ERRORS_H_

#include <stdexcept>
#include <string>

namespace aegame {

// Base class for every error raised by the library. The CLI maps the
// concrete subclasses onto process exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed or out-of-range user input (unknown vertex, bad file, bad params).
class InputError : public Error {
 public:
  using Error::Error;
};

// A configured size bound would be exceeded (oracle state space, dual size).
class ResourceError : public Error {
 public:
  using Error::Error;
};

// The input is well formed but outside the fragment an operation handles,
// e.g. a non-linear hypergraph handed to a linear rank-3 routine.
class UnsupportedInput : public Error {
 public:
  using Error::Error;
};

// A documented precondition was not met by the caller.
class ContractViolation : public Error {
 public:
  using Error::Error;
};

// An internal consistency check failed. Seeing one means a bug.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace aegame

#endif  // AEGAME_ERRORS_H_
