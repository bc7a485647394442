// Copyright 2026 The Authors.
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

#ifndef CFTUTTE_ERRORS_HPP
#define CFTUTTE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cft {

// Malformed or structurally invalid input (bad file, broken axioms, element
// out of range, precondition violated by the caller).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The input is well-formed but no matroid can realize it: a recursion
// produced a negative coefficient, or a counting formula is not integral.
class InfeasibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A subset enumeration would exceed its configured size bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An internal consistency check failed. Signals a bug, not bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace cft

#endif  // CFTUTTE_ERRORS_HPP
