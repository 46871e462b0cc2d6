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

#ifndef RML_ERRORS_HPP_
#define RML_ERRORS_HPP_

#include <stdexcept>
#include <string>

namespace rml {

/// Bad or out-of-contract input (malformed files, violated preconditions,
/// caps exceeded). Maps to process exit code 2.
class InputError : public std::runtime_error {
 public:
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal invariant failed. Several of these are theorem-contradiction
/// class: if they fire, the implementation (not the input) is wrong.
/// Maps to process exit code 3.
class InvariantError : public std::logic_error {
 public:
  explicit InvariantError(const std::string& what) : std::logic_error(what) {}
};

/// A genericity assumption did not hold for the given data (e.g. a dual
/// optimum turned out non-unique where a perturbed instance was expected).
/// Recoverable by re-perturbing; an InputError when surfaced to callers.
class GenericityError : public InputError {
 public:
  explicit GenericityError(const std::string& what) : InputError(what) {}
};

}  // namespace rml

#endif  // RML_ERRORS_HPP_
