// Copyright 2026 The conncalc Authors
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

#ifndef CONNCALC_ERRORS_HPP
#define CONNCALC_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace conncalc {

// One broken invariant, e.g. {"connection:ab", "magnitude", "..."}.
struct Violation {
  std::string subject;
  std::string field;
  std::string message;

  std::string to_string() const;
  bool operator==(const Violation&) const = default;
};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input data breaks a type invariant. Carries every violation found.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);
  ValidationError(std::string subject, std::string field, std::string message);

  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// A referenced id does not exist, or a generated id collides.
class IntegrityError : public Error {
 public:
  using Error::Error;
};

// A ratio was requested against a zero denominator.
class DivisionByZeroError : public Error {
 public:
  using Error::Error;
};

// Operation not allowed in the connection's current state.
class StateError : public Error {
 public:
  using Error::Error;
};

// Scenario lacks a setting the operation needs.
class ConfigurationError : public Error {
 public:
  using Error::Error;
};

}  // namespace conncalc

#endif  // CONNCALC_ERRORS_HPP
