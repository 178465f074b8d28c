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

#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lexin {

/// Base class for every error this library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resource or parameter guard was violated (subset-search limit,
/// weighting step out of range, unsatisfiable generator parameters).
/// The CLI maps these to a dedicated exit code.
class GuardError : public Error {
 public:
  using Error::Error;
};

/// An entry inherits two different values for one attribute and lists no
/// local blocker for that attribute. Produced results can never trigger
/// this; it flags hand-written entries.
class NixonDiamondError : public Error {
 public:
  NixonDiamondError(std::string attribute, std::vector<std::string> values,
                    std::vector<std::string> parents);

  const std::string& attribute() const { return attribute_; }
  const std::vector<std::string>& values() const { return values_; }
  const std::vector<std::string>& parents() const { return parents_; }

 private:
  std::string attribute_;
  std::vector<std::string> values_;
  std::vector<std::string> parents_;
};

}  // namespace lexin
