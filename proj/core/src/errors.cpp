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

#include "lexin/errors.hpp"

#include <utility>

namespace lexin {

namespace {

std::string nixon_message(const std::string& attribute,
                          const std::vector<std::string>& values,
                          const std::vector<std::string>& parents) {
  std::string out = "conflicting inherited values for '" + attribute + "':";
  for (const std::string& v : values) out += " " + v;
  out += " (from";
  for (const std::string& p : parents) out += " " + p;
  out += "); add a local value or a '?' blocker";
  return out;
}

}  // namespace

NixonDiamondError::NixonDiamondError(std::string attribute,
                                     std::vector<std::string> values,
                                     std::vector<std::string> parents)
    : Error(nixon_message(attribute, values, parents)),
      attribute_(std::move(attribute)),
      values_(std::move(values)),
      parents_(std::move(parents)) {}

}  // namespace lexin
