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

#include "lexin/feature.hpp"

#include <cctype>
#include <utility>

namespace lexin {

bool is_valid_token(std::string_view s) {
  if (s.empty()) return false;
  for (unsigned char c : s) {
    if (std::isspace(c)) return false;
    switch (c) {
      case '=':
      case '{':
      case '}':
      case ':':
      case '#':
        return false;
      default:
        break;
    }
  }
  return true;
}

Attribute::Attribute(std::string name) : name_(std::move(name)) {
  if (!is_valid_token(name_)) {
    throw Error("invalid attribute token '" + name_ + "'");
  }
}

Value Value::known(std::string symbol) {
  if (!is_valid_token(symbol) || symbol == kUnknownToken) {
    throw Error("invalid value token '" + symbol + "'");
  }
  Value v;
  v.symbol_ = std::move(symbol);
  return v;
}

const std::string& Value::str() const {
  static const std::string kUnknown{kUnknownToken};
  return symbol_ ? *symbol_ : kUnknown;
}

bool clashes(const Feature& a, const Feature& b) {
  return a.attribute == b.attribute && a.value != b.value;
}

FeatureSet::FeatureSet(std::initializer_list<Feature> features) {
  *this = validate_consistent(std::span<const Feature>(features.begin(), features.size()));
}

void FeatureSet::assign(Attribute attribute, Value value) {
  entries_.insert_or_assign(std::move(attribute), std::move(value));
}

bool FeatureSet::erase(const Attribute& attribute) {
  return entries_.erase(attribute) > 0;
}

std::optional<Value> FeatureSet::value_of(const Attribute& attribute) const {
  auto it = entries_.find(attribute);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

bool FeatureSet::contains(const Feature& f) const {
  auto it = entries_.find(f.attribute);
  return it != entries_.end() && it->second == f.value;
}

bool FeatureSet::contains_attribute(const Attribute& attribute) const {
  return entries_.contains(attribute);
}

FeatureSet validate_consistent(std::span<const Feature> features) {
  FeatureSet out;
  for (const Feature& f : features) {
    if (auto prior = out.value_of(f.attribute); prior && *prior != f.value) {
      throw Error("conflicting values '" + prior->str() + "' and '" +
                  f.value.str() + "' for attribute '" + f.attribute.str() +
                  "'");
    }
    out.assign(f);
  }
  return out;
}

FeatureSet clash(const FeatureSet& a, const FeatureSet& b) {
  FeatureSet out;
  for (const auto& [attribute, value] : a) {
    if (auto other = b.value_of(attribute); other && *other != value) {
      out.assign(attribute, value);
    }
  }
  return out;
}

Value ObjectSpec::value_of(const Attribute& attribute) const {
  if (auto v = explicit_.value_of(attribute)) return *v;
  return Value::unknown();
}

ObjectSpec complete(std::string name, FeatureSet explicit_features,
                    std::set<Attribute> universe) {
  for (const auto& [attribute, value] : explicit_features) {
    if (!universe.contains(attribute)) {
      throw Error("object '" + name + "' lists attribute '" + attribute.str() +
                  "' outside its universe");
    }
  }
  ObjectSpec spec;
  spec.name_ = std::move(name);
  spec.explicit_ = std::move(explicit_features);
  spec.universe_ = std::move(universe);
  for (const auto& [attribute, value] : spec.explicit_) {
    if (value.is_known()) spec.known_.assign(attribute, value);
  }
  return spec;
}

FeatureSet clash(const ObjectSpec& f, const FeatureSet& b) {
  FeatureSet out;
  for (const auto& [attribute, value] : b) {
    Value mine = f.value_of(attribute);
    if (mine != value) out.assign(attribute, mine);
  }
  return out;
}

}  // namespace lexin
