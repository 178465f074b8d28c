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

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>

#include "lexin/errors.hpp"

namespace lexin {

/// Token reserved for the unknown value in the text syntax.
inline constexpr std::string_view kUnknownToken = "?";

/// A token is a nonempty run of characters with no whitespace and none of
/// the structural characters  =  {  }  :  #
bool is_valid_token(std::string_view s);

class Attribute {
 public:
  explicit Attribute(std::string name);

  const std::string& str() const { return name_; }

  auto operator<=>(const Attribute&) const = default;

 private:
  std::string name_;
};

/// Either a named symbol or the distinguished unknown value. Unknown
/// compares equal to itself and unequal to every known symbol.
class Value {
 public:
  static Value known(std::string symbol);
  static Value unknown() { return Value(); }

  bool is_known() const { return symbol_.has_value(); }
  bool is_unknown() const { return !symbol_.has_value(); }

  /// Token form; yields "?" for the unknown value.
  const std::string& str() const;

  auto operator<=>(const Value&) const = default;

 private:
  Value() = default;
  std::optional<std::string> symbol_;
};

struct Feature {
  Attribute attribute;
  Value value;

  auto operator<=>(const Feature&) const = default;
};

/// True when the features name the same attribute with different values.
bool clashes(const Feature& a, const Feature& b);

/// A consistent set of features: at most one value per attribute. Iteration
/// is in attribute order, so every traversal is deterministic.
class FeatureSet {
 public:
  FeatureSet() = default;
  FeatureSet(std::initializer_list<Feature> features);

  /// Inserts the pair, replacing any previous value for the attribute.
  void assign(Attribute attribute, Value value);
  void assign(const Feature& f) { assign(f.attribute, f.value); }

  bool erase(const Attribute& attribute);

  std::optional<Value> value_of(const Attribute& attribute) const;
  bool contains(const Feature& f) const;
  bool contains_attribute(const Attribute& attribute) const;

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  bool operator==(const FeatureSet&) const = default;

 private:
  std::map<Attribute, Value> entries_;
};

/// Builds a FeatureSet from a flat list. Exact duplicates collapse; two
/// different values for one attribute raise Error.
FeatureSet validate_consistent(std::span<const Feature> features);

/// The subset of `a` whose attribute appears in `b` with a different value.
/// Asymmetric: the returned features are entries of `a`.
FeatureSet clash(const FeatureSet& a, const FeatureSet& b);

/// An object to be inserted: a name, the explicitly listed features, and
/// the attribute universe over which the object is complete. Attributes of
/// the universe that are not listed explicitly hold the unknown value; they
/// are never materialized.
class ObjectSpec {
 public:
  ObjectSpec() = default;

  const std::string& name() const { return name_; }
  const FeatureSet& explicit_features() const { return explicit_; }
  const std::set<Attribute>& universe() const { return universe_; }

  /// Value in the completed feature set: the explicit value when listed,
  /// unknown otherwise (including attributes outside the universe).
  Value value_of(const Attribute& attribute) const;

  /// The explicit features whose value is known.
  const FeatureSet& known_features() const { return known_; }

 private:
  friend ObjectSpec complete(std::string name, FeatureSet explicit_features,
                             std::set<Attribute> universe);

  std::string name_;
  FeatureSet explicit_;
  std::set<Attribute> universe_;
  FeatureSet known_;
};

/// Completes an object over a universe. Every explicitly listed attribute
/// must belong to the universe.
ObjectSpec complete(std::string name, FeatureSet explicit_features,
                    std::set<Attribute> universe);

/// Clash against the completed feature set of an object: attributes the
/// object does not list count as unknown, so every known value stored in
/// `b` under such an attribute clashes.
FeatureSet clash(const ObjectSpec& f, const FeatureSet& b);

}  // namespace lexin
