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

#include <boost/rational.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexin/feature.hpp"

namespace lexin {

/// Exact rational weight. Compile-out adds a fixed rational step per
/// traversed link, so weights stay exact and comparisons are total.
using Weight = boost::rational<std::int64_t>;

/// "7" when integral, "7/2" otherwise.
std::string to_string(const Weight& w);

/// One class as declared: a name, parent names in declaration order, and
/// the locally declared features. Local features must be known; only
/// objects may pin an attribute to unknown.
struct ClassDecl {
  std::string name;
  std::vector<std::string> parents;
  FeatureSet local;
};

/// A declaration-ordered collection of classes. Structural problems
/// (unresolved parents, cycles, ambiguity) are the business of validate();
/// add() only rejects what can never become well-formed.
class Hierarchy {
 public:
  void add(ClassDecl decl);

  const std::vector<ClassDecl>& classes() const { return classes_; }
  const ClassDecl* find(std::string_view name) const;
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// Every attribute mentioned by any class.
  std::set<Attribute> attributes() const;

 private:
  std::vector<ClassDecl> classes_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

struct ValidationReport {
  struct Cycle {
    std::vector<std::string> members;  // declaration order
  };
  struct UnresolvedParent {
    std::string class_name;
    std::string parent;
  };
  struct Ambiguity {
    std::string class_name;
    Attribute attribute;
    std::vector<std::pair<std::string, Value>> offers;  // parent, its value
  };

  std::vector<Cycle> cycles;
  std::vector<UnresolvedParent> unresolved;
  std::vector<Ambiguity> ambiguities;

  bool empty() const {
    return cycles.empty() && unresolved.empty() && ambiguities.empty();
  }

  /// One deterministic line per finding, for diagnostics output.
  std::vector<std::string> lines() const;
};

class ValidationError : public Error {
 public:
  explicit ValidationError(ValidationReport report);
  const ValidationReport& report() const { return report_; }

 private:
  ValidationReport report_;
};

/// Checks parent resolution, acyclicity, and inheritance ambiguity: a class
/// is ambiguous at an attribute when it does not declare the attribute
/// locally and two of its compiled parents offer different values for it.
ValidationReport validate(const Hierarchy& h);

enum class Origin { Regular, Singleton };

/// A class with inheritance compiled away: the features it grants an
/// object that lists it as a parent. In weighted mode each feature carries
/// the weight 1 + epsilon * (links from the declaring class).
struct CompiledClass {
  std::string name;
  FeatureSet features;
  std::optional<std::map<Attribute, Weight>> weights;
  Origin origin = Origin::Regular;

  bool operator==(const CompiledClass&) const = default;
};

/// Regular classes first, in declaration order, then singleton classes in
/// attribute order.
struct CompiledSet {
  std::vector<CompiledClass> classes;
  bool weighted = false;

  const CompiledClass* find(std::string_view name) const;
  std::size_t regular_count() const;

  bool operator==(const CompiledSet&) const = default;
};

/// Pushes inherited features down into every class. Local declarations
/// override; an inherited attribute offered by several parents takes the
/// first parent's value in declaration order (validate() has already
/// guaranteed the parents agree). Throws ValidationError on an invalid
/// hierarchy.
CompiledSet compile_out(const Hierarchy& h);

/// Longest chain of inheritance links. Precondition: h validates cleanly.
int max_depth(const Hierarchy& h);

/// 1 / (16 * (1 + max_depth(h))): small enough that accumulated steps never
/// reorder whole-feature counts, so weights only break exact ties.
Weight default_epsilon(const Hierarchy& h);

/// Weighted variant of compile_out. Requires 0 < epsilon and
/// epsilon * max_depth(h) < 1; otherwise throws GuardError.
CompiledSet compile_out_weighted(const Hierarchy& h, Weight epsilon);

/// "$single(attr)": the name of the synthetic class that grants exactly one
/// feature. '$' cannot appear in a declared class name's first position in
/// any hierarchy produced by the text reader, so these never collide.
std::string singleton_name(const Attribute& attribute);

/// Appends one singleton class per known feature of `f` that the set does
/// not already provide as a singleton, then restores the ordering
/// invariant: regulars first in declaration order, singletons after them
/// in attribute order. In weighted mode singleton features weigh 1.
CompiledSet augment_singletons(CompiledSet n, const ObjectSpec& f);

}  // namespace lexin
