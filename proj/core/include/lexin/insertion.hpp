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

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "lexin/hierarchy.hpp"

namespace lexin {

/// Selection scores are exact rationals so that weighted and unweighted
/// scoring share one comparison path.
using Payoff = boost::rational<std::int64_t>;

/// The union of several classes' feature sets. Unlike FeatureSet it may
/// hold several values per attribute; an object clashes with the union at
/// an attribute as soon as any stored value differs from the object's.
class FeatureUnion {
 public:
  void add(const FeatureSet& s);
  bool contains(const Feature& f) const;
  const std::map<Attribute, std::set<Value>>& entries() const {
    return entries_;
  }

 private:
  std::map<Attribute, std::set<Value>> entries_;
};

/// Subset of the object's completed features whose attribute carries a
/// disagreeing value somewhere in the union.
FeatureSet clash(const ObjectSpec& f, const FeatureUnion& u);

/// One greedy iteration, kept for explanation output.
struct IterationRecord {
  std::string chosen;
  Payoff payoff{0};
  FeatureSet covered_now;
  FeatureSet new_clashes;
  std::vector<std::pair<std::string, Payoff>> runners_up;  // at most five

  bool operator==(const IterationRecord&) const = default;
};

/// Where an object ends up: its parents in selection order plus the local
/// features that block inherited disagreements. cost is always
/// parents.size() + local.size(); the local set always equals the clash of
/// the object against the union of its parents.
struct InsertionResult {
  std::string object;
  std::vector<std::string> parents;
  FeatureSet local;
  int cost = 0;
  std::vector<IterationRecord> trace;

  bool operator==(const InsertionResult&) const = default;
};

/// parents.size() + |clash(f, union of the named classes)|. Blockers that
/// pin an attribute to unknown count like any other local feature.
int cost(const CompiledSet& n, std::span<const std::string> parent_names,
         const ObjectSpec& f);

/// Selection score of one candidate class: covered value minus the number
/// of clashes it would newly introduce. Coverage counts features of `s`
/// that are still in `uncovered`; in weighted mode their weights are summed
/// instead. A clash on an attribute in `blocked` costs nothing again.
Payoff payoff(const CompiledClass& s, const ObjectSpec& f,
              const FeatureSet& uncovered, const FeatureSet& blocked);

/// Greedy insertion. Repeatedly picks the candidate with the best payoff
/// until every known feature of the object is covered or blocked. Ties
/// break by larger coverage, then fewer new clashes, then regular classes
/// before singletons, then position in the compiled set. Requires a
/// singleton-augmented set; if an iteration cannot make progress, an Error
/// reports the missing augmentation.
InsertionResult greedy_insert(const ObjectSpec& f, const CompiledSet& n);

/// Exhaustive reference search over all subsets of the regular classes,
/// with singleton classes added afterwards for the known features a subset
/// leaves uncovered and unclashed. Minimizes cost, then the number of
/// parents, then the lexicographic parent-name list. Subsets are pruned
/// only when already provably worse than the incumbent, which never
/// changes the returned optimum. Throws GuardError when more than
/// max_regular regular classes are present.
InsertionResult exact_insert(const ObjectSpec& f, const CompiledSet& n,
                             int max_regular = 20);

/// Drops parents that have become redundant: a parent is removed when the
/// result stays complete and the cost does not rise. Scans in selection
/// order and restarts after every removal, so the result is a fixed point:
/// pruning twice changes nothing.
InsertionResult prune_redundant(const InsertionResult& r, const ObjectSpec& f,
                                const CompiledSet& n);

/// The features the object actually exhibits at its resting place: local
/// features win, then the parents' unanimous offers, everything else is
/// unknown. Two parents offering different values for an attribute with no
/// local blocker raise NixonDiamondError; results produced by this library
/// always block such attributes, so the error only flags hand-edited
/// entries.
FeatureSet effective_features(const InsertionResult& r, const ObjectSpec& f,
                              const CompiledSet& n);

}  // namespace lexin
