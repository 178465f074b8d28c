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

#include "lexin/insertion.hpp"

#include <algorithm>
#include <climits>
#include <utility>

namespace lexin {

void FeatureUnion::add(const FeatureSet& s) {
  for (const auto& [attribute, value] : s) entries_[attribute].insert(value);
}

bool FeatureUnion::contains(const Feature& f) const {
  auto it = entries_.find(f.attribute);
  return it != entries_.end() && it->second.contains(f.value);
}

FeatureSet clash(const ObjectSpec& f, const FeatureUnion& u) {
  FeatureSet out;
  for (const auto& [attribute, values] : u.entries()) {
    Value mine = f.value_of(attribute);
    for (const Value& v : values) {
      if (v != mine) {
        out.assign(attribute, mine);
        break;
      }
    }
  }
  return out;
}

int cost(const CompiledSet& n, std::span<const std::string> parent_names,
         const ObjectSpec& f) {
  FeatureUnion u;
  for (const std::string& name : parent_names) {
    const CompiledClass* c = n.find(name);
    if (!c) throw Error("unknown class '" + name + "'");
    u.add(c->features);
  }
  return static_cast<int>(parent_names.size() + clash(f, u).size());
}

namespace {

struct Score {
  Payoff payoff{0};
  std::size_t covered = 0;
  std::size_t new_clashes = 0;
};

Score score_class(const CompiledClass& s, const ObjectSpec& f,
                  const FeatureSet& uncovered, const FeatureSet& blocked,
                  bool weighted) {
  Score sc;
  Payoff value{0};
  for (const auto& [attribute, v] : s.features) {
    if (uncovered.contains({attribute, v})) {
      ++sc.covered;
      value += weighted ? s.weights->at(attribute) : Payoff(1);
    } else if (f.value_of(attribute) != v && !blocked.contains_attribute(attribute)) {
      ++sc.new_clashes;
    }
  }
  sc.payoff = value - Payoff(static_cast<std::int64_t>(sc.new_clashes));
  return sc;
}

}  // namespace

Payoff payoff(const CompiledClass& s, const ObjectSpec& f,
              const FeatureSet& uncovered, const FeatureSet& blocked) {
  return score_class(s, f, uncovered, blocked, s.weights.has_value()).payoff;
}

InsertionResult greedy_insert(const ObjectSpec& f, const CompiledSet& n) {
  InsertionResult result;
  result.object = f.name();

  FeatureSet uncovered = f.known_features();
  FeatureSet blocked;

  while (!uncovered.empty()) {
    struct Key {
      Score sc;
      Origin origin;
      std::size_t index;
    };
    std::vector<Key> keys;
    keys.reserve(n.classes.size());
    for (std::size_t i = 0; i < n.classes.size(); ++i) {
      keys.push_back(
          {score_class(n.classes[i], f, uncovered, blocked, n.weighted),
           n.classes[i].origin, i});
    }
    if (keys.empty()) {
      throw Error("cannot insert '" + f.name() +
                  "': the compiled set is empty; augment it with singletons");
    }
    auto better = [](const Key& x, const Key& y) {
      if (x.sc.payoff != y.sc.payoff) return x.sc.payoff > y.sc.payoff;
      if (x.sc.covered != y.sc.covered) return x.sc.covered > y.sc.covered;
      if (x.sc.new_clashes != y.sc.new_clashes) {
        return x.sc.new_clashes < y.sc.new_clashes;
      }
      if (x.origin != y.origin) return x.origin == Origin::Regular;
      return x.index < y.index;
    };
    std::size_t top = std::min<std::size_t>(keys.size(), 6);
    std::partial_sort(keys.begin(), keys.begin() + static_cast<std::ptrdiff_t>(top),
                      keys.end(), better);
    const Key& winner = keys.front();
    const CompiledClass& chosen = n.classes[winner.index];

    IterationRecord rec;
    rec.chosen = chosen.name;
    rec.payoff = winner.sc.payoff;
    for (std::size_t k = 1; k < top; ++k) {
      rec.runners_up.emplace_back(n.classes[keys[k].index].name, keys[k].sc.payoff);
    }

    std::size_t before = uncovered.size();
    for (const auto& [attribute, v] : chosen.features) {
      if (uncovered.contains({attribute, v})) rec.covered_now.assign(attribute, v);
    }
    FeatureSet clash_set = clash(f, chosen.features);
    for (const auto& [attribute, v] : rec.covered_now) uncovered.erase(attribute);
    for (const auto& [attribute, v] : clash_set) {
      if (!blocked.contains_attribute(attribute)) rec.new_clashes.assign(attribute, v);
      blocked.assign(attribute, v);
      uncovered.erase(attribute);
    }
    if (uncovered.size() == before) {
      throw Error("no progress inserting '" + f.name() + "': class '" +
                  chosen.name +
                  "' neither covers nor clashes anything new; was the "
                  "compiled set augmented with singletons?");
    }

    result.parents.push_back(chosen.name);
    result.trace.push_back(std::move(rec));
  }

  result.local = blocked;
  result.cost = static_cast<int>(result.parents.size() + result.local.size());
  return result;
}

InsertionResult exact_insert(const ObjectSpec& f, const CompiledSet& n,
                             int max_regular) {
  std::vector<const CompiledClass*> regulars;
  for (const CompiledClass& c : n.classes) {
    if (c.origin == Origin::Regular) regulars.push_back(&c);
  }
  const std::size_t r = regulars.size();
  if (max_regular < 0) max_regular = 0;
  if (r > static_cast<std::size_t>(max_regular)) {
    throw GuardError("exhaustive search over " + std::to_string(r) +
                     " regular classes exceeds the limit of " +
                     std::to_string(max_regular));
  }

  const FeatureSet& known = f.known_features();
  const int k = static_cast<int>(known.size());

  // Incremental tallies per attribute across the chosen classes: features
  // matching the object's value and features differing from it. A known
  // attribute is satisfied once covered or clashed; the rest of the cost is
  // one closure singleton per unsatisfied known attribute.
  struct Tally {
    int match = 0;
    int differ = 0;
  };
  std::map<Attribute, Tally> tallies;
  int n_clash = 0;
  int n_satisfied = 0;

  auto apply = [&](const CompiledClass& c, int delta) {
    for (const auto& [attribute, v] : c.features) {
      Tally& t = tallies[attribute];
      bool known_attr = known.contains_attribute(attribute);
      bool was_clashed = t.differ > 0;
      bool was_satisfied = known_attr && (t.match > 0 || t.differ > 0);
      if (f.value_of(attribute) == v) {
        t.match += delta;
      } else {
        t.differ += delta;
      }
      n_clash += int(t.differ > 0) - int(was_clashed);
      n_satisfied +=
          int(known_attr && (t.match > 0 || t.differ > 0)) - int(was_satisfied);
    }
  };

  int best_cost = INT_MAX;
  std::size_t best_parent_count = 0;
  std::vector<std::string> best_names;
  std::vector<char> best_mask;
  std::vector<char> chosen(r, 0);
  int chosen_count = 0;

  auto leaf = [&]() {
    int c = chosen_count + n_clash + (k - n_satisfied);
    if (c > best_cost) return;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < r; ++i) {
      if (chosen[i]) names.push_back(regulars[i]->name);
    }
    for (const auto& [attribute, v] : known) {
      auto it = tallies.find(attribute);
      bool satisfied =
          it != tallies.end() && (it->second.match > 0 || it->second.differ > 0);
      if (!satisfied) names.push_back(singleton_name(attribute));
    }
    if (c < best_cost ||
        (c == best_cost &&
         (names.size() < best_parent_count ||
          (names.size() == best_parent_count && names < best_names)))) {
      best_cost = c;
      best_parent_count = names.size();
      best_names = std::move(names);
      best_mask = chosen;
    }
  };

  // Depth-first over subsets. chosen_count + n_clash only grows along a
  // branch, so cutting when it already exceeds the incumbent cost discards
  // provably worse subtrees and nothing else; ties survive for the
  // tie-break comparison in leaf().
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (chosen_count + n_clash > best_cost) return;
    if (i == r) {
      leaf();
      return;
    }
    self(self, i + 1);
    apply(*regulars[i], +1);
    chosen[i] = 1;
    ++chosen_count;
    self(self, i + 1);
    chosen[i] = 0;
    --chosen_count;
    apply(*regulars[i], -1);
  };
  dfs(dfs, 0);

  InsertionResult result;
  result.object = f.name();
  result.parents = std::move(best_names);
  FeatureUnion u;
  for (std::size_t i = 0; i < r; ++i) {
    if (best_mask.empty() || !best_mask[i]) continue;
    u.add(regulars[i]->features);
  }
  result.local = clash(f, u);
  result.cost = best_cost;
  return result;
}

namespace {

FeatureSet clash_with_all(const ObjectSpec& f,
                          const std::vector<const CompiledClass*>& parents) {
  FeatureUnion u;
  for (const CompiledClass* p : parents) u.add(p->features);
  return clash(f, u);
}

bool complete_with(const ObjectSpec& f,
                   const std::vector<const CompiledClass*>& parents,
                   const FeatureSet& local) {
  for (const auto& [attribute, value] : f.known_features()) {
    if (local.contains_attribute(attribute)) continue;
    bool covered = std::ranges::any_of(parents, [&](const CompiledClass* p) {
      return p->features.contains({attribute, value});
    });
    if (!covered) return false;
  }
  return true;
}

}  // namespace

InsertionResult prune_redundant(const InsertionResult& r, const ObjectSpec& f,
                                const CompiledSet& n) {
  std::vector<const CompiledClass*> parents;
  parents.reserve(r.parents.size());
  for (const std::string& name : r.parents) {
    const CompiledClass* c = n.find(name);
    if (!c) {
      throw Error("unknown class '" + name + "' in the entry for '" +
                  r.object + "'");
    }
    parents.push_back(c);
  }

  FeatureSet local = clash_with_all(f, parents);
  int current_cost = static_cast<int>(parents.size() + local.size());

  bool removed = true;
  while (removed) {
    removed = false;
    for (std::size_t i = 0; i < parents.size(); ++i) {
      std::vector<const CompiledClass*> candidate = parents;
      candidate.erase(candidate.begin() + static_cast<std::ptrdiff_t>(i));
      FeatureSet candidate_local = clash_with_all(f, candidate);
      int c = static_cast<int>(candidate.size() + candidate_local.size());
      if (c <= current_cost && complete_with(f, candidate, candidate_local)) {
        parents = std::move(candidate);
        local = std::move(candidate_local);
        current_cost = c;
        removed = true;
        break;
      }
    }
  }

  InsertionResult out;
  out.object = r.object;
  out.parents.reserve(parents.size());
  for (const CompiledClass* p : parents) out.parents.push_back(p->name);
  out.local = std::move(local);
  out.cost = current_cost;
  out.trace = r.trace;
  return out;
}

FeatureSet effective_features(const InsertionResult& r, const ObjectSpec& f,
                              const CompiledSet& n) {
  std::map<Attribute, std::map<Value, std::vector<std::string>>> offers;
  for (const std::string& name : r.parents) {
    const CompiledClass* c = n.find(name);
    if (!c) {
      throw Error("unknown class '" + name + "' in the entry for '" +
                  r.object + "'");
    }
    for (const auto& [attribute, v] : c->features) {
      offers[attribute][v].push_back(name);
    }
  }

  FeatureSet out = r.local;
  for (const auto& [attribute, by_value] : offers) {
    if (r.local.contains_attribute(attribute)) continue;
    if (by_value.size() > 1) {
      std::vector<std::string> values;
      std::vector<std::string> culprits;
      for (const auto& [v, names] : by_value) {
        values.push_back(v.str());
        culprits.insert(culprits.end(), names.begin(), names.end());
      }
      throw NixonDiamondError(attribute.str(), std::move(values),
                              std::move(culprits));
    }
    out.assign(attribute, by_value.begin()->first);
  }
  return out;
}

}  // namespace lexin
