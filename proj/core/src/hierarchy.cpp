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

#include "lexin/hierarchy.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace lexin {

std::string to_string(const Weight& w) {
  std::string out = std::to_string(w.numerator());
  if (w.denominator() != 1) {
    out += "/";
    out += std::to_string(w.denominator());
  }
  return out;
}

void Hierarchy::add(ClassDecl decl) {
  if (!is_valid_token(decl.name)) {
    throw Error("invalid class name '" + decl.name + "'");
  }
  if (index_.contains(decl.name)) {
    throw Error("duplicate class '" + decl.name + "'");
  }
  for (const auto& [attribute, value] : decl.local) {
    if (value.is_unknown()) {
      throw Error("class '" + decl.name + "' assigns the unknown value to '" +
                  attribute.str() + "'; only objects may pin unknowns");
    }
  }
  index_.emplace(decl.name, classes_.size());
  classes_.push_back(std::move(decl));
}

const ClassDecl* Hierarchy::find(std::string_view name) const {
  auto it = index_.find(name);
  return it == index_.end() ? nullptr : &classes_[it->second];
}

std::optional<std::size_t> Hierarchy::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::set<Attribute> Hierarchy::attributes() const {
  std::set<Attribute> out;
  for (const ClassDecl& decl : classes_) {
    for (const auto& [attribute, value] : decl.local) out.insert(attribute);
  }
  return out;
}

std::vector<std::string> ValidationReport::lines() const {
  std::vector<std::string> out;
  for (const Cycle& c : cycles) {
    std::string line = "inheritance cycle:";
    for (const std::string& m : c.members) line += " " + m;
    out.push_back(std::move(line));
  }
  for (const UnresolvedParent& u : unresolved) {
    out.push_back("unknown parent '" + u.parent + "' of class '" +
                  u.class_name + "'");
  }
  for (const Ambiguity& a : ambiguities) {
    std::string line = "ambiguous inheritance in class '" + a.class_name +
                       "' at attribute '" + a.attribute.str() + "':";
    bool first = true;
    for (const auto& [parent, value] : a.offers) {
      line += first ? " " : ", ";
      line += parent + " = " + value.str();
      first = false;
    }
    out.push_back(std::move(line));
  }
  return out;
}

namespace {

std::string join_lines(const ValidationReport& report) {
  std::string out = "invalid hierarchy";
  for (const std::string& line : report.lines()) {
    out += "\n  ";
    out += line;
  }
  return out;
}

struct Analysis {
  ValidationReport report;
  std::vector<FeatureSet> features;
  std::vector<std::map<Attribute, Weight>> weights;
};

// Resolves parents, finds strongly connected components, guards the
// weighting step against the longest chain, then compiles features top
// down. Classes on a cycle or below an unresolved parent stay uncompiled;
// everything else is still analyzed so one pass reports all findings.
Analysis analyze(const Hierarchy& h, const std::optional<Weight>& epsilon) {
  const auto& classes = h.classes();
  const std::size_t n = classes.size();

  Analysis a;
  a.features.resize(n);
  a.weights.resize(n);

  std::vector<std::vector<std::size_t>> parents(n);
  std::vector<char> missing_parent(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (const std::string& p : classes[i].parents) {
      if (auto idx = h.index_of(p)) {
        parents[i].push_back(*idx);
      } else {
        a.report.unresolved.push_back({classes[i].name, p});
        missing_parent[i] = 1;
      }
    }
  }

  // Tarjan over the parent edges. A component is a cycle when it has more
  // than one member or a self-edge.
  std::vector<int> order(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0), in_cycle(n, 0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> cycles;
  int counter = 0;
  auto strongconnect = [&](auto&& self, std::size_t v) -> void {
    order[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (std::size_t w : parents[v]) {
      if (order[w] < 0) {
        self(self, w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], order[w]);
      }
    }
    if (low[v] == order[v]) {
      std::vector<std::size_t> scc;
      for (;;) {
        std::size_t w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        scc.push_back(w);
        if (w == v) break;
      }
      bool self_loop = scc.size() == 1 && std::ranges::count(parents[scc[0]], scc[0]) > 0;
      if (scc.size() > 1 || self_loop) {
        std::ranges::sort(scc);
        for (std::size_t w : scc) in_cycle[w] = 1;
        cycles.push_back(std::move(scc));
      }
    }
  };
  for (std::size_t v = 0; v < n; ++v) {
    if (order[v] < 0) strongconnect(strongconnect, v);
  }
  std::ranges::sort(cycles);
  for (const auto& scc : cycles) {
    ValidationReport::Cycle c;
    for (std::size_t w : scc) c.members.push_back(classes[w].name);
    a.report.cycles.push_back(std::move(c));
  }

  if (epsilon && a.report.empty()) {
    std::vector<int> depth(n, -1);
    auto chain = [&](auto&& self, std::size_t v) -> int {
      if (depth[v] >= 0) return depth[v];
      int d = 0;
      for (std::size_t w : parents[v]) d = std::max(d, 1 + self(self, w));
      return depth[v] = d;
    };
    int longest = 0;
    for (std::size_t v = 0; v < n; ++v) longest = std::max(longest, chain(chain, v));
    if (*epsilon * longest >= Weight(1)) {
      throw GuardError("weighting step " + to_string(*epsilon) +
                       " is too large: step * " + std::to_string(longest) +
                       " (the longest inheritance chain) must stay below 1");
    }
  }

  // Compile away inheritance. The first parent in declaration order wins an
  // inherited attribute; disagreement among parents on a non-local
  // attribute is recorded as an ambiguity, grouped per class below.
  std::vector<std::vector<ValidationReport::Ambiguity>> per_class(n);
  std::vector<char> state(n, 0);  // 0 new, 1 compiled, 2 uncompilable
  auto compile_one = [&](auto&& self, std::size_t v) -> bool {
    if (state[v] != 0) return state[v] == 1;
    if (in_cycle[v] || missing_parent[v]) {
      state[v] = 2;
      return false;
    }
    bool ok = true;
    for (std::size_t w : parents[v]) ok = self(self, w) && ok;
    if (!ok) {
      state[v] = 2;
      return false;
    }
    FeatureSet fs = classes[v].local;
    std::map<Attribute, Weight> wt;
    if (epsilon) {
      for (const auto& [attribute, value] : classes[v].local) {
        wt.emplace(attribute, Weight(1));
      }
    }
    std::map<Attribute, std::vector<std::pair<std::size_t, Value>>> offers;
    for (std::size_t w : parents[v]) {
      for (const auto& [attribute, value] : a.features[w]) {
        if (!classes[v].local.contains_attribute(attribute)) {
          offers[attribute].emplace_back(w, value);
        }
      }
    }
    for (const auto& [attribute, offered] : offers) {
      bool disagree = std::ranges::any_of(offered, [&](const auto& o) {
        return o.second != offered.front().second;
      });
      if (disagree) {
        ValidationReport::Ambiguity amb{classes[v].name, attribute, {}};
        for (const auto& [w, value] : offered) {
          amb.offers.emplace_back(classes[w].name, value);
        }
        per_class[v].push_back(std::move(amb));
      }
      fs.assign(attribute, offered.front().second);
      if (epsilon) {
        wt.emplace(attribute,
                   a.weights[offered.front().first].at(attribute) + *epsilon);
      }
    }
    a.features[v] = std::move(fs);
    a.weights[v] = std::move(wt);
    state[v] = 1;
    return true;
  };
  for (std::size_t v = 0; v < n; ++v) compile_one(compile_one, v);
  for (std::size_t v = 0; v < n; ++v) {
    for (auto& amb : per_class[v]) a.report.ambiguities.push_back(std::move(amb));
  }
  return a;
}

CompiledSet build_set(const Hierarchy& h, Analysis a, bool weighted) {
  if (!a.report.empty()) throw ValidationError(std::move(a.report));
  CompiledSet out;
  out.weighted = weighted;
  const auto& classes = h.classes();
  out.classes.reserve(classes.size());
  for (std::size_t i = 0; i < classes.size(); ++i) {
    CompiledClass c;
    c.name = classes[i].name;
    c.features = std::move(a.features[i]);
    if (weighted) c.weights = std::move(a.weights[i]);
    out.classes.push_back(std::move(c));
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(ValidationReport report)
    : Error(join_lines(report)), report_(std::move(report)) {}

ValidationReport validate(const Hierarchy& h) {
  return analyze(h, std::nullopt).report;
}

const CompiledClass* CompiledSet::find(std::string_view name) const {
  for (const CompiledClass& c : classes) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::size_t CompiledSet::regular_count() const {
  return static_cast<std::size_t>(std::ranges::count_if(
      classes, [](const CompiledClass& c) { return c.origin == Origin::Regular; }));
}

CompiledSet compile_out(const Hierarchy& h) {
  return build_set(h, analyze(h, std::nullopt), /*weighted=*/false);
}

int max_depth(const Hierarchy& h) {
  const auto& classes = h.classes();
  const std::size_t n = classes.size();
  std::vector<int> depth(n, -1);
  std::vector<char> visiting(n, 0);
  auto chain = [&](auto&& self, std::size_t v) -> int {
    if (depth[v] >= 0) return depth[v];
    if (visiting[v]) throw Error("max_depth requires an acyclic hierarchy");
    visiting[v] = 1;
    int d = 0;
    for (const std::string& p : classes[v].parents) {
      if (auto idx = h.index_of(p)) d = std::max(d, 1 + self(self, *idx));
    }
    visiting[v] = 0;
    return depth[v] = d;
  };
  int longest = 0;
  for (std::size_t v = 0; v < n; ++v) longest = std::max(longest, chain(chain, v));
  return longest;
}

Weight default_epsilon(const Hierarchy& h) {
  return Weight(1, 16 * (1 + static_cast<std::int64_t>(max_depth(h))));
}

CompiledSet compile_out_weighted(const Hierarchy& h, Weight epsilon) {
  if (epsilon <= Weight(0)) {
    throw GuardError("weighting step must be positive, got " + to_string(epsilon));
  }
  return build_set(h, analyze(h, epsilon), /*weighted=*/true);
}

std::string singleton_name(const Attribute& attribute) {
  return "$single(" + attribute.str() + ")";
}

CompiledSet augment_singletons(CompiledSet n, const ObjectSpec& f) {
  std::vector<CompiledClass> regulars, singles;
  for (CompiledClass& c : n.classes) {
    (c.origin == Origin::Regular ? regulars : singles).push_back(std::move(c));
  }
  for (const auto& [attribute, value] : f.known_features()) {
    std::string name = singleton_name(attribute);
    bool present = std::ranges::any_of(
        singles, [&](const CompiledClass& s) { return s.name == name; });
    if (present) continue;
    CompiledClass s;
    s.name = std::move(name);
    s.features.assign(attribute, value);
    if (n.weighted) s.weights = std::map<Attribute, Weight>{{attribute, Weight(1)}};
    s.origin = Origin::Singleton;
    singles.push_back(std::move(s));
  }
  std::ranges::sort(singles, [](const CompiledClass& x, const CompiledClass& y) {
    return x.features.begin()->first < y.features.begin()->first;
  });
  n.classes = std::move(regulars);
  n.classes.insert(n.classes.end(), std::make_move_iterator(singles.begin()),
                   std::make_move_iterator(singles.end()));
  return n;
}

}  // namespace lexin
