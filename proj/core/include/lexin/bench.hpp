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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lexin/insertion.hpp"

namespace lexin::bench {

/// Parameters of one random instance family. Identical parameters always
/// generate the identical instance.
struct InstanceParams {
  int n_attributes = 30;
  int n_values_per_attribute = 5;
  int n_regular_classes = 10;
  std::pair<int, int> class_size_range = {2, 6};
  int object_known_count = 12;
  double clash_density = 0.25;
  std::uint64_t seed = 1;
};

/// A generated problem: the object and a singleton-augmented compiled set.
struct Instance {
  ObjectSpec object;
  CompiledSet classes;
};

enum class Preset { Uniform, ClashFree, Staircase };

std::string_view to_string(Preset p);

/// Random instance. With clash_density zero, class features are drawn only
/// from the object's known features, so greedy against the instance is a
/// pure covering problem; with positive density each feature on a known
/// attribute flips to a disagreeing value with that probability.
Instance generate_instance(const InstanceParams& p);

/// Adversarial covering family on 2*(2^levels - 1) attributes: two row
/// classes cover everything in two steps, while bait classes of sizes
/// 2^levels, ..., 2 lure greedy into `levels` steps. Clash free by
/// construction. Requires levels >= 2.
Instance generate_staircase(int levels, std::uint64_t seed);

/// Largest level count whose staircase fits in n_attributes; GuardError
/// when even two levels do not fit.
int staircase_levels(int n_attributes);

Instance generate(Preset preset, const InstanceParams& p);

struct RatioRow {
  int instance_id = 0;
  std::uint64_t seed = 0;
  int n_attrs = 0;
  int n_regular = 0;
  int f_known = 0;
  int greedy_cost = 0;
  int pruned_cost = 0;
  std::optional<int> exact_cost;  // empty when the subset guard skipped it
  double ratio = 0.0;             // greedy_cost / exact_cost
  int iterations = 0;
  std::int64_t greedy_micros = 0;
  std::int64_t exact_micros = 0;
  double bound = 0.0;  // ln(max(1, f_known)) + 1
  bool clash_free = false;
  bool violation = false;  // clash-free ratio above the bound
};

struct RatioReport {
  Preset preset = Preset::Uniform;
  int trials = 0;
  int max_regular = 0;
  std::vector<InstanceParams> sweep;
  std::vector<RatioRow> rows;

  // Aggregates over the rows where the exact solver ran.
  int exact_rows = 0;
  double max_ratio = 0.0;
  double mean_ratio = 0.0;
  double bound = 0.0;  // largest per-row bound
  int violations = 0;
};

/// Runs `trials` instances per sweep item, solving each with greedy,
/// pruning, and (within the guard) the exhaustive reference. Every row is
/// reproducible from its recorded seed alone.
RatioReport measure(Preset preset, std::span<const InstanceParams> sweep,
                    int trials, int max_regular = 20);

/// CSV with a comment block of generation parameters, a header line, and
/// one row per instance. The timing columns are the only nondeterministic
/// part of the file.
void write_csv(const RatioReport& report, std::ostream& out);

/// Deterministic one-line digest of a report: counts, worst and mean ratio,
/// bound, violations. Carries no timings.
std::string summary(const RatioReport& report);

}  // namespace lexin::bench
