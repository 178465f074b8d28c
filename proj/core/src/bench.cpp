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

#include "lexin/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <random>
#include <utility>

namespace lexin::bench {

namespace {

// All randomness flows through mt19937_64 with modulo draws; the standard
// pins that engine's output, so instances are identical across platforms.
std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t pick(std::mt19937_64& g, std::uint64_t n) { return g() % n; }

double unit(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;
}

int digits(int n) {
  int d = 1;
  while (n >= 10) {
    n /= 10;
    ++d;
  }
  return d;
}

std::string numbered(char prefix, int index, int width) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%c%0*d", prefix, width, index);
  return buf;
}

// First k entries of a partial Fisher-Yates shuffle, in selection order.
std::vector<int> sample_distinct(std::mt19937_64& g, int k, std::vector<int> pool) {
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(pick(g, pool.size() - static_cast<std::size_t>(i)));
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
  }
  pool.resize(static_cast<std::size_t>(k));
  return pool;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

std::string fmtg(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void check_params(const InstanceParams& p) {
  auto guard = [](bool ok, const char* message) {
    if (!ok) throw GuardError(message);
  };
  guard(p.n_attributes >= 1, "n_attributes must be at least 1");
  guard(p.n_values_per_attribute >= 1, "n_values_per_attribute must be at least 1");
  guard(p.n_regular_classes >= 0, "n_regular_classes must not be negative");
  guard(p.class_size_range.first >= 0 &&
            p.class_size_range.first <= p.class_size_range.second,
        "class_size_range must satisfy 0 <= min <= max");
  guard(p.class_size_range.second <= p.n_attributes,
        "class sizes cannot exceed n_attributes");
  guard(p.object_known_count >= 0 && p.object_known_count <= p.n_attributes,
        "object_known_count must lie in [0, n_attributes]");
  guard(p.clash_density >= 0.0 && p.clash_density <= 1.0,
        "clash_density must lie in [0, 1]");
  guard(p.clash_density > 0.0 || p.n_regular_classes == 0 ||
            p.class_size_range.second <= p.object_known_count,
        "with clash_density 0 class features are drawn from the object's "
        "known attributes, so class sizes cannot exceed object_known_count");
}

}  // namespace

std::string_view to_string(Preset p) {
  switch (p) {
    case Preset::Uniform:
      return "uniform";
    case Preset::ClashFree:
      return "clashfree";
    case Preset::Staircase:
      return "staircase";
  }
  return "unknown";
}

Instance generate_instance(const InstanceParams& p) {
  check_params(p);
  std::mt19937_64 g(p.seed);

  const int attr_width = digits(p.n_attributes);
  auto attr_name = [&](int idx) { return numbered('a', idx + 1, attr_width); };
  auto value_name = [](int idx) { return "v" + std::to_string(idx + 1); };

  std::vector<int> all_attrs(static_cast<std::size_t>(p.n_attributes));
  std::iota(all_attrs.begin(), all_attrs.end(), 0);

  // Object first: its values steer clash-free class generation.
  std::vector<int> object_attrs = sample_distinct(g, p.object_known_count, all_attrs);
  std::vector<int> object_value(static_cast<std::size_t>(p.n_attributes), -1);
  FeatureSet explicit_features;
  for (int idx : object_attrs) {
    int v = static_cast<int>(pick(g, static_cast<std::uint64_t>(p.n_values_per_attribute)));
    object_value[static_cast<std::size_t>(idx)] = v;
    explicit_features.assign(Attribute(attr_name(idx)), Value::known(value_name(v)));
  }

  std::vector<int> object_pool = object_attrs;
  std::ranges::sort(object_pool);

  const int class_width = digits(std::max(1, p.n_regular_classes));
  CompiledSet set;
  std::set<Attribute> universe;
  for (int c = 0; c < p.n_regular_classes; ++c) {
    int size = p.class_size_range.first +
               static_cast<int>(pick(g, static_cast<std::uint64_t>(
                                            p.class_size_range.second -
                                            p.class_size_range.first + 1)));
    const std::vector<int>& pool = p.clash_density == 0.0 ? object_pool : all_attrs;
    std::vector<int> members = sample_distinct(g, size, pool);
    CompiledClass cls;
    cls.name = numbered('C', c + 1, class_width);
    for (int idx : members) {
      int value;
      if (int ov = object_value[static_cast<std::size_t>(idx)]; ov >= 0) {
        bool flip = p.clash_density > 0.0 && p.n_values_per_attribute >= 2 &&
                    unit(g) < p.clash_density;
        if (flip) {
          int v = static_cast<int>(pick(g, static_cast<std::uint64_t>(
                                               p.n_values_per_attribute - 1)));
          value = v < ov ? v : v + 1;
        } else {
          value = ov;
        }
      } else {
        value = static_cast<int>(
            pick(g, static_cast<std::uint64_t>(p.n_values_per_attribute)));
      }
      Attribute a(attr_name(idx));
      universe.insert(a);
      cls.features.assign(std::move(a), Value::known(value_name(value)));
    }
    set.classes.push_back(std::move(cls));
  }

  for (int idx : object_attrs) universe.insert(Attribute(attr_name(idx)));

  Instance inst;
  inst.object = complete("obj", std::move(explicit_features), std::move(universe));
  inst.classes = augment_singletons(std::move(set), inst.object);
  return inst;
}

Instance generate_staircase(int levels, std::uint64_t seed) {
  (void)seed;  // the family is fully determined by its level count
  if (levels < 2) throw GuardError("a staircase needs at least 2 levels");
  if (levels > 20) throw GuardError("staircase level count is capped at 20");

  const int half = (1 << levels) - 1;  // columns per row
  const int total = 2 * half;
  const int width = digits(total);
  auto attr_at = [&](int row, int col) {
    return Attribute(numbered('e', row * half + col + 1, width));
  };
  const Value x = Value::known("x");

  FeatureSet explicit_features;
  std::set<Attribute> universe;
  for (int row = 0; row < 2; ++row) {
    for (int col = 0; col < half; ++col) {
      Attribute a = attr_at(row, col);
      explicit_features.assign(a, x);
      universe.insert(std::move(a));
    }
  }

  CompiledSet set;
  for (int row = 0; row < 2; ++row) {
    CompiledClass cls;
    cls.name = row == 0 ? "ROW_A" : "ROW_B";
    for (int col = 0; col < half; ++col) cls.features.assign(attr_at(row, col), x);
    set.classes.push_back(std::move(cls));
  }
  // Bait j spans 2^(j-1) fresh columns across both rows: one feature more
  // than what is left of either row when greedy reaches it.
  int start = 0;
  for (int j = levels; j >= 1; --j) {
    int cols = 1 << (j - 1);
    CompiledClass cls;
    cls.name = "STEP_" + std::to_string(1 << j);
    for (int col = start; col < start + cols; ++col) {
      cls.features.assign(attr_at(0, col), x);
      cls.features.assign(attr_at(1, col), x);
    }
    start += cols;
    set.classes.push_back(std::move(cls));
  }

  Instance inst;
  inst.object = complete("obj", std::move(explicit_features), std::move(universe));
  inst.classes = augment_singletons(std::move(set), inst.object);
  return inst;
}

int staircase_levels(int n_attributes) {
  if (n_attributes < 6) {
    throw GuardError("a staircase needs at least 6 attributes (2 levels)");
  }
  int levels = 2;
  while (levels < 20 && 2 * ((1 << (levels + 1)) - 1) <= n_attributes) ++levels;
  return levels;
}

Instance generate(Preset preset, const InstanceParams& p) {
  switch (preset) {
    case Preset::Uniform:
      return generate_instance(p);
    case Preset::ClashFree: {
      InstanceParams q = p;
      q.clash_density = 0.0;
      return generate_instance(q);
    }
    case Preset::Staircase:
      return generate_staircase(staircase_levels(p.n_attributes), p.seed);
  }
  throw Error("unknown preset");
}

RatioReport measure(Preset preset, std::span<const InstanceParams> sweep,
                    int trials, int max_regular) {
  if (trials < 1) throw GuardError("trials must be positive");
  RatioReport report;
  report.preset = preset;
  report.trials = trials;
  report.max_regular = max_regular;
  report.sweep.assign(sweep.begin(), sweep.end());

  using clock = std::chrono::steady_clock;
  auto micros = [](clock::time_point a, clock::time_point b) {
    return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
  };

  int id = 0;
  double ratio_sum = 0.0;
  for (const InstanceParams& item : sweep) {
    for (int t = 0; t < trials; ++t) {
      InstanceParams q = item;
      q.seed = splitmix64(item.seed +
                          0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(t + 1));
      Instance inst = generate(preset, q);

      auto t0 = clock::now();
      InsertionResult greedy = greedy_insert(inst.object, inst.classes);
      auto t1 = clock::now();
      InsertionResult pruned = prune_redundant(greedy, inst.object, inst.classes);

      RatioRow row;
      row.instance_id = id++;
      row.seed = q.seed;
      row.n_attrs = static_cast<int>(inst.object.universe().size());
      row.n_regular = static_cast<int>(inst.classes.regular_count());
      row.f_known = static_cast<int>(inst.object.known_features().size());
      row.greedy_cost = greedy.cost;
      row.pruned_cost = pruned.cost;
      row.iterations = static_cast<int>(greedy.trace.size());
      row.greedy_micros = micros(t0, t1);
      row.bound = std::log(static_cast<double>(std::max(1, row.f_known))) + 1.0;
      row.clash_free = preset != Preset::Uniform || q.clash_density == 0.0;

      if (row.n_regular <= max_regular) {
        auto t2 = clock::now();
        InsertionResult exact = exact_insert(inst.object, inst.classes, max_regular);
        auto t3 = clock::now();
        row.exact_micros = micros(t2, t3);
        row.exact_cost = exact.cost;
        row.ratio = exact.cost == 0
                        ? 1.0
                        : static_cast<double>(greedy.cost) / exact.cost;
        row.violation = row.clash_free && row.ratio > row.bound;

        ++report.exact_rows;
        ratio_sum += row.ratio;
        report.max_ratio = std::max(report.max_ratio, row.ratio);
        report.bound = std::max(report.bound, row.bound);
        if (row.violation) ++report.violations;
      }
      report.rows.push_back(std::move(row));
    }
  }
  if (report.exact_rows > 0) report.mean_ratio = ratio_sum / report.exact_rows;
  return report;
}

void write_csv(const RatioReport& report, std::ostream& out) {
  out << "# preset=" << to_string(report.preset) << " trials=" << report.trials
      << " max_regular=" << report.max_regular << "\n";
  for (std::size_t j = 0; j < report.sweep.size(); ++j) {
    const InstanceParams& p = report.sweep[j];
    out << "# sweep " << j << ": n_attributes=" << p.n_attributes
        << " n_values_per_attribute=" << p.n_values_per_attribute
        << " n_regular_classes=" << p.n_regular_classes << " class_size="
        << p.class_size_range.first << ".." << p.class_size_range.second
        << " object_known_count=" << p.object_known_count
        << " clash_density=" << fmtg(p.clash_density) << " seed=" << p.seed
        << "\n";
  }
  out << "instance_id,seed,n_attrs,n_regular,f_known,greedy_cost,pruned_cost,"
         "exact_cost,ratio,iterations,greedy_micros,exact_micros,bound,"
         "violation\n";
  for (const RatioRow& r : report.rows) {
    out << r.instance_id << ',' << r.seed << ',' << r.n_attrs << ','
        << r.n_regular << ',' << r.f_known << ',' << r.greedy_cost << ','
        << r.pruned_cost << ',';
    if (r.exact_cost) out << *r.exact_cost;
    out << ',';
    if (r.exact_cost) out << fmt6(r.ratio);
    out << ',' << r.iterations << ',' << r.greedy_micros << ','
        << r.exact_micros << ',' << fmt6(r.bound) << ','
        << (r.violation ? 1 : 0) << "\n";
  }
}

std::string summary(const RatioReport& report) {
  std::string out = "preset=";
  out += to_string(report.preset);
  out += " rows=" + std::to_string(report.rows.size());
  out += " exact=" + std::to_string(report.exact_rows);
  out += " skipped=" +
         std::to_string(report.rows.size() - static_cast<std::size_t>(report.exact_rows));
  out += " max_ratio=" + fmt6(report.max_ratio);
  out += " mean_ratio=" + fmt6(report.mean_ratio);
  out += " bound=" + fmt6(report.bound);
  out += " violations=" + std::to_string(report.violations);
  return out;
}

}  // namespace lexin::bench
