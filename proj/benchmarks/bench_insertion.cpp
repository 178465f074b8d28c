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

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>

#include "lexin/bench.hpp"
#include "lexin/insertion.hpp"

namespace lexin {
namespace {

bench::Instance instance_with(int n_classes, int known, double density,
                              std::uint64_t seed) {
  bench::InstanceParams p;
  p.n_attributes = 2 * known;
  p.n_values_per_attribute = 4;
  p.n_regular_classes = n_classes;
  p.class_size_range = {2, 6};
  p.object_known_count = known;
  p.clash_density = density;
  p.seed = seed;
  return bench::generate_instance(p);
}

void BM_Clash(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  FeatureSet a;
  FeatureSet b;
  for (int i = 0; i < size; ++i) {
    a.assign(Attribute("a" + std::to_string(i)), Value::known("v1"));
    b.assign(Attribute("a" + std::to_string(i)),
             Value::known(i % 2 ? "v1" : "v2"));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(clash(a, b));
  }
}
BENCHMARK(BM_Clash)->Arg(8)->Arg(64)->Arg(512);

void BM_CompileOut(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  Hierarchy h;
  for (int i = 0; i < depth; ++i) {
    ClassDecl d;
    d.name = "K" + std::to_string(i);
    if (i > 0) d.parents.push_back("K" + std::to_string(i - 1));
    d.local.assign(Attribute("a" + std::to_string(i)), Value::known("v"));
    h.add(d);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(compile_out(h));
  }
}
BENCHMARK(BM_CompileOut)->Arg(8)->Arg(64)->Arg(256);

void BM_GreedyByClassCount(benchmark::State& state) {
  bench::Instance inst =
      instance_with(static_cast<int>(state.range(0)), 16, 0.25, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_insert(inst.object, inst.classes));
  }
}
BENCHMARK(BM_GreedyByClassCount)->Arg(50)->Arg(200)->Arg(400)->Arg(800);

void BM_GreedyByKnownCount(benchmark::State& state) {
  bench::Instance inst =
      instance_with(100, static_cast<int>(state.range(0)), 0.25, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_insert(inst.object, inst.classes));
  }
}
BENCHMARK(BM_GreedyByKnownCount)->Arg(8)->Arg(16)->Arg(24);

void BM_PruneRedundant(benchmark::State& state) {
  bench::Instance inst = instance_with(200, 16, 0.25, 3);
  InsertionResult r = greedy_insert(inst.object, inst.classes);
  for (auto _ : state) {
    benchmark::DoNotOptimize(prune_redundant(r, inst.object, inst.classes));
  }
}
BENCHMARK(BM_PruneRedundant);

void BM_ExactInsert(benchmark::State& state) {
  bench::Instance inst =
      instance_with(static_cast<int>(state.range(0)), 12, 0.25, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        exact_insert(inst.object, inst.classes, /*max_regular=*/20));
  }
}
BENCHMARK(BM_ExactInsert)->Arg(8)->Arg(12)->Arg(16);

void BM_ExactInsertStaircase(benchmark::State& state) {
  bench::Instance inst =
      bench::generate_staircase(static_cast<int>(state.range(0)), 0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        exact_insert(inst.object, inst.classes, /*max_regular=*/20));
  }
}
BENCHMARK(BM_ExactInsertStaircase)->Arg(3)->Arg(5)->Arg(7);

}  // namespace
}  // namespace lexin

BENCHMARK_MAIN();
