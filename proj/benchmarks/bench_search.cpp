// Copyright 2026 The bupoly Authors
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

#include "bupoly/search.hpp"

#include <benchmark/benchmark.h>

namespace {

using namespace bupoly;

SearchOptions serial_opts() {
    SearchOptions opts;
    opts.threads = 1;
    return opts;
}

void BM_search_omega3(benchmark::State& state) {
    const SearchOptions opts = serial_opts();
    for (auto _ : state) benchmark::DoNotOptimize(search_omega3(opts));
}
BENCHMARK(BM_search_omega3)->Unit(benchmark::kMillisecond);

void BM_search_omega4_mersenne(benchmark::State& state) {
    const SearchOptions opts = serial_opts();
    for (auto _ : state) benchmark::DoNotOptimize(search_omega4_mersenne(opts));
}
BENCHMARK(BM_search_omega4_mersenne)->Unit(benchmark::kMillisecond);

void BM_blind_search(benchmark::State& state) {
    const SearchOptions opts = serial_opts();
    const int max_degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(blind_search(max_degree, 4, opts));
}
BENCHMARK(BM_blind_search)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_irreducible_table(benchmark::State& state) {
    const int degree = static_cast<int>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(irreducibles_of_degree(degree));
}
BENCHMARK(BM_irreducible_table)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
