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

#include "bupoly/divisor_sums.hpp"
#include "bupoly/mersenne.hpp"

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

namespace {

using namespace bupoly;

Poly random_poly_of_degree(std::mt19937_64& rng, int degree) {
    std::vector<std::uint64_t> words(static_cast<std::size_t>(degree) / 64 + 1);
    for (auto& w : words) w = rng();
    const int top_bit = degree % 64;
    words.back() &= top_bit == 63 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (top_bit + 1)) - 1);
    words.back() |= std::uint64_t{1} << top_bit;
    return Poly::from_words(words);
}

void BM_mul(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const Poly a = random_poly_of_degree(rng, static_cast<int>(state.range(0)));
    const Poly b = random_poly_of_degree(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_mul)->Arg(24)->Arg(64)->Arg(128);

void BM_divrem(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const Poly num = random_poly_of_degree(rng, 2 * static_cast<int>(state.range(0)));
    const Poly den = random_poly_of_degree(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(divrem(num, den));
}
BENCHMARK(BM_divrem)->Arg(24)->Arg(64);

void BM_square(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const Poly a = random_poly_of_degree(rng, 64);
    for (auto _ : state) benchmark::DoNotOptimize(square(a));
}
BENCHMARK(BM_square);

void BM_translate(benchmark::State& state) {
    std::mt19937_64 rng(42);
    const Poly a = random_poly_of_degree(rng, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(translate(a));
}
BENCHMARK(BM_translate)->Arg(24)->Arg(64);

void BM_is_irreducible(benchmark::State& state) {
    // 1 + x^5 + x^10 + x^15 + x^20, a known degree-20 irreducible.
    const Poly p = parse_poly("1+x^5+x^10+x^15+x^20");
    for (auto _ : state) benchmark::DoNotOptimize(is_irreducible(p));
}
BENCHMARK(BM_is_irreducible);

void BM_factorize(benchmark::State& state) {
    std::mt19937_64 rng(7);
    std::vector<Poly> inputs;
    for (int i = 0; i < 64; ++i)
        inputs.push_back(random_poly_of_degree(rng, static_cast<int>(state.range(0))));
    std::size_t i = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(factorize(inputs[i]));
        i = (i + 1) % inputs.size();
    }
}
BENCHMARK(BM_factorize)->Arg(24)->Arg(40);

void BM_sigma_bistar_C13(benchmark::State& state) {
    const Factorization& c13 = named_entry("C13").factorization;
    for (auto _ : state) benchmark::DoNotOptimize(sigma_bistar(c13));
}
BENCHMARK(BM_sigma_bistar_C13);

void BM_sigma_bistar_oracle_C13(benchmark::State& state) {
    const Factorization& c13 = named_entry("C13").factorization;
    for (auto _ : state) benchmark::DoNotOptimize(sigma_bistar_oracle(c13));
}
BENCHMARK(BM_sigma_bistar_oracle_C13);

}  // namespace

BENCHMARK_MAIN();
