// Copyright 2026 The braidgs Authors
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


#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "braidgs/confluence.hpp"
#include "braidgs/crosscheck.hpp"
#include "braidgs/families.hpp"
#include "braidgs/normal_form.hpp"
#include "braidgs/oracles.hpp"
#include "braidgs/rewrite.hpp"

namespace braidgs {
namespace {

std::vector<Word> corpus(int n, std::size_t max_len, std::size_t count) {
  std::mt19937_64 rng(42);
  std::vector<Word> out;
  for (std::size_t t = 0; t < count; ++t) {
    out.push_back(desugar_inverses(random_signed_word(n, max_len, rng)));
  }
  return out;
}

// args: rank, maximum signed-word length
void BM_NormalizeRandom(benchmark::State& state) {
  const auto words = corpus(static_cast<int>(state.range(0)),
                            static_cast<std::size_t>(state.range(1)), 256);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalize(words[k++ % words.size()]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NormalizeRandom)->ArgsProduct({{2, 4, 8}, {12, 48}});

void BM_NormalizeDeltaPower(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Word w(n);
  for (int p = 0; p < 4; ++p) w = w + delta_ladder(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(normalize(w));
}
BENCHMARK(BM_NormalizeDeltaPower)->DenseRange(2, 8, 2);

void BM_FindMatches(benchmark::State& state) {
  const auto words = corpus(4, 48, 256);
  std::size_t k = 0;
  for (auto _ : state) benchmark::DoNotOptimize(find_matches(words[k++ % words.size()]));
}
BENCHMARK(BM_FindMatches);

void BM_ArtinAutomorphism(benchmark::State& state) {
  std::mt19937_64 rng(7);
  const SignedWord u = random_signed_word(4, 24, rng);
  for (auto _ : state) benchmark::DoNotOptimize(artin_automorphism(u));
}
BENCHMARK(BM_ArtinAutomorphism);

void BM_CheckCompositions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto len = static_cast<std::size_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(check_compositions(n, len).total);
}
BENCHMARK(BM_CheckCompositions)->Args({2, 8})->Args({3, 6})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace braidgs

BENCHMARK_MAIN();
