// Copyright 2026 The cxmine Authors.
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


#include <random>
#include <vector>

#include <benchmark/benchmark.h>

#include "cxmine/alignment.h"
#include "cxmine/candidates.h"
#include "cxmine/rewriter.h"
#include "cxmine/scan_oracle.h"
#include "cxmine/segmenter.h"
#include "cxmine/subsampler.h"

namespace cxmine {
namespace {

const scan::SplitCorpora& AroundRight() {
  static const scan::SplitCorpora corpora = scan::GenerateSplit(scan::Split::kAroundRight);
  return corpora;
}

ParallelCorpus Head(const ParallelCorpus& corpus, std::size_t n) {
  n = std::min(n, corpus.size());
  return ParallelCorpus(std::vector<ParallelPair>(corpus.pairs().begin(),
                                                  corpus.pairs().begin() + n));
}

void BM_Levenshtein(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto len = static_cast<std::size_t>(state.range(0));
  std::vector<Sentence> pool;
  for (int i = 0; i < 64; ++i) {
    Sentence s(len);
    for (auto& t : s) t = std::string(1, static_cast<char>('a' + rng() % 6));
    pool.push_back(std::move(s));
  }
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(Levenshtein(pool[i % 64], pool[(i + 7) % 64]));
    ++i;
  }
}
BENCHMARK(BM_Levenshtein)->Arg(4)->Arg(9)->Arg(32);

void BM_Interpret(benchmark::State& state) {
  const auto& train = AroundRight().train;
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan::Interpret(train[i % train.size()].source));
    ++i;
  }
}
BENCHMARK(BM_Interpret);

void BM_BuildTable(benchmark::State& state) {
  const auto corpus = Head(AroundRight().train, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(BuildTable(corpus));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(corpus.size()));
}
BENCHMARK(BM_BuildTable)->Arg(1000)->Arg(15225)->Unit(benchmark::kMillisecond);

void BM_AnnotateTable(benchmark::State& state) {
  const auto corpus = Head(AroundRight().train, static_cast<std::size_t>(state.range(0)));
  const auto table = BuildTable(corpus);
  const MsOptions options{static_cast<std::size_t>(state.range(1)), 0, 1};
  for (auto _ : state) benchmark::DoNotOptimize(AnnotateTable(table, corpus, options));
}
BENCHMARK(BM_AnnotateTable)
    ->Args({1000, 200})
    ->Args({15225, 200})
    ->Args({15225, 0})
    ->Unit(benchmark::kMillisecond);

void BM_SegmentSentence(benchmark::State& state) {
  const auto& train = AroundRight().train;
  static const CandidateTable table = AnnotateTable(BuildTable(train), train);
  BeamConfig config;
  config.beam_width = static_cast<std::size_t>(state.range(0));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(SegmentSentence(train[i % train.size()].source, table, config));
    ++i;
  }
}
BENCHMARK(BM_SegmentSentence)->Arg(1)->Arg(16)->Arg(64);

void BM_TypeBalancedSubset(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<std::string> keys;
  for (int i = 0; i < 15000; ++i) keys.push_back("type" + std::to_string(rng() % 750));
  for (auto _ : state) benchmark::DoNotOptimize(TypeBalancedSubset(keys, 5, 0));
}
BENCHMARK(BM_TypeBalancedSubset)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace cxmine

BENCHMARK_MAIN();
