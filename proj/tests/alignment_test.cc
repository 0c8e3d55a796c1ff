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


#include "cxmine/alignment.h"

#include <random>

#include <gtest/gtest.h>

#include "cxmine/errors.h"
#include "cxmine/scan_oracle.h"
#include "cxmine/util.h"
#include "oracles.h"

namespace cxmine {
namespace {

Sentence Words(std::string_view text) { return SplitWhitespace(text); }

TEST(LevenshteinTest, Examples) {
  EXPECT_EQ(Levenshtein(Words("jump twice"), Words("jump twice")), 0u);
  EXPECT_EQ(Levenshtein(Words("jump twice"), Words("jump thrice")), 1u);
  EXPECT_EQ(Levenshtein(Sentence{}, Words("a b c")), 3u);
  EXPECT_EQ(Levenshtein(Words("a b c d"), Words("b c d a")), 2u);
}

TEST(LevenshteinTest, PropertiesAgainstMatrixOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 500; ++i) {
    auto a = oracle::RandomSentence(rng, 5, 0, 8);
    auto b = oracle::RandomSentence(rng, 5, 0, 8);
    auto c = oracle::RandomSentence(rng, 5, 0, 8);
    const auto ab = Levenshtein(a, b);
    ASSERT_EQ(ab, oracle::EditDistance(a, b));
    ASSERT_EQ(ab, Levenshtein(b, a));
    ASSERT_EQ(Levenshtein(a, a), 0u);
    ASSERT_LE(Levenshtein(a, c), ab + Levenshtein(b, c));
  }
}

TEST(LevenshteinTest, LongSequencesUseHeapRow) {
  std::mt19937_64 rng(5);
  auto a = oracle::RandomSentence(rng, 3, 90, 120);
  auto b = oracle::RandomSentence(rng, 3, 90, 120);
  EXPECT_EQ(Levenshtein(a, b), oracle::EditDistance(a, b));
}

TEST(NearestNeighborTest, TieBreaksLow) {
  std::vector<Sentence> s = {Words("a b"), Words("a b"), Words("c d")};
  EXPECT_EQ(NearestNeighbor(0, s), 1u);
  EXPECT_EQ(NearestNeighbor(2, s), 0u);
  EXPECT_THROW(NearestNeighbor(0, std::vector<Sentence>{Words("a")}), DataError);
  EXPECT_THROW(NearestNeighbor(3, s), DataError);
}

ParallelCorpus ScanCorpus(std::initializer_list<const char*> commands) {
  std::vector<ParallelPair> pairs;
  for (const char* c : commands) pairs.push_back({Words(c), scan::Interpret(Words(c))});
  return ParallelCorpus(std::move(pairs));
}

TEST(MisalignmentScoreTest, AroundVersusOpposite) {
  auto corpus = ScanCorpus({"look around left", "look opposite left"});
  auto table = BuildTable(corpus, {3, 0, 2});
  auto report = MisalignmentScore(Pattern::Parse("look _ left"), table, corpus);
  EXPECT_EQ(report.deltas, (std::vector<std::int64_t>{5, 5}));
  EXPECT_EQ(report.score, 5.0);
}

TEST(MisalignmentScoreTest, HomogeneousFillersScoreLower) {
  auto corpus = ScanCorpus({"jump around left twice", "walk around right twice",
                            "look around left", "look opposite left"});
  auto table = AnnotateTable(BuildTable(corpus, {4, 0, 2}), corpus);
  const auto* homogeneous = table.Find("_ around _ twice");
  const auto* mixed = table.Find("look _ left");
  ASSERT_NE(homogeneous, nullptr);
  ASSERT_NE(mixed, nullptr);
  EXPECT_EQ(homogeneous->ms, 0.0);
  EXPECT_EQ(mixed->ms, 5.0);
  EXPECT_LT(homogeneous->ms, mixed->ms);
}

TEST(MisalignmentScoreTest, EqualTargetLengthsGiveZero) {
  auto corpus = ScanCorpus({"walk left", "run left", "jump right", "look right"});
  auto table = AnnotateTable(BuildTable(corpus, {2, 0, 2}), corpus);
  for (const auto& e : table.entries()) EXPECT_EQ(e.ms, 0.0) << e.pattern.text();
}

TEST(MisalignmentScoreTest, MatchesBruteForceOnRandomCorpora) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<ParallelPair> pairs;
    const std::size_t n = 2 + rng() % 11;
    for (std::size_t i = 0; i < n; ++i) {
      pairs.push_back({oracle::RandomSentence(rng, 4, 1, 6),
                       oracle::RandomSentence(rng, 3, 1, 9)});
    }
    ParallelCorpus corpus(std::move(pairs));
    auto table = BuildTable(corpus, {4, 0, 2});
    const auto sources = corpus.Sources();
    for (const auto& e : table.entries()) {
      if (!e.pattern.has_slots()) continue;
      auto report = MisalignmentScore(e.pattern, table, corpus, {0, 0, 1});
      auto expected = oracle::MsDeltas(oracle::Occurrences(e.pattern.text(), sources), corpus);
      ASSERT_EQ(report.deltas, expected) << e.pattern.text();
    }
  }
}

// Large occurrence lists take the hashed neighbour path; it must agree with
// the all-pairs oracle, including sentences with no neighbour within one edit.
TEST(MisalignmentScoreTest, HashedNeighboursMatchBruteForce) {
  std::mt19937_64 rng(8);
  for (std::size_t alphabet : {3u, 6u}) {
    std::vector<ParallelPair> pairs;
    for (int i = 0; i < 150; ++i) {
      Sentence s = oracle::RandomSentence(rng, alphabet, 1, 7);
      s.insert(s.begin(), "k");
      pairs.push_back({s, oracle::RandomSentence(rng, 2, 1, 12)});
    }
    ParallelCorpus corpus(std::move(pairs));
    auto table = BuildTable(corpus, {2, 0, 2});
    auto report = MisalignmentScore(Pattern::Parse("k _"), table, corpus, {0, 0, 1});
    auto expected = oracle::MsDeltas(oracle::Occurrences("k _", corpus.Sources()), corpus);
    EXPECT_EQ(report.deltas, expected);
  }
}

TEST(MisalignmentScoreTest, SampleCapIsDeterministic) {
  auto split = scan::GenerateSplit(scan::Split::kAroundRight);
  std::vector<ParallelPair> head(split.train.pairs().begin(),
                                 split.train.pairs().begin() + 2000);
  ParallelCorpus corpus(std::move(head));
  auto table = BuildTable(corpus, {2, 0, 2});
  auto a = MisalignmentScore(Pattern::Parse("_ twice"), table, corpus, {50, 3, 1});
  auto b = MisalignmentScore(Pattern::Parse("_ twice"), table, corpus, {50, 3, 1});
  EXPECT_EQ(a.deltas.size(), 50u);
  EXPECT_EQ(a.sentences, b.sentences);
  EXPECT_EQ(a.score, b.score);
  auto c = MisalignmentScore(Pattern::Parse("_ twice"), table, corpus, {50, 4, 1});
  EXPECT_NE(a.sentences, c.sentences);
}

TEST(AnnotateTableTest, ThreadCountDoesNotChangeScores) {
  auto split = scan::GenerateSplit(scan::Split::kAddJump);
  std::vector<ParallelPair> head(split.train.pairs().begin(),
                                 split.train.pairs().begin() + 1500);
  ParallelCorpus corpus(std::move(head));
  auto raw = BuildTable(corpus);
  auto one = AnnotateTable(raw, corpus, {200, 0, 1});
  auto four = AnnotateTable(raw, corpus, {200, 0, 4});
  EXPECT_EQ(SerializeTable(one), SerializeTable(four));
}

TEST(AnnotateTableTest, SlotFreePatternsScoreZero) {
  auto corpus = ScanCorpus({"look around left", "look opposite left"});
  auto table = AnnotateTable(BuildTable(corpus, {3, 0, 2}), corpus);
  for (const auto& e : table.entries()) {
    if (!e.pattern.has_slots()) EXPECT_EQ(e.ms, 0.0);
  }
  EXPECT_NE(SerializeTable(table).find("\t5\n"), std::string::npos);
}

TEST(AnnotateTableTest, LoadedTablesCannotBeScored) {
  auto corpus = ScanCorpus({"look around left", "look opposite left"});
  auto loaded = LoadTable(SerializeTable(BuildTable(corpus, {3, 0, 2})));
  EXPECT_THROW(AnnotateTable(loaded, corpus), DataError);
  EXPECT_THROW(MisalignmentScore(Pattern::Parse("walk _"), loaded, corpus), DataError);
}

}  // namespace
}  // namespace cxmine
