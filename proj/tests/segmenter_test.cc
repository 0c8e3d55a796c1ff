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


#include "cxmine/segmenter.h"

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "cxmine/errors.h"
#include "cxmine/util.h"
#include "oracles.h"

namespace cxmine {
namespace {

Sentence Words(std::string_view text) { return SplitWhitespace(text); }

CandidateTable Table(std::initializer_list<std::tuple<const char*, double, double>> rows) {
  std::vector<CandidateEntry> entries;
  for (auto [text, prob, ms] : rows) entries.push_back({Pattern::Parse(text), 1, prob, {}, ms});
  return CandidateTable(std::move(entries));
}

std::vector<std::string> Keys(const Segmentation& s) {
  std::vector<std::string> out;
  for (const auto& seg : s.segments) out.push_back(seg.Key());
  return out;
}

double MsMass(const Segmentation& s, const CandidateTable& table) {
  double mass = 0;
  for (const auto& seg : s.segments) {
    if (seg.is_pattern()) mass += table.Find(*seg.pattern)->ms;
  }
  return mass;
}

TEST(SegmentTest, SingleCertainPattern) {
  auto table = Table({{"jump", 1.0, 0.0}});
  auto seg = SegmentSentence({"jump"}, table);
  ASSERT_EQ(seg.segments.size(), 1u);
  EXPECT_TRUE(seg.segments[0].is_pattern());
  EXPECT_EQ(seg.score, 0.0);
}

TEST(SegmentTest, PrefersConstructionsWhenTheyDominate) {
  auto table = Table({{"_ opposite _ twice", 0.3, 0.0},
                      {"_ twice", 0.3, 0.0},
                      {"and", 0.2, 0.0},
                      {"look", 0.1, 0.0},
                      {"walk", 0.1, 0.0}});
  auto seg = SegmentSentence(Words("look opposite left twice and walk twice"), table);
  EXPECT_EQ(FormatSegmentation(seg),
            "_ opposite _ twice[look,left] | and[] | _ twice[walk]");
}

TEST(SegmentTest, UnknownWordsFallBack) {
  auto table = Table({{"walk", 0.5, 0.0}, {"_ twice", 0.5, 0.0}});
  auto seg = SegmentSentence(Words("walk and hop"), table);
  EXPECT_EQ(seg.FallbackCount(), 2u);
  EXPECT_EQ(seg.Realize(), Words("walk and hop"));
  EXPECT_EQ(seg.score, std::log(0.5) + 2 * (std::log(0.5) - 1.0));
  auto empty = SegmentSentence(Words("a b"), CandidateTable{});
  EXPECT_EQ(empty.score, -2.0);
}

TEST(SegmentTest, TiesPreferFewerSegmentsThenText) {
  // "a b" as one pattern or as two equally scored words.
  auto table = Table({{"a b", 0.25, 0.0}, {"a", 0.5, 0.0}, {"b", 0.5, 0.0}});
  EXPECT_EQ(Keys(SegmentSentence(Words("a b"), table)), (std::vector<std::string>{"a b"}));
  auto tied = Table({{"x _", 0.5, 0.0}, {"_ y", 0.5, 0.0}});
  EXPECT_EQ(Keys(SegmentSentence(Words("x y"), tied)), (std::vector<std::string>{"_ y"}));
}

TEST(SegmentTest, LambdaSwitchPoint) {
  // Both patterns cover the sentence alone: log .5 - 4λ vs log .25, so the
  // choice flips at λ = ln 2 / 4.
  auto table = Table({{"_ around left", 0.5, 4.0}, {"jump around _", 0.25, 0.0}});
  const double switch_at = std::log(2.0) / 4.0;
  const Sentence s = Words("jump around left");
  double prev_mass = 1e9;
  for (double lambda : {0.0, 0.1, switch_at - 1e-6, switch_at + 1e-6, 0.5, 2.0}) {
    BeamConfig cfg;
    cfg.lambda_ms = lambda;
    auto seg = SegmentSentence(s, table, cfg);
    const double mass = MsMass(seg, table);
    EXPECT_LE(mass, prev_mass);
    prev_mass = mass;
    EXPECT_EQ(Keys(seg)[0], lambda < switch_at ? "_ around left" : "jump around _");
  }
}

TEST(SegmentTest, ScoreNonDecreasingInBeamWidth) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<ParallelPair> pairs;
    for (int i = 0; i < 12; ++i) {
      pairs.push_back({oracle::RandomSentence(rng, 3, 2, 8), {"t"}});
    }
    ParallelCorpus corpus(std::move(pairs));
    auto table = BuildTable(corpus, {3, 0, 2});
    for (const auto& p : corpus.pairs()) {
      double prev = -1e300;
      for (std::size_t w : {1u, 2u, 4u, 64u}) {
        BeamConfig cfg;
        cfg.beam_width = w;
        const double score = SegmentSentence(p.source, table, cfg).score;
        EXPECT_GE(score, prev);
        prev = score;
      }
    }
  }
}

TEST(SegmentTest, MatchesExhaustiveCoverSearch) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<CandidateEntry> entries;
    const std::size_t count = 1 + rng() % 20;
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Pattern::Element> elems;
      const std::size_t len = 1 + rng() % 3;
      for (std::size_t j = 0; j < len; ++j) {
        const bool slot = rng() % 3 == 0 && (j == 0 || !elems.back().slot);
        if (slot) {
          elems.push_back(Pattern::Element::Slot());
        } else {
          elems.push_back(Pattern::Element::Fixed(std::string(1, static_cast<char>('a' + rng() % 3))));
        }
      }
      bool fixed = false;
      for (const auto& e : elems) fixed |= !e.slot;
      if (!fixed) continue;
      Pattern p(std::move(elems));
      bool dup = false;
      for (const auto& e : entries) dup |= e.pattern == p;
      if (dup) continue;
      entries.push_back({p, 1, (1 + rng() % 9) / 10.0, {}, static_cast<double>(rng() % 4)});
    }
    CandidateTable table(std::move(entries));
    BeamConfig cfg;
    cfg.beam_width = 64;
    cfg.lambda_ms = 0.3;
    const double fallback = EffectiveFallbackLogprob(table, cfg);
    for (int k = 0; k < 5; ++k) {
      Sentence s = oracle::RandomSentence(rng, 3, 1, 6);
      auto got = SegmentSentence(s, table, cfg);
      auto want = oracle::ExhaustiveCover(s, table, cfg.lambda_ms, fallback);
      ASSERT_EQ(got.score, want.score) << Join(s, " ");
      ASSERT_EQ(Keys(got), want.keys) << Join(s, " ");
    }
  }
}

TEST(SegmentTest, ConfigErrors) {
  auto table = Table({{"a", 1.0, 0.0}});
  BeamConfig zero;
  zero.beam_width = 0;
  EXPECT_THROW(SegmentSentence({"a"}, table, zero), ConfigError);
  BeamConfig positive;
  positive.fallback_logprob = 0.5;
  EXPECT_THROW(SegmentSentence({"a"}, table, positive), ConfigError);
  EXPECT_THROW(SegmentSentence({}, table), DataError);
}

TEST(SegmentCorpusTest, OrderAlignedAndThreadIndependent) {
  std::mt19937_64 rng(2);
  std::vector<ParallelPair> pairs;
  for (int i = 0; i < 200; ++i) pairs.push_back({oracle::RandomSentence(rng, 4, 1, 7), {"t"}});
  pairs.push_back(pairs.front());
  ParallelCorpus corpus(std::move(pairs));
  auto table = BuildTable(corpus);
  auto one = SegmentCorpus(corpus, table, {}, 1);
  auto many = SegmentCorpus(corpus, table, {}, 4);
  EXPECT_EQ(SerializeSegmentations(one), SerializeSegmentations(many));
  EXPECT_EQ(FormatSegmentation(one.front()), FormatSegmentation(one.back()));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    EXPECT_EQ(one[i].Realize(), corpus[i].source);
  }
}

TEST(SegmentationFormatTest, RoundTrip) {
  const std::string line = "_ around _ twice[jump,left] | and[] | _ twice[walk] | hop";
  auto seg = ParseSegmentation(line);
  EXPECT_EQ(FormatSegmentation(seg), line);
  EXPECT_EQ(seg.Realize(), Words("jump around left twice and walk twice hop"));
  EXPECT_EQ(seg.segments[3].start, 7u);
  EXPECT_FALSE(seg.segments[3].is_pattern());
  EXPECT_TRUE(seg.segments[1].is_pattern());
}

TEST(SegmentationFormatTest, Errors) {
  EXPECT_THROW(ParseSegmentation(""), DataError);
  EXPECT_THROW(ParseSegmentation("_ twice[a,b]"), DataError);
  EXPECT_THROW(ParseSegmentation("_ twice[]"), DataError);
  EXPECT_THROW(ParseSegmentation("a |  | b"), DataError);
  EXPECT_THROW(ParseSegmentation("_ twicewalk]"), DataError);
  try {
    LoadSegmentations("walk\n_ _[a,b]\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

}  // namespace
}  // namespace cxmine
