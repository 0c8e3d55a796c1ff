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

// Beam-search segmentation of a sentence into pattern uses and fallback
// words.
//
// Partial hypotheses are grouped by the number of tokens they cover. From
// every hypothesis ending at position p the search extends with each table
// pattern matching at p (score log(prob) - lambda_ms * ms) and with a
// single fallback word (score fallback_logprob). Each position keeps its
// beam_width best hypotheses. Hypotheses are ranked by score, then by fewer
// segments, then lexicographically by their segment texts.

#ifndef CXMINE_SEGMENTER_H_
#define CXMINE_SEGMENTER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cxmine/candidates.h"
#include "cxmine/corpus.h"

namespace cxmine {

struct Segment {
  enum class Kind { kPattern, kFallback };

  Kind kind = Kind::kFallback;
  std::optional<Pattern> pattern;  // set for kPattern
  std::vector<Token> bindings;     // slot fillers for kPattern
  Token word;                      // set for kFallback
  std::size_t start = 0;
  std::size_t length = 0;

  static Segment Use(Pattern p, std::vector<Token> bindings, std::size_t start);
  static Segment Fallback(Token word, std::size_t start);

  bool is_pattern() const { return kind == Kind::kPattern; }
  // Tokens this segment covers, with slots filled in.
  Sentence Realize() const;
  // Ranking key: pattern text or the fallback word.
  const std::string& Key() const;

  bool operator==(const Segment&) const = default;
};

struct Segmentation {
  std::vector<Segment> segments;
  double score = 0.0;

  // Concatenated realizations of all segments.
  Sentence Realize() const;
  std::size_t FallbackCount() const;
};

struct BeamConfig {
  std::size_t beam_width = 16;
  double lambda_ms = 0.1;
  // nullopt selects log(min table prob) - 1, strictly below any pattern.
  std::optional<double> fallback_logprob;
  // Carried for config compatibility; the search itself is deterministic.
  std::uint64_t seed = 0;
};

// Fallback score actually used for `table` under `config`. Throws ConfigError
// if an explicit value is not negative.
double EffectiveFallbackLogprob(const CandidateTable& table,
                                const BeamConfig& config);

// Score contribution of one pattern use.
double PatternScore(const CandidateEntry& entry, const BeamConfig& config);

// Throws ConfigError on beam_width == 0 or negative lambda_ms, DataError on an
// empty sentence.
Segmentation SegmentSentence(const Sentence& sentence,
                             const CandidateTable& table,
                             const BeamConfig& config = {});

// One segmentation per source sentence, in corpus order.
std::vector<Segmentation> SegmentCorpus(const ParallelCorpus& corpus,
                                        const CandidateTable& table,
                                        const BeamConfig& config = {},
                                        unsigned threads = 0);

// `_ around _ twice[jump,left] | and | _ twice[walk]`. Pattern uses always
// carry brackets (empty for slot-free patterns); fallback words are bare.
std::string FormatSegmentation(const Segmentation& segmentation);
// Throws DataError. The score is not part of the text form and is left 0.
Segmentation ParseSegmentation(std::string_view line);

std::string SerializeSegmentations(const std::vector<Segmentation>& segs);
std::vector<Segmentation> LoadSegmentations(std::string_view text);

}  // namespace cxmine

#endif  // CXMINE_SEGMENTER_H_
