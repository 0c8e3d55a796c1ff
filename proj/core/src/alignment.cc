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

#include <cstdlib>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>

#include "cxmine/errors.h"
#include "cxmine/util.h"

namespace cxmine {

namespace {

using WordId = std::uint32_t;

// Corpus sources as integer ids so the quadratic neighbour scan compares
// integers instead of strings.
struct InternedCorpus {
  std::vector<std::vector<WordId>> sources;
  std::vector<std::int64_t> target_lengths;

  explicit InternedCorpus(const ParallelCorpus& corpus) {
    std::unordered_map<Token, WordId> ids;
    sources.reserve(corpus.size());
    target_lengths.reserve(corpus.size());
    for (const auto& pair : corpus.pairs()) {
      std::vector<WordId> s;
      s.reserve(pair.source.size());
      for (const auto& tok : pair.source) {
        auto [it, inserted] = ids.try_emplace(tok, static_cast<WordId>(ids.size()));
        s.push_back(it->second);
      }
      sources.push_back(std::move(s));
      target_lengths.push_back(static_cast<std::int64_t>(pair.target.size()));
    }
  }
};

// Positions into the occurrence list that take part in scoring, ascending.
std::vector<std::size_t> SampledOccurrences(const CandidateEntry& entry,
                                            const MsOptions& options) {
  std::vector<std::size_t> picks(entry.occurrences.size());
  std::iota(picks.begin(), picks.end(), 0);
  if (options.sample_cap == 0 || picks.size() <= options.sample_cap) return picks;
  std::mt19937_64 rng(DeriveSeed(options.seed, entry.pattern.text()));
  DeterministicShuffle(std::span<std::size_t>(picks), rng);
  picks.resize(options.sample_cap);
  std::sort(picks.begin(), picks.end());
  return picks;
}

struct VectorHash {
  std::size_t operator()(const std::vector<WordId>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (WordId w : v) {
      h ^= w;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

using KeyIndex = std::unordered_map<std::vector<WordId>, std::vector<std::size_t>, VectorHash>;

constexpr WordId kWildcard = std::numeric_limits<WordId>::max();

// Smallest member of `list` other than `self`; lists are ascending.
std::size_t FirstOther(const std::vector<std::size_t>& list, std::size_t self) {
  if (list.empty()) return std::numeric_limits<std::size_t>::max();
  if (list[0] != self) return list[0];
  return list.size() > 1 ? list[1] : std::numeric_limits<std::size_t>::max();
}

std::size_t BruteForceNeighbor(std::size_t i, std::span<const std::vector<WordId>> seqs) {
  std::size_t best = seqs.size();
  std::size_t best_d = std::numeric_limits<std::size_t>::max();
  for (std::size_t j = 0; j < seqs.size(); ++j) {
    if (j == i) continue;
    const std::size_t d = Levenshtein<WordId>(seqs[i], seqs[j]);
    if (d < best_d) {
      best_d = d;
      best = j;
      if (d == 0) break;
    }
  }
  return best;
}

// Exact nearest neighbours (lowest index on ties) for every sequence.
// Neighbours at distance 0 or 1 are found through hash keys: identical
// sequences, one-position wildcard substitutions, and one-token deletions.
// Only sequences with no such neighbour fall back to a linear scan.
std::vector<std::size_t> AllNearestNeighbors(std::span<const std::vector<WordId>> seqs) {
  const std::size_t n = seqs.size();
  constexpr std::size_t kBruteForceLimit = 48;
  std::vector<std::size_t> nn(n);
  if (n <= kBruteForceLimit) {
    for (std::size_t i = 0; i < n; ++i) nn[i] = BruteForceNeighbor(i, seqs);
    return nn;
  }

  KeyIndex full, substituted, deleted;
  std::vector<WordId> key;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = seqs[i];
    full[s].push_back(i);
    for (std::size_t p = 0; p < s.size(); ++p) {
      key = s;
      key[p] = kWildcard;
      auto& sub = substituted[key];
      if (sub.empty() || sub.back() != i) sub.push_back(i);
      key = s;
      key.erase(key.begin() + static_cast<std::ptrdiff_t>(p));
      auto& del = deleted[key];
      if (del.empty() || del.back() != i) del.push_back(i);
    }
  }

  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& s = seqs[i];
    const std::size_t same = FirstOther(full.at(s), i);
    if (same != kNone) {
      nn[i] = same;
      continue;
    }
    // Every hit below is at distance exactly 1: distance 0 was ruled out.
    std::size_t best = kNone;
    for (std::size_t p = 0; p < s.size(); ++p) {
      key = s;
      key[p] = kWildcard;
      best = std::min(best, FirstOther(substituted.at(key), i));
      key = s;
      key.erase(key.begin() + static_cast<std::ptrdiff_t>(p));
      if (auto it = full.find(key); it != full.end()) {
        best = std::min(best, FirstOther(it->second, i));
      }
    }
    if (auto it = deleted.find(s); it != deleted.end()) {
      best = std::min(best, FirstOther(it->second, i));
    }
    nn[i] = best != kNone ? best : BruteForceNeighbor(i, seqs);
  }
  return nn;
}

MsReport ScoreEntry(const CandidateEntry& entry, const InternedCorpus& corpus,
                    const MsOptions& options) {
  MsReport report{entry.pattern, {}, {}, 0.0};
  if (!entry.pattern.has_slots()) return report;
  const auto picks = SampledOccurrences(entry, options);
  const std::size_t n = picks.size();
  std::vector<std::vector<WordId>> seqs;
  seqs.reserve(n);
  for (std::size_t p : picks) {
    const auto s = entry.occurrences[p].sentence_index;
    if (s >= corpus.sources.size()) {
      throw DataError("occurrence of '" + entry.pattern.text() +
                      "' refers to sentence " + std::to_string(s) +
                      " outside the corpus");
    }
    report.sentences.push_back(s);
    seqs.push_back(corpus.sources[s]);
  }
  if (n < 2) return report;

  const auto nn = AllNearestNeighbors(seqs);
  std::int64_t total = 0;
  report.deltas.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t delta =
        std::llabs(corpus.target_lengths[report.sentences[i]] -
                   corpus.target_lengths[report.sentences[nn[i]]]);
    report.deltas.push_back(delta);
    total += delta;
  }
  report.score = static_cast<double>(total) / static_cast<double>(n);
  return report;
}

}  // namespace

std::size_t NearestNeighbor(std::size_t i, std::span<const Sentence> sources) {
  if (sources.size() < 2) {
    throw DataError("nearest neighbour needs at least two sources");
  }
  if (i >= sources.size()) throw DataError("nearest neighbour index out of range");
  std::size_t best = sources.size();
  std::size_t best_d = std::numeric_limits<std::size_t>::max();
  for (std::size_t j = 0; j < sources.size(); ++j) {
    if (j == i) continue;
    const std::size_t d = Levenshtein(sources[i], sources[j]);
    if (d < best_d) {
      best_d = d;
      best = j;
    }
  }
  return best;
}

MsReport MisalignmentScore(const Pattern& pattern, const CandidateTable& table,
                           const ParallelCorpus& corpus,
                           const MsOptions& options) {
  const CandidateEntry* entry = table.Find(pattern);
  if (entry == nullptr) throw DataError("pattern not in table: " + pattern.text());
  if (pattern.has_slots() && entry->occurrences.empty()) {
    throw DataError("table has no occurrence lists; rebuild it from the corpus");
  }
  return ScoreEntry(*entry, InternedCorpus(corpus), options);
}

CandidateTable AnnotateTable(const CandidateTable& table,
                             const ParallelCorpus& corpus,
                             const MsOptions& options) {
  const InternedCorpus interned(corpus);
  const auto& entries = table.entries();
  std::vector<double> ms(entries.size(), 0.0);
  ParallelFor(
      entries.size(),
      [&](std::size_t i) {
        const auto& e = entries[i];
        if (!e.pattern.has_slots()) return;
        if (e.occurrences.empty()) {
          throw DataError("table has no occurrence lists; rebuild it from the corpus");
        }
        ms[i] = ScoreEntry(e, interned, options).score;
      },
      options.threads);
  return table.WithMs(ms);
}

}  // namespace cxmine
