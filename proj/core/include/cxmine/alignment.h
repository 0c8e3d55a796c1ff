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

// Misalignment score of a pattern.
//
// For every occurrence s_i of pattern P, take the other occurrence whose
// source is closest in token edit distance (lowest index on ties) and
// record delta_i = |len(t_i) - len(t_nn)| over the paired targets. The
// score is the mean delta. Patterns whose slot fillers reshape the target
// get high scores; `_ around _ twice` scores near zero.

#ifndef CXMINE_ALIGNMENT_H_
#define CXMINE_ALIGNMENT_H_

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "cxmine/candidates.h"
#include "cxmine/corpus.h"

namespace cxmine {

// Token-level edit distance with unit costs. Single-row DP; rows up to 64
// cells live on the stack.
template <typename T>
std::size_t Levenshtein(std::span<const T> a, std::span<const T> b) {
  if (a.size() < b.size()) std::swap(a, b);
  constexpr std::size_t kStackRow = 64;
  std::size_t stack_row[kStackRow];
  std::vector<std::size_t> heap_row;
  std::size_t* row = stack_row;
  if (b.size() + 1 > kStackRow) {
    heap_row.resize(b.size() + 1);
    row = heap_row.data();
  }
  for (std::size_t j = 0; j <= b.size(); ++j) row[j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::size_t diag = row[0];
    row[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const std::size_t up = row[j];
      row[j] = std::min({up + 1, row[j - 1] + 1,
                         diag + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diag = up;
    }
  }
  return row[b.size()];
}

inline std::size_t Levenshtein(const Sentence& a, const Sentence& b) {
  return Levenshtein<Token>(std::span<const Token>(a), std::span<const Token>(b));
}

// Index j != i minimizing Levenshtein(sources[i], sources[j]); lowest j on
// ties. Throws DataError when fewer than two sources are given or i is out of
// range.
std::size_t NearestNeighbor(std::size_t i, std::span<const Sentence> sources);

struct MsReport {
  Pattern pattern;
  // Corpus sentence index of each scored occurrence, aligned with deltas.
  std::vector<std::uint32_t> sentences;
  std::vector<std::int64_t> deltas;
  double score = 0.0;  // mean of deltas, 0 when fewer than two occurrences
};

struct MsOptions {
  // Occurrence lists longer than this are subsampled before the quadratic
  // neighbour scan. 0 disables the cap.
  std::size_t sample_cap = 200;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // AnnotateTable only; 0 = hardware concurrency
};

// Throws DataError if the pattern is missing from the table or the table
// carries no occurrence lists (e.g. it was loaded from disk).
MsReport MisalignmentScore(const Pattern& pattern, const CandidateTable& table,
                           const ParallelCorpus& corpus,
                           const MsOptions& options = {});

// Table with every slotted pattern's ms filled; slot-free patterns get 0.
// The result does not depend on the thread count.
CandidateTable AnnotateTable(const CandidateTable& table,
                             const ParallelCorpus& corpus,
                             const MsOptions& options = {});

}  // namespace cxmine

#endif  // CXMINE_ALIGNMENT_H_
