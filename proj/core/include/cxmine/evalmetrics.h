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

#ifndef CXMINE_EVALMETRICS_H_
#define CXMINE_EVALMETRICS_H_

#include <array>
#include <string>
#include <vector>

#include "cxmine/candidates.h"
#include "cxmine/corpus.h"
#include "cxmine/segmenter.h"

namespace cxmine {

// Fraction of positions where prediction and gold agree token for token.
// Throws DataError on a length mismatch; 0 for empty lists.
double ExactMatchAccuracy(const std::vector<Sentence>& predictions,
                          const std::vector<Sentence>& golds);

struct PipelineStats {
  std::size_t pattern_count = 0;
  double slotted_fraction = 0.0;
  // Tokens covered by fallback words over all tokens.
  double fallback_token_rate = 0.0;
  double mean_segments = 0.0;
  std::size_t sentence_count = 0;
  // min, 25%, median, 75%, max of ms over slotted patterns (nearest rank).
  std::array<double, 5> ms_quantiles{};
};

PipelineStats ComputePipelineStats(const CandidateTable& table,
                                   const std::vector<Segmentation>& segmentations);

// `key=value` lines.
std::string FormatPipelineStats(const PipelineStats& stats);

}  // namespace cxmine

#endif  // CXMINE_EVALMETRICS_H_
