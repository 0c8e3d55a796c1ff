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

#include "cxmine/evalmetrics.h"

#include <algorithm>
#include <cmath>

#include "cxmine/errors.h"
#include "cxmine/util.h"

namespace cxmine {

double ExactMatchAccuracy(const std::vector<Sentence>& predictions,
                          const std::vector<Sentence>& golds) {
  if (predictions.size() != golds.size()) {
    throw DataError("prediction count " + std::to_string(predictions.size()) +
                    " does not match gold count " + std::to_string(golds.size()));
  }
  if (golds.empty()) return 0.0;
  std::size_t hits = 0;
  for (std::size_t i = 0; i < golds.size(); ++i) {
    if (predictions[i] == golds[i]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(golds.size());
}

PipelineStats ComputePipelineStats(const CandidateTable& table,
                                   const std::vector<Segmentation>& segmentations) {
  PipelineStats stats;
  stats.pattern_count = table.size();
  std::vector<double> ms;
  for (const auto& e : table.entries()) {
    if (e.pattern.has_slots()) ms.push_back(e.ms);
  }
  if (!table.empty()) {
    stats.slotted_fraction = static_cast<double>(ms.size()) / table.size();
  }
  if (!ms.empty()) {
    std::sort(ms.begin(), ms.end());
    constexpr double kLevels[] = {0.0, 0.25, 0.5, 0.75, 1.0};
    for (std::size_t q = 0; q < 5; ++q) {
      auto rank = static_cast<std::size_t>(std::ceil(kLevels[q] * ms.size()));
      stats.ms_quantiles[q] = ms[rank == 0 ? 0 : rank - 1];
    }
  }
  std::size_t tokens = 0;
  std::size_t fallback = 0;
  std::size_t segments = 0;
  for (const auto& s : segmentations) {
    for (const auto& seg : s.segments) {
      tokens += seg.length;
      if (!seg.is_pattern()) fallback += seg.length;
    }
    segments += s.segments.size();
  }
  stats.sentence_count = segmentations.size();
  if (tokens > 0) stats.fallback_token_rate = static_cast<double>(fallback) / tokens;
  if (!segmentations.empty()) {
    stats.mean_segments = static_cast<double>(segments) / segmentations.size();
  }
  return stats;
}

std::string FormatPipelineStats(const PipelineStats& stats) {
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };
  line("pattern_count", std::to_string(stats.pattern_count));
  line("slotted_fraction", FormatDouble(stats.slotted_fraction));
  line("sentence_count", std::to_string(stats.sentence_count));
  line("fallback_token_rate", FormatDouble(stats.fallback_token_rate));
  line("mean_segments", FormatDouble(stats.mean_segments));
  constexpr std::string_view kNames[] = {"ms_min", "ms_q25", "ms_median", "ms_q75",
                                         "ms_max"};
  for (std::size_t q = 0; q < 5; ++q) {
    line(kNames[q], FormatDouble(stats.ms_quantiles[q]));
  }
  return out;
}

}  // namespace cxmine
