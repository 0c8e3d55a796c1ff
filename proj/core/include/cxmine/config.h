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

// Declarative pipeline configuration, read from `key=value` text. Blank lines
// and lines starting with '#' are ignored.
//
//   train_src=data/tasks_train_addprim_jump.txt
//   test_src=data/tasks_test_addprim_jump.txt
//   output_dir=out/add_jump
//   lambda_ms=0.1
//   k=1,3,5,10

#ifndef CXMINE_CONFIG_H_
#define CXMINE_CONFIG_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cxmine/alignment.h"
#include "cxmine/candidates.h"
#include "cxmine/corpus.h"
#include "cxmine/rewriter.h"
#include "cxmine/segmenter.h"

namespace cxmine {

struct PipelineConfig {
  // File paths have no defaults.
  std::optional<std::string> train_src;
  std::optional<std::string> test_src;
  std::optional<std::string> output_dir;

  std::size_t max_span_len = 4;
  std::size_t max_slots = 0;  // 0 = unbounded up to non-adjacency
  std::int64_t min_count = 2;
  double lambda_ms = 0.1;
  std::size_t beam_width = 16;
  std::optional<double> fallback_logprob;  // nullopt = auto
  std::size_t ms_sample_cap = 200;
  LexiconMode lexicon_mode = LexiconMode::kExtended;
  bool boundary_markers = true;
  std::uint64_t seed = 0;
  std::vector<std::size_t> k;  // subsample quotas; empty = no subsampling
  unsigned threads = 0;        // 0 = hardware concurrency

  // Sets one key from its text value. Throws ConfigError naming the key on
  // an unknown key or a malformed value.
  void Set(std::string_view key, std::string_view value);

  // Applies every line of `text`. Throws ConfigError with the line number.
  void Merge(std::string_view text);

  // Value of a required path key; throws ConfigError naming the key.
  const std::string& Require(std::string_view key) const;

  // All keys in canonical order, `key=value` per line. Unset paths are
  // omitted.
  std::string ToString() const;

  TableOptions table_options() const;
  MsOptions ms_options() const;
  BeamConfig beam_config() const;
  SlotifyOptions slotify_options() const;
};

// Keys accepted by PipelineConfig::Set, in canonical order.
const std::vector<std::string_view>& ConfigKeys();

PipelineConfig LoadConfigText(std::string_view text);
PipelineConfig LoadConfigPath(const std::string& path);

}  // namespace cxmine

#endif  // CXMINE_CONFIG_H_
