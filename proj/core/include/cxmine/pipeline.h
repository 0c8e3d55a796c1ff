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

// End-to-end preprocessing:
//
//   mine(train) -> annotate ms -> segment(train), segment(test)
//     -> slotify + rewrite -> optional subsample -> write artifacts
//
// Files written to output_dir:
//   config.txt        effective configuration
//   table.tsv         annotated candidate table
//   lexicon.tsv       bidirectional lexicon
//   {train,test}.seg  segmentations
//   {train,test}.src  rewritten sources
//   {train,test}.tgt  rewritten targets
//   {train,test}.map  slot mappings
//   stats.txt         pipeline statistics over the training side
//   train.k<K>.{src,tgt,map} and subsample.tsv when k is set

#ifndef CXMINE_PIPELINE_H_
#define CXMINE_PIPELINE_H_

#include <string>
#include <vector>

#include "cxmine/candidates.h"
#include "cxmine/config.h"
#include "cxmine/corpus.h"
#include "cxmine/evalmetrics.h"
#include "cxmine/rewriter.h"
#include "cxmine/segmenter.h"
#include "cxmine/subsampler.h"

namespace cxmine {

// Table mined from `train` and annotated with misalignment scores.
CandidateTable MineTable(const ParallelCorpus& train, const PipelineConfig& config);

struct PreparedSplit {
  std::vector<Segmentation> segmentations;
  RewrittenCorpus rewritten;
};

PreparedSplit PrepareSplit(const ParallelCorpus& corpus, const CandidateTable& table,
                           const Lexicon& lexicon, const PipelineConfig& config);

// Writes `<prefix>.src`, `<prefix>.tgt`, `<prefix>.map`.
void WriteRewritten(const std::string& prefix, const RewrittenCorpus& rewritten);
// Reads the three files written by WriteRewritten(); throws DataError when
// they are not line-aligned.
RewrittenCorpus ReadRewritten(const std::string& prefix);

// Rows of `rewritten` at `indices`, in that order.
RewrittenCorpus SelectRows(const RewrittenCorpus& rewritten,
                           const std::vector<std::size_t>& indices);

std::vector<std::string> TypeKeys(const RewrittenCorpus& rewritten);

struct PipelineResult {
  CandidateTable table;
  Lexicon lexicon;
  ParallelCorpus train;
  ParallelCorpus test;
  PreparedSplit train_prepared;
  PreparedSplit test_prepared;
  PipelineStats stats;
  std::vector<SubsetRow> subsets;
  // Paths written, in write order.
  std::vector<std::string> files;
};

// Loads train_src/test_src, runs every stage and writes the artifacts.
// Throws ConfigError for missing keys and DataError for unreadable or
// malformed inputs. Output bytes depend only on the inputs and config.
PipelineResult RunPipeline(const PipelineConfig& config);

// Same stages on in-memory corpora; writes only when output_dir is set.
PipelineResult RunPipeline(const PipelineConfig& config, ParallelCorpus train,
                           ParallelCorpus test);

}  // namespace cxmine

#endif  // CXMINE_PIPELINE_H_
