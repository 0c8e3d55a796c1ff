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

#include "cxmine/pipeline.h"

#include <filesystem>

#include "cxmine/alignment.h"
#include "cxmine/errors.h"
#include "cxmine/util.h"

namespace cxmine {

namespace fs = std::filesystem;

CandidateTable MineTable(const ParallelCorpus& train, const PipelineConfig& config) {
  CandidateTable raw = BuildTable(train, config.table_options());
  return AnnotateTable(raw, train, config.ms_options());
}

PreparedSplit PrepareSplit(const ParallelCorpus& corpus, const CandidateTable& table,
                           const Lexicon& lexicon, const PipelineConfig& config) {
  PreparedSplit out;
  out.segmentations = SegmentCorpus(corpus, table, config.beam_config(), config.threads);
  out.rewritten =
      RewriteCorpus(corpus, out.segmentations, lexicon, config.slotify_options());
  return out;
}

void WriteRewritten(const std::string& prefix, const RewrittenCorpus& rewritten) {
  WriteFile(prefix + ".src", SerializeSentences(rewritten.sources));
  WriteFile(prefix + ".tgt", SerializeSentences(rewritten.targets));
  WriteFile(prefix + ".map", SerializeMappings(rewritten.mappings));
}

RewrittenCorpus ReadRewritten(const std::string& prefix) {
  RewrittenCorpus out;
  try {
    out.sources = LoadSentences(ReadFile(prefix + ".src"));
    out.targets = LoadSentences(ReadFile(prefix + ".tgt"));
    out.mappings = LoadMappings(ReadFile(prefix + ".map"));
  } catch (const ParseError& e) {
    throw DataError(prefix + ": " + e.what());
  }
  if (out.sources.size() != out.targets.size() ||
      out.sources.size() != out.mappings.size()) {
    throw DataError(prefix + ": .src/.tgt/.map line counts differ (" +
                    std::to_string(out.sources.size()) + "/" +
                    std::to_string(out.targets.size()) + "/" +
                    std::to_string(out.mappings.size()) + ")");
  }
  return out;
}

RewrittenCorpus SelectRows(const RewrittenCorpus& rewritten,
                           const std::vector<std::size_t>& indices) {
  RewrittenCorpus out;
  for (std::size_t i : indices) {
    out.sources.push_back(rewritten.sources.at(i));
    out.targets.push_back(rewritten.targets.at(i));
    out.mappings.push_back(rewritten.mappings.at(i));
  }
  return out;
}

std::vector<std::string> TypeKeys(const RewrittenCorpus& rewritten) {
  std::vector<std::string> keys;
  keys.reserve(rewritten.sources.size());
  for (const auto& s : rewritten.sources) keys.push_back(SentenceType(s));
  return keys;
}

PipelineResult RunPipeline(const PipelineConfig& config) {
  const std::string& train_path = config.Require("train_src");
  const std::string& test_path = config.Require("test_src");
  config.Require("output_dir");
  return RunPipeline(config, LoadScanPath(train_path), LoadScanPath(test_path));
}

PipelineResult RunPipeline(const PipelineConfig& config, ParallelCorpus train,
                           ParallelCorpus test) {
  PipelineResult result;
  result.train = std::move(train);
  result.test = std::move(test);
  result.table = MineTable(result.train, config);
  result.lexicon = MineLexicon(result.train, config.lexicon_mode);
  result.train_prepared = PrepareSplit(result.train, result.table, result.lexicon, config);
  result.test_prepared = PrepareSplit(result.test, result.table, result.lexicon, config);
  result.stats = ComputePipelineStats(result.table, result.train_prepared.segmentations);

  const auto keys = TypeKeys(result.train_prepared.rewritten);
  if (!config.k.empty()) result.subsets = SubsetReport(keys, config.k, config.seed);

  if (!config.output_dir) return result;
  const fs::path dir(*config.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw DataError("cannot create output directory " + dir.string() + ": " + ec.message());

  auto write = [&](const std::string& name, std::string_view content) {
    const std::string path = (dir / name).string();
    WriteFile(path, content);
    result.files.push_back(path);
  };
  auto write_rewritten = [&](const std::string& stem, const RewrittenCorpus& rc) {
    write(stem + ".src", SerializeSentences(rc.sources));
    write(stem + ".tgt", SerializeSentences(rc.targets));
    write(stem + ".map", SerializeMappings(rc.mappings));
  };

  write("config.txt", config.ToString());
  write("table.tsv", SerializeTable(result.table));
  write("lexicon.tsv", SerializeLexicon(result.lexicon));
  write("train.seg", SerializeSegmentations(result.train_prepared.segmentations));
  write("test.seg", SerializeSegmentations(result.test_prepared.segmentations));
  write_rewritten("train", result.train_prepared.rewritten);
  write_rewritten("test", result.test_prepared.rewritten);
  write("stats.txt", FormatPipelineStats(result.stats));

  if (!config.k.empty()) {
    std::string report;
    for (const auto& row : result.subsets) {
      auto subset = TypeBalancedSubset(keys, row.k, config.seed);
      write_rewritten("train.k" + std::to_string(row.k),
                      SelectRows(result.train_prepared.rewritten, subset));
      report += FormatSubsetRow(row);
      report += '\n';
    }
    write("subsample.tsv", report);
  }
  return result;
}

}  // namespace cxmine
