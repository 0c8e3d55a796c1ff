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

// cxmine: mine pseudo-constructions from SCAN-format data and rewrite it into
// slot-abstracted form.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cxmine/alignment.h"
#include "cxmine/candidates.h"
#include "cxmine/config.h"
#include "cxmine/corpus.h"
#include "cxmine/errors.h"
#include "cxmine/evalmetrics.h"
#include "cxmine/pipeline.h"
#include "cxmine/rewriter.h"
#include "cxmine/scan_oracle.h"
#include "cxmine/segmenter.h"
#include "cxmine/subsampler.h"
#include "cxmine/util.h"

namespace {

using namespace cxmine;

constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

struct CommonOptions {
  std::string config_path;
  std::vector<std::string> overrides;

  PipelineConfig Load() const {
    PipelineConfig config;
    if (!config_path.empty()) config.Merge(ReadConfigFile());
    for (const auto& kv : overrides) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos) {
        throw ConfigError("--set expects key=value, got '" + kv + "'");
      }
      config.Set(kv.substr(0, eq), kv.substr(eq + 1));
    }
    return config;
  }

 private:
  std::string ReadConfigFile() const {
    try {
      return ReadFile(config_path);
    } catch (const DataError& e) {
      throw ConfigError(e.what());
    }
  }
};

void AddCommon(CLI::App* cmd, CommonOptions& common) {
  cmd->add_option("-c,--config", common.config_path, "key=value config file");
  cmd->add_option("-s,--set", common.overrides, "Override a config key (key=value)")
      ->take_all();
}

// Writes to `path`, or standard output when path is empty or "-".
void Emit(const std::string& path, std::string_view content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    std::cout.flush();
  } else {
    WriteFile(path, content);
  }
}

std::string Percent(double fraction) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", 100.0 * fraction);
  return buf;
}

// Gold targets may be SCAN lines or plain token lines.
std::vector<Sentence> LoadGold(const std::string& path) {
  const std::string text = ReadFile(path);
  for (auto line : SplitLines(text)) {
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    if (line.rfind("IN:", 0) == 0) return LoadScanFile(text).Targets();
    break;
  }
  return LoadSentences(text);
}

int RunOracle(const std::vector<std::string>& words, bool enumerate,
              const std::string& split_name, const std::string& out_dir,
              const std::string& check_path, std::uint64_t seed) {
  if (enumerate) {
    std::string out;
    for (const auto& cmd : scan::EnumerateCommands()) out += Join(cmd, " ") + "\n";
    Emit("", out);
    return 0;
  }
  if (!split_name.empty()) {
    auto split = scan::ParseSplit(split_name);
    if (!split) throw ConfigError("unknown split '" + split_name + "'");
    if (out_dir.empty()) throw ConfigError("--split requires --out-dir");
    std::filesystem::create_directories(out_dir);
    auto corpora = scan::GenerateSplit(*split, seed);
    const std::string tag =
        *split == scan::Split::kAddJump ? "addprim_jump" : "template_around_right";
    WriteFile(out_dir + "/tasks_train_" + tag + ".txt", SerializeScan(corpora.train));
    WriteFile(out_dir + "/tasks_test_" + tag + ".txt", SerializeScan(corpora.test));
    std::cout << "train\t" << corpora.train.size() << "\n"
              << "test\t" << corpora.test.size() << "\n";
    return 0;
  }
  if (!check_path.empty()) {
    const auto corpus = LoadScanPath(check_path);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (scan::Interpret(corpus[i].source) != corpus[i].target) {
        if (bad < 10) std::cerr << "mismatch at pair " << i + 1 << ": "
                                << Join(corpus[i].source, " ") << "\n";
        ++bad;
      }
    }
    std::cout << "pairs\t" << corpus.size() << "\nmismatches\t" << bad << "\n";
    return bad == 0 ? 0 : kExitData;
  }
  if (!words.empty()) {
    std::cout << Join(scan::Interpret(words), " ") << "\n";
    return 0;
  }
  std::string line;
  while (std::getline(std::cin, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::cout << Join(scan::Interpret(SplitWhitespace(line)), " ") << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Mine slot-based pseudo-constructions from SCAN-format data"};
  app.require_subcommand(1);
  CommonOptions common;

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Interpret SCAN commands (stdin or arguments)");
  std::vector<std::string> oracle_words;
  bool oracle_enumerate = false;
  std::string oracle_split, oracle_out_dir, oracle_check;
  std::uint64_t oracle_seed = 0;
  oracle->add_option("command", oracle_words, "Command words; reads stdin lines if absent");
  oracle->add_flag("--enumerate", oracle_enumerate, "Print every grammatical command");
  oracle->add_option("--split", oracle_split, "Generate a split: add_jump or around_right");
  oracle->add_option("--out-dir", oracle_out_dir, "Directory for --split files");
  oracle->add_option("--check", oracle_check, "Verify every pair of a SCAN file");
  oracle->add_option("--seed", oracle_seed, "Shuffle seed for --split");

  // mine
  auto* mine = app.add_subcommand("mine", "Build and annotate the candidate table");
  AddCommon(mine, common);
  std::string mine_train, mine_out, mine_lexicon_out;
  mine->add_option("--train", mine_train, "Training SCAN file (default: train_src)");
  mine->add_option("-o,--out", mine_out, "Table output (default stdout)");
  mine->add_option("--lexicon-out", mine_lexicon_out, "Also write the mined lexicon");

  // segment
  auto* segment = app.add_subcommand("segment", "Segment the sources of a SCAN file");
  AddCommon(segment, common);
  std::string seg_table, seg_input, seg_out;
  segment->add_option("--table", seg_table, "Table from `mine`")->required();
  segment->add_option("--input", seg_input, "SCAN file to segment")->required();
  segment->add_option("-o,--out", seg_out, "Output (default stdout)");

  // prepare
  auto* prepare = app.add_subcommand("prepare", "Write slot-abstracted .src/.tgt/.map files");
  AddCommon(prepare, common);
  std::string prep_table, prep_input, prep_lexicon, prep_train, prep_prefix;
  prepare->add_option("--table", prep_table, "Table from `mine`")->required();
  prepare->add_option("--input", prep_input, "SCAN file to rewrite")->required();
  prepare->add_option("--lexicon", prep_lexicon, "Lexicon file");
  prepare->add_option("--train", prep_train, "Mine the lexicon from this SCAN file instead");
  prepare->add_option("--out-prefix", prep_prefix, "Output prefix")->required();

  // subsample
  auto* subsample = app.add_subcommand("subsample", "Type-balanced subsets of prepared data");
  AddCommon(subsample, common);
  std::string sub_prefix, sub_out_prefix;
  subsample->add_option("--prefix", sub_prefix, "Prefix of prepared .src/.tgt/.map")->required();
  subsample->add_option("--out-prefix", sub_out_prefix, "Writes <out-prefix>.k<K>.*")->required();

  // eval
  auto* eval = app.add_subcommand("eval", "Exact-match accuracy after slot swap-back");
  std::string eval_pred, eval_gold, eval_mapping, eval_lexicon;
  eval->add_option("--pred", eval_pred, "Predictions, one per line")->required();
  eval->add_option("--gold", eval_gold, "Gold targets (plain or SCAN lines)")->required();
  eval->add_option("--mapping", eval_mapping, "Slot mapping file; enables swap-back");
  eval->add_option("--lexicon", eval_lexicon, "Lexicon file (required with --mapping)");

  // stats
  auto* stats = app.add_subcommand("stats", "Pipeline statistics");
  std::string stats_table, stats_segs;
  stats->add_option("--table", stats_table, "Table file")->required();
  stats->add_option("--segmentations", stats_segs, "Segmentation file")->required();

  // pipeline
  auto* pipeline = app.add_subcommand("pipeline", "Run every stage from a config");
  AddCommon(pipeline, common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*oracle) {
      return RunOracle(oracle_words, oracle_enumerate, oracle_split, oracle_out_dir,
                       oracle_check, oracle_seed);
    }
    if (*mine) {
      PipelineConfig config = common.Load();
      if (mine_train.empty()) mine_train = config.Require("train_src");
      const auto train = LoadScanPath(mine_train);
      Emit(mine_out, SerializeTable(MineTable(train, config)));
      if (!mine_lexicon_out.empty()) {
        WriteFile(mine_lexicon_out, SerializeLexicon(MineLexicon(train, config.lexicon_mode)));
      }
      return 0;
    }
    if (*segment) {
      PipelineConfig config = common.Load();
      const auto table = LoadTable(ReadFile(seg_table));
      const auto corpus = LoadScanPath(seg_input);
      Emit(seg_out, SerializeSegmentations(
                        SegmentCorpus(corpus, table, config.beam_config(), config.threads)));
      return 0;
    }
    if (*prepare) {
      PipelineConfig config = common.Load();
      if (prep_lexicon.empty() == prep_train.empty()) {
        throw ConfigError("prepare needs exactly one of --lexicon or --train");
      }
      const Lexicon lexicon =
          prep_lexicon.empty()
              ? MineLexicon(LoadScanPath(prep_train), config.lexicon_mode)
              : LoadLexicon(ReadFile(prep_lexicon));
      const auto table = LoadTable(ReadFile(prep_table));
      const auto corpus = LoadScanPath(prep_input);
      auto prepared = PrepareSplit(corpus, table, lexicon, config);
      WriteRewritten(prep_prefix, prepared.rewritten);
      WriteFile(prep_prefix + ".seg", SerializeSegmentations(prepared.segmentations));
      return 0;
    }
    if (*subsample) {
      PipelineConfig config = common.Load();
      if (config.k.empty()) throw ConfigError("subsample needs k (e.g. --set k=1,3,5)");
      const auto rewritten = ReadRewritten(sub_prefix);
      const auto keys = TypeKeys(rewritten);
      for (const auto& row : SubsetReport(keys, config.k, config.seed)) {
        const auto subset = TypeBalancedSubset(keys, row.k, config.seed);
        WriteRewritten(sub_out_prefix + ".k" + std::to_string(row.k),
                       SelectRows(rewritten, subset));
        std::cout << FormatSubsetRow(row) << "\n";
      }
      return 0;
    }
    if (*eval) {
      auto predictions = LoadSentences(ReadFile(eval_pred), /*allow_empty=*/true);
      const auto golds = LoadGold(eval_gold);
      if (!eval_mapping.empty()) {
        if (eval_lexicon.empty()) throw ConfigError("--mapping requires --lexicon");
        const auto mappings = LoadMappings(ReadFile(eval_mapping));
        const auto lexicon = LoadLexicon(ReadFile(eval_lexicon));
        if (mappings.size() != predictions.size()) {
          throw DataError("mapping count " + std::to_string(mappings.size()) +
                          " does not match prediction count " +
                          std::to_string(predictions.size()));
        }
        for (std::size_t i = 0; i < predictions.size(); ++i) {
          predictions[i] = Unslotify(predictions[i], mappings[i], lexicon);
        }
      }
      std::cout << Percent(ExactMatchAccuracy(predictions, golds)) << "\n";
      return 0;
    }
    if (*stats) {
      const auto table = LoadTable(ReadFile(stats_table));
      const auto segs = LoadSegmentations(ReadFile(stats_segs));
      std::cout << FormatPipelineStats(ComputePipelineStats(table, segs));
      return 0;
    }
    if (*pipeline) {
      auto result = RunPipeline(common.Load());
      for (const auto& path : result.files) std::cout << path << "\n";
      for (const auto& row : result.subsets) {
        std::cout << "subset\t" << FormatSubsetRow(row) << "\n";
      }
      return 0;
    }
  } catch (const ConfigError& e) {
    std::cerr << "cxmine: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "cxmine: " << e.what() << "\n";
    return kExitData;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "cxmine: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
