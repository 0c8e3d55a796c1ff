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

#include "cxmine/config.h"

#include <algorithm>

#include "cxmine/errors.h"
#include "cxmine/util.h"

namespace cxmine {

namespace {

std::string Trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

[[noreturn]] void BadValue(std::string_view key, std::string_view value,
                           std::string_view expected) {
  throw ConfigError("config key '" + std::string(key) + "': invalid value '" +
                    std::string(value) + "' (expected " + std::string(expected) +
                    ")");
}

std::int64_t ToInt(std::string_view key, std::string_view value, std::int64_t min) {
  try {
    const long long v = ParseInt(value);
    if (v < min) BadValue(key, value, "an integer >= " + std::to_string(min));
    return v;
  } catch (const DataError&) {
    BadValue(key, value, "an integer");
  }
}

double ToDouble(std::string_view key, std::string_view value) {
  try {
    return ParseDouble(value);
  } catch (const DataError&) {
    BadValue(key, value, "a number");
  }
}

bool ToBool(std::string_view key, std::string_view value) {
  if (value == "on" || value == "true" || value == "1") return true;
  if (value == "off" || value == "false" || value == "0") return false;
  BadValue(key, value, "on or off");
}

}  // namespace

const std::vector<std::string_view>& ConfigKeys() {
  static const std::vector<std::string_view> keys = {
      "train_src",     "test_src",     "output_dir",       "max_span_len",
      "max_slots",     "min_count",    "lambda_ms",        "beam_width",
      "fallback_logprob", "ms_sample_cap", "lexicon_mode", "boundary_markers",
      "seed",          "k",            "threads"};
  return keys;
}

void PipelineConfig::Set(std::string_view key, std::string_view raw) {
  const std::string value = Trim(raw);
  if (key == "train_src" || key == "test_src" || key == "output_dir") {
    if (value.empty()) BadValue(key, value, "a path");
    if (key == "train_src") train_src = value;
    if (key == "test_src") test_src = value;
    if (key == "output_dir") output_dir = value;
  } else if (key == "max_span_len") {
    max_span_len = static_cast<std::size_t>(ToInt(key, value, 1));
    if (max_span_len > 16) BadValue(key, value, "an integer <= 16");
  } else if (key == "max_slots") {
    max_slots = value == "unbounded" ? 0 : static_cast<std::size_t>(ToInt(key, value, 0));
  } else if (key == "min_count") {
    min_count = ToInt(key, value, 1);
  } else if (key == "lambda_ms") {
    lambda_ms = ToDouble(key, value);
    if (!(lambda_ms >= 0.0)) BadValue(key, value, "a number >= 0");
  } else if (key == "beam_width") {
    beam_width = static_cast<std::size_t>(ToInt(key, value, 1));
  } else if (key == "fallback_logprob") {
    if (value == "auto") {
      fallback_logprob.reset();
    } else {
      fallback_logprob = ToDouble(key, value);
      if (!(*fallback_logprob < 0.0)) BadValue(key, value, "a negative number or auto");
    }
  } else if (key == "ms_sample_cap") {
    ms_sample_cap = static_cast<std::size_t>(ToInt(key, value, 0));
  } else if (key == "lexicon_mode") {
    auto mode = ParseLexiconMode(value);
    if (!mode) BadValue(key, value, "strict or extended");
    lexicon_mode = *mode;
  } else if (key == "boundary_markers") {
    boundary_markers = ToBool(key, value);
  } else if (key == "seed") {
    seed = static_cast<std::uint64_t>(ToInt(key, value, 0));
  } else if (key == "k") {
    std::vector<std::size_t> ks;
    std::string item;
    for (std::size_t i = 0; i <= value.size(); ++i) {
      if (i == value.size() || value[i] == ',') {
        item = Trim(item);
        if (!item.empty()) ks.push_back(static_cast<std::size_t>(ToInt(key, item, 1)));
        item.clear();
      } else {
        item += value[i];
      }
    }
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    k = std::move(ks);
  } else if (key == "threads") {
    threads = static_cast<unsigned>(ToInt(key, value, 0));
  } else {
    throw ConfigError("unknown config key '" + std::string(key) + "'");
  }
}

void PipelineConfig::Merge(std::string_view text) {
  auto lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string line = Trim(lines[i]);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("config line " + std::to_string(i + 1) +
                        ": expected key=value, got '" + line + "'");
    }
    try {
      Set(Trim(line.substr(0, eq)), line.substr(eq + 1));
    } catch (const ConfigError& e) {
      throw ConfigError("config line " + std::to_string(i + 1) + ": " + e.what());
    }
  }
}

const std::string& PipelineConfig::Require(std::string_view key) const {
  const std::optional<std::string>* slot = nullptr;
  if (key == "train_src") slot = &train_src;
  if (key == "test_src") slot = &test_src;
  if (key == "output_dir") slot = &output_dir;
  if (slot == nullptr) throw ConfigError("not a path key: '" + std::string(key) + "'");
  if (!slot->has_value()) {
    throw ConfigError("missing required config key '" + std::string(key) + "'");
  }
  return **slot;
}

std::string PipelineConfig::ToString() const {
  std::string out;
  auto line = [&out](std::string_view key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };
  if (train_src) line("train_src", *train_src);
  if (test_src) line("test_src", *test_src);
  if (output_dir) line("output_dir", *output_dir);
  line("max_span_len", std::to_string(max_span_len));
  line("max_slots", max_slots == 0 ? "unbounded" : std::to_string(max_slots));
  line("min_count", std::to_string(min_count));
  line("lambda_ms", FormatDouble(lambda_ms));
  line("beam_width", std::to_string(beam_width));
  line("fallback_logprob", fallback_logprob ? FormatDouble(*fallback_logprob) : "auto");
  line("ms_sample_cap", std::to_string(ms_sample_cap));
  line("lexicon_mode", std::string(LexiconModeName(lexicon_mode)));
  line("boundary_markers", boundary_markers ? "on" : "off");
  line("seed", std::to_string(seed));
  std::string ks;
  for (std::size_t i = 0; i < k.size(); ++i) {
    if (i > 0) ks += ',';
    ks += std::to_string(k[i]);
  }
  line("k", ks);
  return out;
}

TableOptions PipelineConfig::table_options() const {
  return {max_span_len, max_slots, min_count};
}

MsOptions PipelineConfig::ms_options() const {
  return {ms_sample_cap, seed, threads};
}

BeamConfig PipelineConfig::beam_config() const {
  return {beam_width, lambda_ms, fallback_logprob, seed};
}

SlotifyOptions PipelineConfig::slotify_options() const {
  return {boundary_markers};
}

PipelineConfig LoadConfigText(std::string_view text) {
  PipelineConfig config;
  config.Merge(text);
  return config;
}

PipelineConfig LoadConfigPath(const std::string& path) {
  return LoadConfigText(ReadFile(path));
}

}  // namespace cxmine
