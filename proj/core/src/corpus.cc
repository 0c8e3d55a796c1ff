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

#include "cxmine/corpus.h"

#include "cxmine/errors.h"
#include "cxmine/util.h"

namespace cxmine {

namespace {

constexpr std::string_view kIn = "IN:";
constexpr std::string_view kOut = "OUT:";

bool IsBlank(std::string_view line) {
  return line.find_first_not_of(" \t") == std::string_view::npos;
}

std::string ConflictMessage(const Token& a_src, const Token& a_tgt,
                            const Token& b_src, const Token& b_tgt) {
  return "conflicting lexicon rules: " + a_src + " -> " + a_tgt + " and " +
         b_src + " -> " + b_tgt;
}

}  // namespace

ParallelCorpus::ParallelCorpus(std::vector<ParallelPair> pairs)
    : pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (pairs_[i].source.empty() || pairs_[i].target.empty()) {
      throw DataError("pair " + std::to_string(i) + " has an empty side");
    }
  }
}

std::vector<Sentence> ParallelCorpus::Sources() const {
  std::vector<Sentence> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.source);
  return out;
}

std::vector<Sentence> ParallelCorpus::Targets() const {
  std::vector<Sentence> out;
  out.reserve(pairs_.size());
  for (const auto& p : pairs_) out.push_back(p.target);
  return out;
}

ParallelCorpus LoadScanFile(std::string_view text) {
  std::vector<ParallelPair> pairs;
  auto lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (IsBlank(line)) continue;
    auto tokens = SplitWhitespace(line);
    if (tokens.empty() || tokens.front() != kIn) {
      throw ParseError("missing 'IN:' marker", line_no);
    }
    std::size_t out_pos = 0;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      if (tokens[t] == kOut) {
        out_pos = t;
        break;
      }
    }
    if (out_pos == 0) throw ParseError("missing 'OUT:' marker", line_no);
    ParallelPair pair;
    pair.source.assign(tokens.begin() + 1, tokens.begin() + out_pos);
    pair.target.assign(tokens.begin() + out_pos + 1, tokens.end());
    if (pair.source.empty()) throw ParseError("empty source side", line_no);
    if (pair.target.empty()) throw ParseError("empty target side", line_no);
    pairs.push_back(std::move(pair));
  }
  return ParallelCorpus(std::move(pairs));
}

ParallelCorpus LoadScanPath(const std::string& path) {
  try {
    return LoadScanFile(ReadFile(path));
  } catch (const ParseError& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::string SerializeScan(const ParallelCorpus& corpus) {
  std::string out;
  for (const auto& pair : corpus.pairs()) {
    out += kIn;
    out += ' ';
    out += Join(pair.source, " ");
    out += ' ';
    out += kOut;
    out += ' ';
    out += Join(pair.target, " ");
    out += '\n';
  }
  return out;
}

std::vector<Sentence> LoadSentences(std::string_view text, bool allow_empty) {
  std::vector<Sentence> out;
  auto lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    auto tokens = SplitWhitespace(lines[i]);
    if (tokens.empty() && !allow_empty) {
      throw ParseError("empty line", i + 1);
    }
    out.push_back(std::move(tokens));
  }
  return out;
}

std::string SerializeSentences(const std::vector<Sentence>& sentences) {
  std::string out;
  for (const auto& s : sentences) {
    out += Join(s, " ");
    out += '\n';
  }
  return out;
}

std::optional<LexiconMode> ParseLexiconMode(std::string_view name) {
  if (name == "strict") return LexiconMode::kStrict;
  if (name == "extended") return LexiconMode::kExtended;
  return std::nullopt;
}

std::string_view LexiconModeName(LexiconMode mode) {
  return mode == LexiconMode::kStrict ? "strict" : "extended";
}

void Lexicon::Add(const Token& source_word, const Token& target_token) {
  if (auto it = forward_.find(source_word); it != forward_.end()) {
    if (it->second == target_token) return;
    throw LexiconConflictError(
        ConflictMessage(source_word, it->second, source_word, target_token));
  }
  if (auto it = reverse_.find(target_token); it != reverse_.end()) {
    throw LexiconConflictError(
        ConflictMessage(it->second, target_token, source_word, target_token));
  }
  forward_.emplace(source_word, target_token);
  reverse_.emplace(target_token, source_word);
}

std::optional<Token> Lexicon::Forward(const Token& source_word) const {
  auto it = forward_.find(source_word);
  if (it == forward_.end()) return std::nullopt;
  return it->second;
}

std::optional<Token> Lexicon::Reverse(const Token& target_token) const {
  auto it = reverse_.find(target_token);
  if (it == reverse_.end()) return std::nullopt;
  return it->second;
}

Lexicon MineLexicon(const ParallelCorpus& corpus, LexiconMode mode) {
  if (corpus.empty()) throw DataError("cannot mine a lexicon from an empty corpus");
  Lexicon lexicon;
  for (const auto& pair : corpus.pairs()) {
    if (pair.target.size() != 1) continue;
    if (pair.source.size() == 1) {
      lexicon.Add(pair.source[0], pair.target[0]);
    } else if (mode == LexiconMode::kExtended && pair.source.size() == 2 &&
               pair.source[0] == "turn") {
      lexicon.Add(pair.source[1], pair.target[0]);
    }
  }
  return lexicon;
}

std::string SerializeLexicon(const Lexicon& lexicon) {
  std::string out;
  for (const auto& [src, tgt] : lexicon.entries()) {
    out += src;
    out += '\t';
    out += tgt;
    out += '\n';
  }
  return out;
}

Lexicon LoadLexicon(std::string_view text) {
  Lexicon lexicon;
  auto lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (IsBlank(lines[i])) continue;
    auto fields = SplitWhitespace(lines[i]);
    if (fields.size() != 2) throw ParseError("expected 'source<TAB>target'", i + 1);
    try {
      lexicon.Add(fields[0], fields[1]);
    } catch (const LexiconConflictError& e) {
      throw ParseError(e.what(), i + 1);
    }
  }
  return lexicon;
}

}  // namespace cxmine
