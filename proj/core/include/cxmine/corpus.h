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

// Parallel command/action corpora in SCAN's line format and the singleton
// lexicon mined from them.
//
//   IN: jump twice OUT: I_JUMP I_JUMP
//
// Tokens are whitespace-separated and never empty. LF and CRLF line endings
// are accepted on input; LF is always written.

#ifndef CXMINE_CORPUS_H_
#define CXMINE_CORPUS_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cxmine {

using Token = std::string;
using Sentence = std::vector<Token>;

struct ParallelPair {
  Sentence source;
  Sentence target;

  bool operator==(const ParallelPair&) const = default;
};

// Ordered list of pairs; file order is preserved because occurrence indices
// and subsampling refer to positions.
class ParallelCorpus {
 public:
  ParallelCorpus() = default;
  // Throws DataError if any side of any pair is empty.
  explicit ParallelCorpus(std::vector<ParallelPair> pairs);

  const std::vector<ParallelPair>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const ParallelPair& operator[](std::size_t i) const { return pairs_[i]; }

  std::vector<Sentence> Sources() const;
  std::vector<Sentence> Targets() const;

  bool operator==(const ParallelCorpus&) const = default;

 private:
  std::vector<ParallelPair> pairs_;
};

// Parses SCAN text. Blank lines are skipped; line numbers in errors count
// them. Throws ParseError.
ParallelCorpus LoadScanFile(std::string_view text);
ParallelCorpus LoadScanPath(const std::string& path);
std::string SerializeScan(const ParallelCorpus& corpus);

// One sentence per line, whitespace separated. Used for target and
// prediction files. Throws ParseError on a blank line when !allow_empty.
std::vector<Sentence> LoadSentences(std::string_view text,
                                    bool allow_empty = false);
std::string SerializeSentences(const std::vector<Sentence>& sentences);

enum class LexiconMode { kStrict, kExtended };

std::optional<LexiconMode> ParseLexiconMode(std::string_view name);
std::string_view LexiconModeName(LexiconMode mode);

// Bidirectional singleton rules such as jump <-> I_JUMP. Both directions are
// functions; Add() rejects anything that would break that.
class Lexicon {
 public:
  // Adding an existing entry again is a no-op. A new target for a known
  // source (or a new source for a known target) throws LexiconConflictError.
  void Add(const Token& source_word, const Token& target_token);

  std::optional<Token> Forward(const Token& source_word) const;
  std::optional<Token> Reverse(const Token& target_token) const;

  std::size_t size() const { return forward_.size(); }
  bool empty() const { return forward_.empty(); }
  // Entries sorted by source word.
  const std::map<Token, Token>& entries() const { return forward_; }

  bool operator==(const Lexicon&) const = default;

 private:
  std::map<Token, Token> forward_;
  std::map<Token, Token> reverse_;
};

// strict: every distinct 1-token -> 1-token pair.
// extended: additionally (D, T) for every pair `turn D` -> [T].
// Throws DataError on an empty corpus and LexiconConflictError on
// conflicting rules.
Lexicon MineLexicon(const ParallelCorpus& corpus, LexiconMode mode);

// `source<TAB>target` per line, sorted by source.
std::string SerializeLexicon(const Lexicon& lexicon);
Lexicon LoadLexicon(std::string_view text);

}  // namespace cxmine

#endif  // CXMINE_CORPUS_H_
