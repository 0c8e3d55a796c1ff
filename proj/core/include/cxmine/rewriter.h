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

// Slot abstraction of parallel data and its inverse.
//
//   look opposite left twice and walk twice
//     -> ( W_1 opposite W_2 twice ) and ( W_3 twice )
//        W_1=look W_2=left W_3=walk
//
// Target tokens whose lexicon source word is bound to a slot in the same
// sentence are replaced by that slot token; Unslotify() maps them back.

#ifndef CXMINE_REWRITER_H_
#define CXMINE_REWRITER_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cxmine/corpus.h"
#include "cxmine/segmenter.h"

namespace cxmine {

inline constexpr std::string_view kOpenMarker = "(";
inline constexpr std::string_view kCloseMarker = ")";

// `W_n` for n >= 1.
std::string SlotToken(std::size_t n);
// n for a well-formed `W_n`, nullopt otherwise.
std::optional<std::size_t> SlotNumber(std::string_view token);

// W_1..W_k bound to words, numbered densely left to right.
class SlotMapping {
 public:
  SlotMapping() = default;

  // Appends W_{size()+1} -> word and returns the slot token.
  const std::string& Bind(Token word);

  std::optional<Token> WordFor(std::string_view slot_token) const;
  // Lowest-numbered slot bound to `word`.
  std::optional<std::string> SlotFor(const Token& word) const;

  const std::vector<std::pair<std::string, Token>>& assignments() const {
    return assignments_;
  }
  std::size_t size() const { return assignments_.size(); }
  bool empty() const { return assignments_.empty(); }

  // `W_1=look W_2=left`; empty string for an empty mapping.
  std::string ToString() const;
  // Throws DataError unless slots are exactly W_1..W_k in order.
  static SlotMapping Parse(std::string_view line);

  bool operator==(const SlotMapping&) const = default;

 private:
  std::vector<std::pair<std::string, Token>> assignments_;
};

struct SlotifyOptions {
  // Wrap every pattern use of two or more elements in `(` ... `)`.
  bool boundary_markers = true;
};

struct SlottedSource {
  Sentence tokens;
  SlotMapping mapping;
};

SlottedSource Slotify(const Segmentation& segmentation,
                      const SlotifyOptions& options = {});

Sentence RewriteTarget(const Sentence& target, const SlotMapping& mapping,
                       const Lexicon& lexicon);

// Slot tokens bound to a word with a lexicon image become that image; any
// other token, including unknown slots, is copied.
Sentence Unslotify(const Sentence& predicted, const SlotMapping& mapping,
                   const Lexicon& lexicon);

// Inverse of Slotify() on the source side: fillers substituted back,
// boundary markers dropped.
Sentence RestoreSource(const Sentence& rewritten, const SlotMapping& mapping);

// Sentences sharing a type differ only in their slot fillers.
std::string SentenceType(const Sentence& rewritten_source);

// Line-aligned rewritten corpus: one entry per input pair.
struct RewrittenCorpus {
  std::vector<Sentence> sources;
  std::vector<Sentence> targets;
  std::vector<SlotMapping> mappings;
};

// Requires segmentations.size() == corpus.size(); throws DataError otherwise.
RewrittenCorpus RewriteCorpus(const ParallelCorpus& corpus,
                              const std::vector<Segmentation>& segmentations,
                              const Lexicon& lexicon,
                              const SlotifyOptions& options = {});

std::string SerializeMappings(const std::vector<SlotMapping>& mappings);
std::vector<SlotMapping> LoadMappings(std::string_view text);

}  // namespace cxmine

#endif  // CXMINE_REWRITER_H_
