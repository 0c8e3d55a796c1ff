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

// Candidate pseudo-constructions: short spans of training sources, plus
// every variant of each span with one or more non-adjacent words replaced by
// a single-token slot, tabulated with counts and relative frequencies.

#ifndef CXMINE_CANDIDATES_H_
#define CXMINE_CANDIDATES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cxmine/corpus.h"

namespace cxmine {

inline constexpr std::string_view kSlotText = "_";

// A template of fixed words and slots, e.g. `_ around _ twice`. Each slot
// binds exactly one token.
//
// Invariants (checked on construction): non-empty, at least one fixed
// element, no two slots adjacent. The fixed word "_" is rejected since it
// would be indistinguishable from a slot in text form.
class Pattern {
 public:
  struct Element {
    bool slot = false;
    Token word;  // empty for slots

    static Element Fixed(Token w) { return {false, std::move(w)}; }
    static Element Slot() { return {true, {}}; }
    bool operator==(const Element&) const = default;
  };

  // Throws DataError when an invariant does not hold.
  explicit Pattern(std::vector<Element> elements);

  // Parses the text form (`_` for slots). Throws DataError.
  static Pattern Parse(std::string_view text);

  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t slot_count() const { return slot_count_; }
  bool has_slots() const { return slot_count_ > 0; }
  const std::string& text() const { return text_; }

  bool operator==(const Pattern& o) const { return text_ == o.text_; }
  auto operator<=>(const Pattern& o) const { return text_ <=> o.text_; }

 private:
  std::vector<Element> elements_;
  std::size_t slot_count_ = 0;
  std::string text_;
};

struct Occurrence {
  std::uint32_t sentence_index = 0;
  std::uint32_t start = 0;
  std::vector<Token> bindings;  // one per slot, left to right

  bool operator==(const Occurrence&) const = default;
};

struct CandidateEntry {
  Pattern pattern;
  std::int64_t count = 0;
  double prob = 0.0;
  // Empty for tables loaded from disk; the text format keeps only counts.
  std::vector<Occurrence> occurrences;
  // Misalignment score, filled by AnnotateTable().
  double ms = 0.0;
};

// Immutable after construction. Entries are kept in serialization order:
// descending prob, then pattern text.
class CandidateTable {
 public:
  CandidateTable() = default;
  // Sorts the entries and indexes them. Throws DataError on a duplicate
  // pattern, a non-positive count, or prob outside (0, 1].
  explicit CandidateTable(std::vector<CandidateEntry> entries,
                          std::size_t max_span_len = 0);

  const std::vector<CandidateEntry>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  const CandidateEntry* Find(std::string_view pattern_text) const;
  const CandidateEntry* Find(const Pattern& p) const { return Find(p.text()); }

  // Longest pattern that may be in the table.
  std::size_t max_span_len() const { return max_span_len_; }
  double MinProb() const;

  // Same patterns with ms replaced; `ms` is aligned with entries().
  CandidateTable WithMs(const std::vector<double>& ms) const;

 private:
  std::vector<CandidateEntry> entries_;
  std::unordered_map<std::string, std::size_t> index_;
  std::size_t max_span_len_ = 0;
};

struct Span {
  std::size_t start = 0;
  Sentence tokens;

  bool operator==(const Span&) const = default;
};

// Every contiguous span of length 1..max_len, ordered by start, then length.
std::vector<Span> ExtractSpans(const Sentence& sentence, std::size_t max_len);

// The unmasked pattern first, then each non-empty set of non-adjacent
// positions (not covering the whole span) in increasing bitmask order.
// max_slots == 0 means no cap beyond non-adjacency.
std::vector<Pattern> GenerateMaskedVariants(const Sentence& span,
                                            std::size_t max_slots = 0);

// Text forms of GenerateMaskedVariants() over sentence[start, start + len),
// without building Pattern objects. Same order.
std::vector<std::string> MaskedVariantTexts(const Sentence& sentence,
                                            std::size_t start, std::size_t len,
                                            std::size_t max_slots = 0);

// Bindings when `pattern` matches `sentence` at `start`; nullopt otherwise
// (including when the pattern would run past the end).
std::optional<std::vector<Token>> Match(const Pattern& pattern,
                                        const Sentence& sentence,
                                        std::size_t start);

struct TableOptions {
  std::size_t max_span_len = 4;
  std::size_t max_slots = 0;
  // Applies to slotted patterns only; slot-free spans are always kept.
  std::int64_t min_count = 2;
};

// Throws DataError on an empty corpus or invalid options.
CandidateTable BuildTable(const ParallelCorpus& corpus,
                          const TableOptions& options = {});

// `<pattern>\t<count>\t<prob>\t<ms>` per line in table order. Numbers use the
// shortest exact decimal form, so loading gives back identical values.
std::string SerializeTable(const CandidateTable& table);
// Throws ParseError. Loaded entries carry no occurrences.
CandidateTable LoadTable(std::string_view text);

}  // namespace cxmine

#endif  // CXMINE_CANDIDATES_H_
