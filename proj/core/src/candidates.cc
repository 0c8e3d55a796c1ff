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

#include "cxmine/candidates.h"

#include <algorithm>
#include <bit>
#include <limits>

#include "cxmine/errors.h"
#include "cxmine/util.h"

namespace cxmine {

namespace {

// Slot masks for a span of `len` tokens: bit i set means position i is a
// slot. 0 (unmasked) comes first.
std::vector<unsigned> SlotMasks(std::size_t len, std::size_t max_slots) {
  std::vector<unsigned> masks{0u};
  if (len == 0 || len >= 31) return masks;
  const unsigned full = (1u << len) - 1;
  for (unsigned m = 1; m < full; ++m) {
    if (m & (m >> 1)) continue;
    if (max_slots != 0 && static_cast<std::size_t>(std::popcount(m)) > max_slots) continue;
    masks.push_back(m);
  }
  return masks;
}

std::string MaskedText(const Sentence& sentence, std::size_t start,
                       std::size_t len, unsigned mask) {
  std::string text;
  for (std::size_t i = 0; i < len; ++i) {
    if (i > 0) text += ' ';
    if (mask & (1u << i)) {
      text += kSlotText;
    } else {
      text += sentence[start + i];
    }
  }
  return text;
}

Pattern MaskedPattern(const Sentence& sentence, std::size_t start,
                      std::size_t len, unsigned mask) {
  std::vector<Pattern::Element> elements;
  elements.reserve(len);
  for (std::size_t i = 0; i < len; ++i) {
    if (mask & (1u << i)) {
      elements.push_back(Pattern::Element::Slot());
    } else {
      elements.push_back(Pattern::Element::Fixed(sentence[start + i]));
    }
  }
  return Pattern(std::move(elements));
}

bool EntryOrder(const CandidateEntry& a, const CandidateEntry& b) {
  if (a.prob != b.prob) return a.prob > b.prob;
  return a.pattern.text() < b.pattern.text();
}

}  // namespace

Pattern::Pattern(std::vector<Element> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw DataError("pattern must not be empty");
  bool prev_slot = false;
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    const Element& e = elements_[i];
    if (e.slot) {
      if (prev_slot) throw DataError("pattern has adjacent slots");
      ++slot_count_;
    } else if (e.word.empty() || e.word == kSlotText ||
               e.word.find_first_of(" \t\r\n") != std::string::npos) {
      throw DataError("invalid fixed word in pattern: '" + e.word + "'");
    }
    prev_slot = e.slot;
    if (i > 0) text_ += ' ';
    text_ += e.slot ? std::string(kSlotText) : e.word;
  }
  if (slot_count_ == elements_.size()) {
    throw DataError("pattern needs at least one fixed word");
  }
}

Pattern Pattern::Parse(std::string_view text) {
  std::vector<Element> elements;
  for (auto& tok : SplitWhitespace(text)) {
    if (tok == kSlotText) {
      elements.push_back(Element::Slot());
    } else {
      elements.push_back(Element::Fixed(std::move(tok)));
    }
  }
  return Pattern(std::move(elements));
}

CandidateTable::CandidateTable(std::vector<CandidateEntry> entries,
                               std::size_t max_span_len)
    : entries_(std::move(entries)), max_span_len_(max_span_len) {
  std::sort(entries_.begin(), entries_.end(), EntryOrder);
  index_.reserve(entries_.size());
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (e.count <= 0) throw DataError("non-positive count for " + e.pattern.text());
    if (!(e.prob > 0.0 && e.prob <= 1.0)) {
      throw DataError("probability out of (0, 1] for " + e.pattern.text());
    }
    if (!(e.ms >= 0.0)) throw DataError("negative ms for " + e.pattern.text());
    if (!index_.emplace(e.pattern.text(), i).second) {
      throw DataError("duplicate pattern: " + e.pattern.text());
    }
    max_span_len_ = std::max(max_span_len_, e.pattern.size());
  }
}

const CandidateEntry* CandidateTable::Find(std::string_view pattern_text) const {
  auto it = index_.find(std::string(pattern_text));
  return it == index_.end() ? nullptr : &entries_[it->second];
}

double CandidateTable::MinProb() const {
  double lo = std::numeric_limits<double>::infinity();
  for (const auto& e : entries_) lo = std::min(lo, e.prob);
  return lo;
}

CandidateTable CandidateTable::WithMs(const std::vector<double>& ms) const {
  if (ms.size() != entries_.size()) throw DataError("ms vector size mismatch");
  std::vector<CandidateEntry> copy = entries_;
  for (std::size_t i = 0; i < copy.size(); ++i) copy[i].ms = ms[i];
  return CandidateTable(std::move(copy), max_span_len_);
}

std::vector<Span> ExtractSpans(const Sentence& sentence, std::size_t max_len) {
  std::vector<Span> spans;
  for (std::size_t start = 0; start < sentence.size(); ++start) {
    const std::size_t limit = std::min(max_len, sentence.size() - start);
    for (std::size_t len = 1; len <= limit; ++len) {
      spans.push_back({start, Sentence(sentence.begin() + start,
                                       sentence.begin() + start + len)});
    }
  }
  return spans;
}

std::vector<Pattern> GenerateMaskedVariants(const Sentence& span,
                                            std::size_t max_slots) {
  std::vector<Pattern> out;
  if (span.empty()) return out;
  for (unsigned mask : SlotMasks(span.size(), max_slots)) {
    out.push_back(MaskedPattern(span, 0, span.size(), mask));
  }
  return out;
}

std::vector<std::string> MaskedVariantTexts(const Sentence& sentence,
                                            std::size_t start, std::size_t len,
                                            std::size_t max_slots) {
  std::vector<std::string> out;
  if (len == 0 || start + len > sentence.size()) return out;
  for (unsigned mask : SlotMasks(len, max_slots)) {
    out.push_back(MaskedText(sentence, start, len, mask));
  }
  return out;
}

std::optional<std::vector<Token>> Match(const Pattern& pattern,
                                        const Sentence& sentence,
                                        std::size_t start) {
  if (start > sentence.size() || sentence.size() - start < pattern.size()) {
    return std::nullopt;
  }
  std::vector<Token> bindings;
  bindings.reserve(pattern.slot_count());
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    const auto& e = pattern.elements()[i];
    const Token& tok = sentence[start + i];
    if (e.slot) {
      bindings.push_back(tok);
    } else if (e.word != tok) {
      return std::nullopt;
    }
  }
  return bindings;
}

CandidateTable BuildTable(const ParallelCorpus& corpus,
                          const TableOptions& options) {
  if (corpus.empty()) throw DataError("cannot build a table from an empty corpus");
  if (options.max_span_len == 0) throw ConfigError("max_span_len must be >= 1");
  if (options.min_count < 1) throw ConfigError("min_count must be >= 1");

  std::vector<std::vector<unsigned>> masks_by_len(options.max_span_len + 1);
  for (std::size_t len = 1; len <= options.max_span_len; ++len) {
    masks_by_len[len] = SlotMasks(len, options.max_slots);
  }

  std::vector<CandidateEntry> entries;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t s = 0; s < corpus.size(); ++s) {
    const Sentence& sentence = corpus[s].source;
    for (std::size_t start = 0; start < sentence.size(); ++start) {
      const std::size_t limit = std::min(options.max_span_len, sentence.size() - start);
      for (std::size_t len = 1; len <= limit; ++len) {
        for (unsigned mask : masks_by_len[len]) {
          std::string key = MaskedText(sentence, start, len, mask);
          auto [it, inserted] = index.try_emplace(std::move(key), entries.size());
          if (inserted) {
            entries.push_back({MaskedPattern(sentence, start, len, mask), 0, 0.0, {}, 0.0});
          }
          Occurrence occ;
          occ.sentence_index = static_cast<std::uint32_t>(s);
          occ.start = static_cast<std::uint32_t>(start);
          for (std::size_t i = 0; i < len; ++i) {
            if (mask & (1u << i)) occ.bindings.push_back(sentence[start + i]);
          }
          entries[it->second].occurrences.push_back(std::move(occ));
        }
      }
    }
  }

  std::vector<CandidateEntry> kept;
  std::int64_t total = 0;
  for (auto& e : entries) {
    e.count = static_cast<std::int64_t>(e.occurrences.size());
    if (e.pattern.has_slots() && e.count < options.min_count) continue;
    total += e.count;
    kept.push_back(std::move(e));
  }
  for (auto& e : kept) {
    e.prob = static_cast<double>(e.count) / static_cast<double>(total);
  }
  return CandidateTable(std::move(kept), options.max_span_len);
}

std::string SerializeTable(const CandidateTable& table) {
  std::string out;
  for (const auto& e : table.entries()) {
    out += e.pattern.text();
    out += '\t';
    out += std::to_string(e.count);
    out += '\t';
    out += FormatDouble(e.prob);
    out += '\t';
    out += FormatDouble(e.ms);
    out += '\n';
  }
  return out;
}

CandidateTable LoadTable(std::string_view text) {
  std::vector<CandidateEntry> entries;
  auto lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    if (line.empty()) continue;
    std::vector<std::string_view> fields;
    std::size_t pos = 0;
    while (true) {
      std::size_t tab = line.find('\t', pos);
      fields.push_back(line.substr(pos, tab == std::string_view::npos ? tab : tab - pos));
      if (tab == std::string_view::npos) break;
      pos = tab + 1;
    }
    if (fields.size() != 4) {
      throw ParseError("expected 4 tab-separated fields", i + 1);
    }
    try {
      CandidateEntry e{Pattern::Parse(fields[0]), ParseInt(fields[1]),
                       ParseDouble(fields[2]), {}, ParseDouble(fields[3])};
      entries.push_back(std::move(e));
    } catch (const DataError& err) {
      throw ParseError(err.what(), i + 1);
    }
  }
  return CandidateTable(std::move(entries));
}

}  // namespace cxmine
