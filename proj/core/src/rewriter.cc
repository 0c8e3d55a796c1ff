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

#include "cxmine/rewriter.h"

#include <charconv>

#include "cxmine/errors.h"
#include "cxmine/util.h"

namespace cxmine {

std::string SlotToken(std::size_t n) { return "W_" + std::to_string(n); }

std::optional<std::size_t> SlotNumber(std::string_view token) {
  if (token.size() < 3 || token.substr(0, 2) != "W_") return std::nullopt;
  std::string_view digits = token.substr(2);
  if (digits.front() == '0') return std::nullopt;
  std::size_t n = 0;
  auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
  if (ec != std::errc() || end != digits.data() + digits.size()) return std::nullopt;
  return n;
}

const std::string& SlotMapping::Bind(Token word) {
  assignments_.emplace_back(SlotToken(assignments_.size() + 1), std::move(word));
  return assignments_.back().first;
}

std::optional<Token> SlotMapping::WordFor(std::string_view slot_token) const {
  auto n = SlotNumber(slot_token);
  if (!n || *n > assignments_.size()) return std::nullopt;
  return assignments_[*n - 1].second;
}

std::optional<std::string> SlotMapping::SlotFor(const Token& word) const {
  for (const auto& [slot, w] : assignments_) {
    if (w == word) return slot;
  }
  return std::nullopt;
}

std::string SlotMapping::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < assignments_.size(); ++i) {
    if (i > 0) out += ' ';
    out += assignments_[i].first;
    out += '=';
    out += assignments_[i].second;
  }
  return out;
}

SlotMapping SlotMapping::Parse(std::string_view line) {
  SlotMapping mapping;
  for (const auto& item : SplitWhitespace(line)) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos || eq + 1 == item.size()) {
      throw DataError("malformed slot assignment '" + item + "'");
    }
    std::string slot = item.substr(0, eq);
    if (slot != SlotToken(mapping.size() + 1)) {
      throw DataError("expected " + SlotToken(mapping.size() + 1) + ", got '" +
                      slot + "'");
    }
    mapping.Bind(item.substr(eq + 1));
  }
  return mapping;
}

SlottedSource Slotify(const Segmentation& segmentation,
                      const SlotifyOptions& options) {
  SlottedSource out;
  for (const auto& seg : segmentation.segments) {
    if (!seg.is_pattern()) {
      out.tokens.push_back(seg.word);
      continue;
    }
    const bool mark = options.boundary_markers && seg.pattern->size() > 1;
    if (mark) out.tokens.emplace_back(kOpenMarker);
    std::size_t b = 0;
    for (const auto& e : seg.pattern->elements()) {
      if (e.slot) {
        out.tokens.push_back(out.mapping.Bind(seg.bindings[b++]));
      } else {
        out.tokens.push_back(e.word);
      }
    }
    if (mark) out.tokens.emplace_back(kCloseMarker);
  }
  return out;
}

Sentence RewriteTarget(const Sentence& target, const SlotMapping& mapping,
                       const Lexicon& lexicon) {
  if (mapping.empty()) return target;
  Sentence out;
  out.reserve(target.size());
  for (const auto& tok : target) {
    std::optional<std::string> slot;
    if (auto word = lexicon.Reverse(tok)) slot = mapping.SlotFor(*word);
    out.push_back(slot ? *slot : tok);
  }
  return out;
}

Sentence Unslotify(const Sentence& predicted, const SlotMapping& mapping,
                   const Lexicon& lexicon) {
  Sentence out;
  out.reserve(predicted.size());
  for (const auto& tok : predicted) {
    std::optional<Token> image;
    if (auto word = mapping.WordFor(tok)) image = lexicon.Forward(*word);
    out.push_back(image ? *image : tok);
  }
  return out;
}

Sentence RestoreSource(const Sentence& rewritten, const SlotMapping& mapping) {
  Sentence out;
  out.reserve(rewritten.size());
  for (const auto& tok : rewritten) {
    if (tok == kOpenMarker || tok == kCloseMarker) continue;
    auto word = mapping.WordFor(tok);
    out.push_back(word ? *word : tok);
  }
  return out;
}

std::string SentenceType(const Sentence& rewritten_source) {
  return Join(rewritten_source, " ");
}

RewrittenCorpus RewriteCorpus(const ParallelCorpus& corpus,
                              const std::vector<Segmentation>& segmentations,
                              const Lexicon& lexicon,
                              const SlotifyOptions& options) {
  if (segmentations.size() != corpus.size()) {
    throw DataError("segmentation count " + std::to_string(segmentations.size()) +
                    " does not match corpus size " + std::to_string(corpus.size()));
  }
  RewrittenCorpus out;
  out.sources.reserve(corpus.size());
  out.targets.reserve(corpus.size());
  out.mappings.reserve(corpus.size());
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    if (segmentations[i].Realize() != corpus[i].source) {
      throw DataError("segmentation " + std::to_string(i) +
                      " does not cover its source sentence");
    }
    SlottedSource slotted = Slotify(segmentations[i], options);
    out.targets.push_back(RewriteTarget(corpus[i].target, slotted.mapping, lexicon));
    out.sources.push_back(std::move(slotted.tokens));
    out.mappings.push_back(std::move(slotted.mapping));
  }
  return out;
}

std::string SerializeMappings(const std::vector<SlotMapping>& mappings) {
  std::string out;
  for (const auto& m : mappings) {
    out += m.ToString();
    out += '\n';
  }
  return out;
}

std::vector<SlotMapping> LoadMappings(std::string_view text) {
  std::vector<SlotMapping> out;
  auto lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(SlotMapping::Parse(lines[i]));
    } catch (const DataError& e) {
      throw ParseError(e.what(), i + 1);
    }
  }
  return out;
}

}  // namespace cxmine
