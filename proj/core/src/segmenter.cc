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

#include "cxmine/segmenter.h"

#include <algorithm>
#include <cmath>

#include "cxmine/errors.h"
#include "cxmine/util.h"

namespace cxmine {

namespace {

// One way to cover tokens [start, start + length) of the sentence.
struct Option {
  std::size_t length = 1;
  const CandidateEntry* entry = nullptr;  // nullptr: fallback word
  double score = 0.0;
};

// Search nodes live in an arena and point back at their parent, so a
// hypothesis is the chain from a node to the root.
struct Node {
  double score = 0.0;
  std::size_t segments = 0;
  int parent = -1;
  std::size_t start = 0;
  std::size_t length = 0;
  const CandidateEntry* entry = nullptr;
};

class BeamSearch {
 public:
  BeamSearch(const Sentence& sentence, const CandidateTable& table,
             const BeamConfig& config)
      : sentence_(sentence), table_(table), config_(config) {}

  Segmentation Run() {
    const std::size_t n = sentence_.size();
    const double fallback = EffectiveFallbackLogprob(table_, config_);
    const std::size_t max_len = std::max<std::size_t>(1, table_.max_span_len());

    std::vector<std::vector<int>> pending(n + 1);
    nodes_.push_back(Node{});
    pending[0].push_back(0);

    for (std::size_t pos = 0; pos < n; ++pos) {
      std::vector<int> beam = Prune(std::move(pending[pos]));
      if (beam.empty()) continue;
      const auto options = OptionsAt(pos, max_len, fallback);
      for (int id : beam) {
        for (const auto& opt : options) {
          Node child;
          child.score = nodes_[id].score + opt.score;
          child.segments = nodes_[id].segments + 1;
          child.parent = id;
          child.start = pos;
          child.length = opt.length;
          child.entry = opt.entry;
          nodes_.push_back(child);
          pending[pos + opt.length].push_back(static_cast<int>(nodes_.size() - 1));
        }
      }
    }
    std::vector<int> final_beam = Prune(std::move(pending[n]));
    return Build(final_beam.front());
  }

 private:
  std::vector<Option> OptionsAt(std::size_t pos, std::size_t max_len,
                                double fallback) const {
    std::vector<Option> options;
    const std::size_t limit = std::min(max_len, sentence_.size() - pos);
    for (std::size_t len = 1; len <= limit; ++len) {
      for (const auto& text : MaskedVariantTexts(sentence_, pos, len)) {
        if (const CandidateEntry* e = table_.Find(text)) {
          options.push_back({len, e, PatternScore(*e, config_)});
        }
      }
    }
    options.push_back({1, nullptr, fallback});
    return options;
  }

  const std::string& KeyOf(const Node& node) const {
    return node.entry ? node.entry->pattern.text() : sentence_[node.start];
  }

  std::vector<const std::string*> Keys(int id) const {
    std::vector<const std::string*> keys;
    for (; nodes_[id].parent >= 0; id = nodes_[id].parent) {
      keys.push_back(&KeyOf(nodes_[id]));
    }
    std::reverse(keys.begin(), keys.end());
    return keys;
  }

  bool Better(int a, int b) const {
    const Node& na = nodes_[a];
    const Node& nb = nodes_[b];
    if (na.score != nb.score) return na.score > nb.score;
    if (na.segments != nb.segments) return na.segments < nb.segments;
    auto ka = Keys(a);
    auto kb = Keys(b);
    for (std::size_t i = 0; i < ka.size() && i < kb.size(); ++i) {
      if (*ka[i] != *kb[i]) return *ka[i] < *kb[i];
    }
    return a < b;
  }

  std::vector<int> Prune(std::vector<int> ids) const {
    std::sort(ids.begin(), ids.end(), [this](int a, int b) { return Better(a, b); });
    if (ids.size() > config_.beam_width) ids.resize(config_.beam_width);
    return ids;
  }

  Segmentation Build(int id) const {
    Segmentation out;
    out.score = nodes_[id].score;
    for (; nodes_[id].parent >= 0; id = nodes_[id].parent) {
      const Node& node = nodes_[id];
      if (node.entry) {
        auto bindings = Match(node.entry->pattern, sentence_, node.start);
        out.segments.push_back(
            Segment::Use(node.entry->pattern, std::move(*bindings), node.start));
      } else {
        out.segments.push_back(Segment::Fallback(sentence_[node.start], node.start));
      }
    }
    std::reverse(out.segments.begin(), out.segments.end());
    return out;
  }

  const Sentence& sentence_;
  const CandidateTable& table_;
  const BeamConfig& config_;
  std::vector<Node> nodes_;
};

void ValidateConfig(const BeamConfig& config) {
  if (config.beam_width == 0) throw ConfigError("beam_width must be >= 1");
  if (!(config.lambda_ms >= 0.0)) throw ConfigError("lambda_ms must be >= 0");
}

}  // namespace

Segment Segment::Use(Pattern p, std::vector<Token> bindings, std::size_t start) {
  if (bindings.size() != p.slot_count()) {
    throw DataError("pattern '" + p.text() + "' expects " +
                    std::to_string(p.slot_count()) + " bindings, got " +
                    std::to_string(bindings.size()));
  }
  Segment s;
  s.kind = Kind::kPattern;
  s.length = p.size();
  s.pattern = std::move(p);
  s.bindings = std::move(bindings);
  s.start = start;
  return s;
}

Segment Segment::Fallback(Token word, std::size_t start) {
  Segment s;
  s.kind = Kind::kFallback;
  s.word = std::move(word);
  s.start = start;
  s.length = 1;
  return s;
}

Sentence Segment::Realize() const {
  if (!is_pattern()) return {word};
  Sentence out;
  std::size_t b = 0;
  for (const auto& e : pattern->elements()) {
    out.push_back(e.slot ? bindings[b++] : e.word);
  }
  return out;
}

const std::string& Segment::Key() const {
  return is_pattern() ? pattern->text() : word;
}

Sentence Segmentation::Realize() const {
  Sentence out;
  for (const auto& seg : segments) {
    auto part = seg.Realize();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::size_t Segmentation::FallbackCount() const {
  return static_cast<std::size_t>(std::count_if(
      segments.begin(), segments.end(), [](const Segment& s) { return !s.is_pattern(); }));
}

double EffectiveFallbackLogprob(const CandidateTable& table,
                                const BeamConfig& config) {
  if (config.fallback_logprob) {
    if (!(*config.fallback_logprob < 0.0)) {
      throw ConfigError("fallback_logprob must be negative");
    }
    return *config.fallback_logprob;
  }
  if (table.empty()) return -1.0;
  return std::log(table.MinProb()) - 1.0;
}

double PatternScore(const CandidateEntry& entry, const BeamConfig& config) {
  return std::log(entry.prob) - config.lambda_ms * entry.ms;
}

Segmentation SegmentSentence(const Sentence& sentence,
                             const CandidateTable& table,
                             const BeamConfig& config) {
  ValidateConfig(config);
  if (sentence.empty()) throw DataError("cannot segment an empty sentence");
  return BeamSearch(sentence, table, config).Run();
}

std::vector<Segmentation> SegmentCorpus(const ParallelCorpus& corpus,
                                        const CandidateTable& table,
                                        const BeamConfig& config,
                                        unsigned threads) {
  ValidateConfig(config);
  std::vector<Segmentation> out(corpus.size());
  ParallelFor(
      corpus.size(),
      [&](std::size_t i) { out[i] = SegmentSentence(corpus[i].source, table, config); },
      threads);
  return out;
}

std::string FormatSegmentation(const Segmentation& segmentation) {
  std::string out;
  for (std::size_t i = 0; i < segmentation.segments.size(); ++i) {
    const Segment& seg = segmentation.segments[i];
    if (i > 0) out += " | ";
    if (seg.is_pattern()) {
      out += seg.pattern->text();
      out += '[';
      out += Join(seg.bindings, ",");
      out += ']';
    } else {
      out += seg.word;
    }
  }
  return out;
}

Segmentation ParseSegmentation(std::string_view line) {
  Segmentation out;
  std::size_t start = 0;
  std::size_t pos = 0;
  constexpr std::string_view kSep = " | ";
  while (pos <= line.size()) {
    std::size_t end = line.find(kSep, pos);
    if (end == std::string_view::npos) end = line.size();
    std::string_view piece = line.substr(pos, end - pos);
    if (piece.empty()) throw DataError("empty segment in '" + std::string(line) + "'");
    if (piece.back() == ']') {
      const std::size_t open = piece.find('[');
      if (open == std::string_view::npos) {
        throw DataError("unbalanced bindings in '" + std::string(piece) + "'");
      }
      Pattern p = Pattern::Parse(piece.substr(0, open));
      std::string_view inner = piece.substr(open + 1, piece.size() - open - 2);
      std::vector<Token> bindings;
      if (!inner.empty()) {
        std::size_t b = 0;
        while (true) {
          std::size_t comma = inner.find(',', b);
          bindings.emplace_back(inner.substr(b, comma == std::string_view::npos ? comma : comma - b));
          if (bindings.back().empty()) throw DataError("empty binding in '" + std::string(piece) + "'");
          if (comma == std::string_view::npos) break;
          b = comma + 1;
        }
      }
      out.segments.push_back(Segment::Use(std::move(p), std::move(bindings), start));
    } else {
      if (piece.find_first_of(" \t[],") != std::string_view::npos) {
        throw DataError("malformed fallback word '" + std::string(piece) + "'");
      }
      out.segments.push_back(Segment::Fallback(Token(piece), start));
    }
    start += out.segments.back().length;
    pos = end + kSep.size();
  }
  return out;
}

std::string SerializeSegmentations(const std::vector<Segmentation>& segs) {
  std::string out;
  for (const auto& s : segs) {
    out += FormatSegmentation(s);
    out += '\n';
  }
  return out;
}

std::vector<Segmentation> LoadSegmentations(std::string_view text) {
  std::vector<Segmentation> out;
  auto lines = SplitLines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      out.push_back(ParseSegmentation(lines[i]));
    } catch (const DataError& e) {
      throw ParseError(e.what(), i + 1);
    }
  }
  return out;
}

}  // namespace cxmine
