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


#include "oracles.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace cxmine::oracle {

std::size_t EditDistance(const std::vector<std::string>& a,
                         const std::vector<std::string>& b) {
  std::vector<std::vector<std::size_t>> d(a.size() + 1,
                                          std::vector<std::size_t>(b.size() + 1));
  for (std::size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
  for (std::size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
  for (std::size_t i = 1; i <= a.size(); ++i) {
    for (std::size_t j = 1; j <= b.size(); ++j) {
      std::size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
    }
  }
  return d[a.size()][b.size()];
}

namespace {

std::vector<std::string> Words(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ' ') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

bool MatchesAt(const std::vector<std::string>& pattern, const Sentence& s,
               std::size_t start) {
  if (start + pattern.size() > s.size()) return false;
  for (std::size_t i = 0; i < pattern.size(); ++i) {
    if (pattern[i] != "_" && pattern[i] != s[start + i]) return false;
  }
  return true;
}

void Enumerate(const Sentence& sentence, std::size_t pos,
               const CandidateTable& table, double lambda_ms, double fallback,
               Cover& partial, Cover& best, bool& have_best) {
  if (pos == sentence.size()) {
    bool better = !have_best;
    if (!better) {
      if (partial.score != best.score) {
        better = partial.score > best.score;
      } else if (partial.keys.size() != best.keys.size()) {
        better = partial.keys.size() < best.keys.size();
      } else {
        better = partial.keys < best.keys;
      }
    }
    if (better) {
      best = partial;
      have_best = true;
    }
    return;
  }
  auto step = [&](const std::string& key, std::size_t len, double score) {
    const double saved = partial.score;
    partial.score = saved + score;
    partial.keys.push_back(key);
    Enumerate(sentence, pos + len, table, lambda_ms, fallback, partial, best, have_best);
    partial.keys.pop_back();
    partial.score = saved;
  };
  for (const auto& e : table.entries()) {
    const auto words = Words(e.pattern.text());
    if (MatchesAt(words, sentence, pos)) {
      step(e.pattern.text(), words.size(), std::log(e.prob) - lambda_ms * e.ms);
    }
  }
  step(sentence[pos], 1, fallback);
}

}  // namespace

std::vector<std::size_t> Occurrences(const std::string& pattern_text,
                                     const std::vector<Sentence>& sources) {
  const auto words = Words(pattern_text);
  std::vector<std::size_t> out;
  for (std::size_t s = 0; s < sources.size(); ++s) {
    for (std::size_t start = 0; start < sources[s].size(); ++start) {
      if (MatchesAt(words, sources[s], start)) out.push_back(s);
    }
  }
  return out;
}

std::vector<std::int64_t> MsDeltas(const std::vector<std::size_t>& occurrences,
                                   const ParallelCorpus& corpus) {
  std::vector<std::int64_t> deltas;
  const std::size_t n = occurrences.size();
  if (n < 2) return deltas;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = n;
    std::size_t best_d = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      const std::size_t d = EditDistance(corpus[occurrences[i]].source,
                                         corpus[occurrences[j]].source);
      if (best == n || d < best_d) {
        best = j;
        best_d = d;
      }
    }
    const auto li = static_cast<std::int64_t>(corpus[occurrences[i]].target.size());
    const auto lj = static_cast<std::int64_t>(corpus[occurrences[best]].target.size());
    deltas.push_back(li > lj ? li - lj : lj - li);
  }
  return deltas;
}

Cover ExhaustiveCover(const Sentence& sentence, const CandidateTable& table,
                      double lambda_ms, double fallback_logprob) {
  Cover partial, best;
  bool have_best = false;
  Enumerate(sentence, 0, table, lambda_ms, fallback_logprob, partial, best, have_best);
  return best;
}

namespace {

using Actions = std::vector<std::string>;

Actions Repeat(const Actions& unit, int times) {
  Actions out;
  for (int i = 0; i < times; ++i) out.insert(out.end(), unit.begin(), unit.end());
  return out;
}

const std::map<std::string, Actions>& VerbPhraseTable() {
  static const std::map<std::string, Actions> table = [] {
    std::map<std::string, Actions> t;
    const std::map<std::string, std::string> acts = {
        {"walk", "I_WALK"}, {"look", "I_LOOK"}, {"run", "I_RUN"}, {"jump", "I_JUMP"},
        {"turn", ""}};
    const std::map<std::string, std::string> turns = {{"left", "I_TURN_LEFT"},
                                                      {"right", "I_TURN_RIGHT"}};
    for (const auto& [verb, act] : acts) {
      const Actions bare = act.empty() ? Actions{} : Actions{act};
      if (!act.empty()) t[verb] = bare;
      for (const auto& [dir, turn] : turns) {
        Actions step{turn};
        step.insert(step.end(), bare.begin(), bare.end());
        t[verb + " " + dir] = step;
        Actions opp{turn, turn};
        opp.insert(opp.end(), bare.begin(), bare.end());
        t[verb + " opposite " + dir] = opp;
        t[verb + " around " + dir] = Repeat(step, 4);
      }
    }
    return t;
  }();
  return table;
}

bool EndsWith(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() &&
         s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Actions ClauseMeaning(std::string clause) {
  int times = 1;
  if (EndsWith(clause, " twice")) {
    times = 2;
    clause.resize(clause.size() - 6);
  } else if (EndsWith(clause, " thrice")) {
    times = 3;
    clause.resize(clause.size() - 7);
  }
  const auto& table = VerbPhraseTable();
  auto it = table.find(clause);
  if (it == table.end()) throw std::invalid_argument("not a SCAN clause: " + clause);
  return Repeat(it->second, times);
}

}  // namespace

std::vector<std::string> ScanMeaning(const std::vector<std::string>& command) {
  std::string text;
  for (const auto& w : command) text += (text.empty() ? "" : " ") + w;
  for (const std::string conj : {" and ", " after "}) {
    const auto at = text.find(conj);
    if (at == std::string::npos) continue;
    Actions first = ClauseMeaning(text.substr(0, at));
    Actions second = ClauseMeaning(text.substr(at + conj.size()));
    if (conj == " after ") std::swap(first, second);
    first.insert(first.end(), second.begin(), second.end());
    return first;
  }
  return ClauseMeaning(text);
}

Sentence RandomSentence(std::mt19937_64& rng, std::size_t alphabet,
                        std::size_t min_len, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> sym(0, alphabet - 1);
  Sentence s(len(rng));
  for (auto& t : s) t = std::string(1, static_cast<char>('a' + sym(rng)));
  return s;
}

}  // namespace cxmine::oracle
