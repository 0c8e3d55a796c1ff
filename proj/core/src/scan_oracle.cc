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

#include "cxmine/scan_oracle.h"

#include <algorithm>
#include <random>
#include <span>

#include "cxmine/errors.h"
#include "cxmine/util.h"

namespace cxmine::scan {

namespace {

constexpr std::string_view kPrimitives[] = {"walk", "look", "run", "jump"};
constexpr std::string_view kDirections[] = {"left", "right"};
constexpr int kAddJumpCopies = 1467;

std::optional<Token> PrimitiveAction(std::string_view word) {
  if (word == "walk") return "I_WALK";
  if (word == "look") return "I_LOOK";
  if (word == "run") return "I_RUN";
  if (word == "jump") return "I_JUMP";
  return std::nullopt;
}

std::optional<Token> TurnAction(std::string_view word) {
  if (word == "left") return "I_TURN_LEFT";
  if (word == "right") return "I_TURN_RIGHT";
  return std::nullopt;
}

[[noreturn]] void Fail(std::span<const Token> tokens, std::size_t pos,
                       std::string_view expected) {
  std::string tok = pos < tokens.size() ? tokens[pos] : std::string("<end>");
  throw InterpretError("unexpected token '" + tok + "' at position " +
                           std::to_string(pos) + ", expected " +
                           std::string(expected),
                       tok);
}

// Interprets a V clause spanning exactly tokens[begin, end).
Sentence InterpretVerbPhrase(std::span<const Token> tokens, std::size_t begin,
                             std::size_t end) {
  const std::size_t n = end - begin;
  if (n == 0) Fail(tokens, begin, "a primitive or 'turn'");
  const Token& head = tokens[begin];
  const bool is_turn = head == "turn";
  auto action = PrimitiveAction(head);
  if (!is_turn && !action) Fail(tokens, begin, "a primitive or 'turn'");

  if (n == 1) {
    if (is_turn) Fail(tokens, begin + 1, "a direction after 'turn'");
    return {*action};
  }
  if (n == 2) {
    auto turn = TurnAction(tokens[begin + 1]);
    if (!turn) Fail(tokens, begin + 1, "a direction");
    Sentence out{*turn};
    if (!is_turn) out.push_back(*action);
    return out;
  }
  if (n == 3) {
    const Token& mod = tokens[begin + 1];
    auto turn = TurnAction(tokens[begin + 2]);
    if (mod != "opposite" && mod != "around") Fail(tokens, begin + 1, "'opposite' or 'around'");
    if (!turn) Fail(tokens, begin + 2, "a direction");
    Sentence out;
    if (mod == "opposite") {
      out = {*turn, *turn};
      if (!is_turn) out.push_back(*action);
    } else {
      for (int i = 0; i < 4; ++i) {
        out.push_back(*turn);
        if (!is_turn) out.push_back(*action);
      }
    }
    return out;
  }
  Fail(tokens, begin + 3, "end of clause");
}

// S -> V [twice|thrice] over tokens[begin, end).
Sentence InterpretClause(std::span<const Token> tokens, std::size_t begin,
                         std::size_t end) {
  int repeat = 1;
  std::size_t verb_end = end;
  if (end > begin) {
    if (tokens[end - 1] == "twice") {
      repeat = 2;
      --verb_end;
    } else if (tokens[end - 1] == "thrice") {
      repeat = 3;
      --verb_end;
    }
  }
  // Scan for misplaced connective or repetition words first so that the
  // error names the real culprit.
  for (std::size_t i = begin; i < verb_end; ++i) {
    const Token& t = tokens[i];
    if (t == "twice" || t == "thrice" || t == "and" || t == "after") {
      Fail(tokens, i, "a verb phrase token");
    }
  }
  Sentence once = InterpretVerbPhrase(tokens, begin, verb_end);
  Sentence out;
  out.reserve(once.size() * repeat);
  for (int r = 0; r < repeat; ++r) out.insert(out.end(), once.begin(), once.end());
  return out;
}

std::vector<Sentence> VerbPhrases() {
  std::vector<Sentence> out;
  for (auto u : kPrimitives) out.push_back({Token(u)});
  for (auto u : kPrimitives)
    for (auto d : kDirections) out.push_back({Token(u), Token(d)});
  for (auto d : kDirections) out.push_back({"turn", Token(d)});
  for (auto mod : {"opposite", "around"}) {
    for (auto u : kPrimitives)
      for (auto d : kDirections) out.push_back({Token(u), mod, Token(d)});
    for (auto d : kDirections) out.push_back({"turn", mod, Token(d)});
  }
  return out;
}

bool ContainsWord(const Sentence& s, std::string_view word) {
  return std::find(s.begin(), s.end(), word) != s.end();
}

bool ContainsBigram(const Sentence& s, std::string_view a, std::string_view b) {
  for (std::size_t i = 0; i + 1 < s.size(); ++i) {
    if (s[i] == a && s[i + 1] == b) return true;
  }
  return false;
}

bool ContainsTrigram(const Sentence& s, std::string_view a, std::string_view b,
                     std::string_view c) {
  for (std::size_t i = 0; i + 2 < s.size(); ++i) {
    if (s[i] == a && s[i + 1] == b && s[i + 2] == c) return true;
  }
  return false;
}

ParallelCorpus ShuffledCorpus(std::vector<Sentence> commands, std::uint64_t seed,
                              std::string_view label) {
  std::mt19937_64 rng(DeriveSeed(seed, label));
  DeterministicShuffle(std::span<Sentence>(commands), rng);
  std::vector<ParallelPair> pairs;
  pairs.reserve(commands.size());
  for (auto& c : commands) {
    Sentence target = Interpret(c);
    pairs.push_back({std::move(c), std::move(target)});
  }
  return ParallelCorpus(std::move(pairs));
}

}  // namespace

Sentence Interpret(const Sentence& command) {
  std::span<const Token> tokens(command);
  if (tokens.empty()) Fail(tokens, 0, "a command");
  std::size_t conj = tokens.size();
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (tokens[i] == "and" || tokens[i] == "after") {
      if (conj != tokens.size()) Fail(tokens, i, "at most one connective");
      conj = i;
    }
  }
  if (conj == tokens.size()) return InterpretClause(tokens, 0, tokens.size());
  if (conj == 0) Fail(tokens, 0, "a verb phrase before the connective");
  if (conj + 1 == tokens.size()) Fail(tokens, conj + 1, "a clause after the connective");
  Sentence first = InterpretClause(tokens, 0, conj);
  Sentence second = InterpretClause(tokens, conj + 1, tokens.size());
  if (tokens[conj] == "after") std::swap(first, second);
  first.insert(first.end(), second.begin(), second.end());
  return first;
}

std::vector<Sentence> EnumerateCommands() {
  std::vector<Sentence> clauses;
  for (const auto& v : VerbPhrases()) {
    clauses.push_back(v);
    Sentence twice = v;
    twice.push_back("twice");
    clauses.push_back(std::move(twice));
    Sentence thrice = v;
    thrice.push_back("thrice");
    clauses.push_back(std::move(thrice));
  }
  std::vector<Sentence> out = clauses;
  out.reserve(clauses.size() * (1 + 2 * clauses.size()));
  for (std::string_view conj : {"and", "after"}) {
    for (const auto& a : clauses) {
      for (const auto& b : clauses) {
        Sentence s = a;
        s.emplace_back(conj);
        s.insert(s.end(), b.begin(), b.end());
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

std::optional<Split> ParseSplit(std::string_view name) {
  if (name == "add_jump" || name == "addprim_jump") return Split::kAddJump;
  if (name == "around_right" || name == "template_around_right") {
    return Split::kAroundRight;
  }
  return std::nullopt;
}

std::string_view SplitName(Split split) {
  return split == Split::kAddJump ? "add_jump" : "around_right";
}

SplitCorpora GenerateSplit(Split split, std::uint64_t seed) {
  std::vector<Sentence> train;
  std::vector<Sentence> test;
  for (auto& cmd : EnumerateCommands()) {
    if (split == Split::kAddJump) {
      if (!ContainsWord(cmd, "jump")) {
        train.push_back(std::move(cmd));
      } else if (cmd.size() > 1) {
        test.push_back(std::move(cmd));
      }
    } else {
      if (!ContainsBigram(cmd, "around", "right")) {
        train.push_back(std::move(cmd));
      } else if (!ContainsTrigram(cmd, "turn", "around", "right")) {
        test.push_back(std::move(cmd));
      }
    }
  }
  if (split == Split::kAddJump) {
    for (int i = 0; i < kAddJumpCopies; ++i) train.push_back({"jump"});
  }
  std::string name(SplitName(split));
  return {ShuffledCorpus(std::move(train), seed, name + "/train"),
          ShuffledCorpus(std::move(test), seed, name + "/test")};
}

}  // namespace cxmine::scan
