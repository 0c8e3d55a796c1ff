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

// Reference interpreter for the SCAN command language.
//
//   C -> S | S and S | S after S
//   S -> V | V twice | V thrice
//   V -> D | U opposite R | U around R | turn opposite R | turn around R
//   D -> U | U R | turn R
//   U -> walk | look | run | jump          R -> left | right
//
// `x around left` is (I_TURN_LEFT [[x]]) x4, `x opposite left` is
// I_TURN_LEFT I_TURN_LEFT [[x]], and `a after b` executes b first.

#ifndef CXMINE_SCAN_ORACLE_H_
#define CXMINE_SCAN_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "cxmine/corpus.h"

namespace cxmine::scan {

// Throws InterpretError naming the first offending token (or "<end>").
Sentence Interpret(const Sentence& command);

// Every command the grammar derives (20,910), in a fixed order: all single
// clauses, then `a and b`, then `a after b`. No duplicates.
std::vector<Sentence> EnumerateCommands();

enum class Split { kAddJump, kAroundRight };

std::optional<Split> ParseSplit(std::string_view name);
std::string_view SplitName(Split split);

struct SplitCorpora {
  ParallelCorpus train;
  ParallelCorpus test;
};

// Rebuilds the standard generalization splits from the grammar.
//
// Add Jump: train holds every command without "jump" plus 1,467 copies of
// `jump` (14,670 pairs); test holds every other command with "jump"
// (7,706).
// Around Right: train holds every command without "around right" (15,225);
// test holds commands containing `U around right` and no
// `turn around right` (4,476).
//
// Pair order is a seeded shuffle.
SplitCorpora GenerateSplit(Split split, std::uint64_t seed = 0);

}  // namespace cxmine::scan

#endif  // CXMINE_SCAN_ORACLE_H_
