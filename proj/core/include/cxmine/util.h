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

// Small helpers shared across modules: text splitting, exact float
// formatting, file I/O, portable seeded shuffling and a parallel loop.

#ifndef CXMINE_UTIL_H_
#define CXMINE_UTIL_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cxmine {

// Splits on LF, stripping a trailing CR from each line. A final newline does
// not produce an extra empty line.
std::vector<std::string_view> SplitLines(std::string_view text);

// Splits on runs of spaces and tabs.
std::vector<std::string> SplitWhitespace(std::string_view text);

std::string Join(std::span<const std::string> parts, std::string_view sep);

// Shortest decimal form that parses back to the same double.
std::string FormatDouble(double value);
// Throws DataError on anything that is not a complete number.
double ParseDouble(std::string_view text);
long long ParseInt(std::string_view text);

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view content);

// FNV-1a; stable across platforms, unlike std::hash.
std::uint64_t Fnv1a64(std::string_view text);

// Mixes a user seed with a stream label so independent consumers of one seed
// draw unrelated sequences.
std::uint64_t DeriveSeed(std::uint64_t seed, std::string_view label);

// Uniform integer in [0, bound) from raw engine output by rejection, so the
// result does not depend on the standard library's distribution code.
std::uint64_t UniformBelow(std::mt19937_64& rng, std::uint64_t bound);

template <typename T>
void DeterministicShuffle(std::span<T> items, std::mt19937_64& rng) {
  for (std::size_t i = items.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(UniformBelow(rng, i));
    using std::swap;
    swap(items[i - 1], items[j]);
  }
}

// Runs fn(i) for i in [0, n) on up to `threads` workers (0 = hardware
// concurrency). fn must only write to state owned by index i.
void ParallelFor(std::size_t n, const std::function<void(std::size_t)>& fn,
                 unsigned threads = 0);

}  // namespace cxmine

#endif  // CXMINE_UTIL_H_
