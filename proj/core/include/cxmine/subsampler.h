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

// Sentence-type balanced subsets: keep at most k pairs of every type.
//
// Items of each type are ranked once by a seeded shuffle; the subset for k is
// the union of the first min(k, n) ranked items of every type, returned in
// corpus order. Subsets for growing k are therefore nested.

#ifndef CXMINE_SUBSAMPLER_H_
#define CXMINE_SUBSAMPLER_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cxmine {

// Rank of each item within its type (0 = kept first).
std::vector<std::size_t> RankWithinTypes(std::span<const std::string> type_keys,
                                         std::uint64_t seed);

// Ascending corpus indices of the subset. Throws ConfigError when k < 1.
std::vector<std::size_t> TypeBalancedSubset(std::span<const std::string> type_keys,
                                            std::size_t k, std::uint64_t seed);

std::size_t CountTypes(std::span<const std::string> type_keys);

struct SubsetRow {
  std::size_t k = 0;
  std::size_t size = 0;
  double percent = 0.0;  // size / full size * 100
};

// One row per k, sorted by k (duplicates dropped).
std::vector<SubsetRow> SubsetReport(std::span<const std::string> type_keys,
                                    std::vector<std::size_t> ks,
                                    std::uint64_t seed);

// `k<TAB>size<TAB>percent` with percent to two decimals.
std::string FormatSubsetRow(const SubsetRow& row);

}  // namespace cxmine

#endif  // CXMINE_SUBSAMPLER_H_
