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

#include "cxmine/subsampler.h"

#include <algorithm>
#include <cstdio>
#include <random>
#include <unordered_map>

#include "cxmine/errors.h"
#include "cxmine/util.h"

namespace cxmine {

std::vector<std::size_t> RankWithinTypes(std::span<const std::string> type_keys,
                                         std::uint64_t seed) {
  std::unordered_map<std::string_view, std::vector<std::size_t>> members;
  std::vector<std::string_view> order;
  for (std::size_t i = 0; i < type_keys.size(); ++i) {
    auto [it, inserted] = members.try_emplace(type_keys[i]);
    if (inserted) order.push_back(type_keys[i]);
    it->second.push_back(i);
  }
  std::vector<std::size_t> rank(type_keys.size(), 0);
  for (std::string_view key : order) {
    auto& items = members[key];
    std::mt19937_64 rng(DeriveSeed(seed, key));
    DeterministicShuffle(std::span<std::size_t>(items), rng);
    for (std::size_t r = 0; r < items.size(); ++r) rank[items[r]] = r;
  }
  return rank;
}

std::vector<std::size_t> TypeBalancedSubset(std::span<const std::string> type_keys,
                                            std::size_t k, std::uint64_t seed) {
  if (k < 1) throw ConfigError("k must be >= 1");
  const auto rank = RankWithinTypes(type_keys, seed);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rank.size(); ++i) {
    if (rank[i] < k) out.push_back(i);
  }
  return out;
}

std::size_t CountTypes(std::span<const std::string> type_keys) {
  std::unordered_map<std::string_view, int> seen;
  for (const auto& key : type_keys) seen.try_emplace(key, 0);
  return seen.size();
}

std::vector<SubsetRow> SubsetReport(std::span<const std::string> type_keys,
                                    std::vector<std::size_t> ks,
                                    std::uint64_t seed) {
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
  const auto rank = RankWithinTypes(type_keys, seed);
  std::vector<SubsetRow> rows;
  for (std::size_t k : ks) {
    if (k < 1) throw ConfigError("k must be >= 1");
    const auto size = static_cast<std::size_t>(
        std::count_if(rank.begin(), rank.end(), [k](std::size_t r) { return r < k; }));
    const double percent =
        type_keys.empty() ? 0.0 : 100.0 * static_cast<double>(size) / type_keys.size();
    rows.push_back({k, size, percent});
  }
  return rows;
}

std::string FormatSubsetRow(const SubsetRow& row) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2f", row.percent);
  return std::to_string(row.k) + "\t" + std::to_string(row.size) + "\t" + buf;
}

}  // namespace cxmine
