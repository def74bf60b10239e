// Copyright 2026 The ldpfim Authors
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

#ifndef LDPFIM_TESTS_TEST_SUPPORT_H_
#define LDPFIM_TESTS_TEST_SUPPORT_H_

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "ldpfim/dataset.h"
#include "ldpfim/itemsets.h"

namespace ldpfim::testing {

// Item identifiers of the classic five-transaction FP-tree example.
inline constexpr Item kC = 1, kF = 2, kA = 3, kB = 4, kP = 5;

// The classic five transactions; items other than c, f, a, b, p get
// identifiers above 10.
inline TransactionDB FiveTransactionDb() {
  constexpr Item d = 11, e = 12, g = 13, h = 14, i = 15, j = 16, k = 17, l = 18,
                 m = 19, n = 20, o = 21, s = 22;
  return MakeTransactionDB({
      {kF, kA, kC, d, g, i, m, kP},
      {kA, kB, kC, kF, l, m, o},
      {kB, kF, h, j, o},
      {kB, kC, k, s, kP},
      {kA, kF, kC, e, l, kP, m, n},
  });
}

inline TransactionDB RandomDb(std::size_t n, std::size_t d, double density,
                              std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution keep(density);
  std::vector<std::vector<Item>> rows(n);
  for (auto& row : rows) {
    for (Item x = 1; x <= d; ++x) {
      if (keep(rng)) row.push_back(x);
    }
  }
  rows[0].push_back(1);
  return MakeTransactionDB(std::move(rows));
}

// Frequency descending, then shorter first, then lexicographic.
inline bool CanonicalBefore(const ScoredItemset& a, const ScoredItemset& b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
  return a.items < b.items;
}

// Every itemset of length <= max_len with positive support, counted by
// bitmask containment, best first.
inline std::vector<ScoredItemset> BruteForceItemsets(const TransactionDB& db,
                                                     std::size_t max_len) {
  const auto& items = db.domain.items();
  const std::size_t d = items.size();
  std::vector<std::uint32_t> masks;
  for (const auto& t : db.transactions) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (std::binary_search(t.begin(), t.end(), items[i])) mask |= 1u << i;
    }
    masks.push_back(mask);
  }
  std::vector<ScoredItemset> all;
  for (std::uint32_t subset = 1; subset < (1u << d); ++subset) {
    if (static_cast<std::size_t>(__builtin_popcount(subset)) > max_len) continue;
    double count = 0;
    for (auto m : masks) {
      if ((m & subset) == subset) count += 1;
    }
    if (count == 0) continue;
    Itemset set;
    for (std::size_t i = 0; i < d; ++i) {
      if (subset & (1u << i)) set.push_back(items[i]);
    }
    std::sort(set.begin(), set.end());
    all.push_back({set, count});
  }
  std::sort(all.begin(), all.end(), CanonicalBefore);
  return all;
}

inline std::vector<ScoredItemset> BruteForceTopK(const TransactionDB& db,
                                                 std::size_t k,
                                                 std::size_t max_len) {
  auto all = BruteForceItemsets(db, max_len);
  if (all.size() > k) all.resize(k);
  return all;
}

// Number of sequences starting with each non-empty prefix.
inline std::map<std::vector<Item>, double> BrutePrefixCounts(
    const std::vector<std::vector<Item>>& sequences) {
  std::map<std::vector<Item>, double> counts;
  for (const auto& s : sequences) {
    for (std::size_t l = 1; l <= s.size(); ++l) {
      counts[std::vector<Item>(s.begin(), s.begin() + l)] += 1;
    }
  }
  return counts;
}

}  // namespace ldpfim::testing

#endif  // LDPFIM_TESTS_TEST_SUPPORT_H_
