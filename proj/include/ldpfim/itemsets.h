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

#ifndef LDPFIM_ITEMSETS_H_
#define LDPFIM_ITEMSETS_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace ldpfim {

using Item = std::uint32_t;

// Sorted ascending by item identifier, no duplicates.
using Itemset = std::vector<Item>;

struct ScoredItemset {
  Itemset items;
  double frequency = 0.0;

  friend bool operator==(const ScoredItemset&, const ScoredItemset&) = default;
};

// Canonical ranking order used everywhere results are ranked: frequency
// descending, then itemset length ascending, then lexicographic item order.
bool RanksBefore(const ScoredItemset& a, const ScoredItemset& b);

// Lexicographic comparison on item sequences with shorter-first on ties of a
// common prefix.
bool ItemsetLess(const Itemset& a, const Itemset& b);

// An ordered (itemset, frequency) list, best first.
struct RankedItemsets {
  std::vector<ScoredItemset> entries;
  // Set when fewer itemsets than requested were available.
  bool incomplete = false;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  const ScoredItemset& operator[](std::size_t i) const { return entries[i]; }
};

// Sorts `entries` canonically and keeps the best `k`. `incomplete` is set when
// fewer than `k` entries are available.
RankedItemsets SelectTopK(std::vector<ScoredItemset> entries, std::size_t k);

// Normalizes an item list into an Itemset (sort + dedupe).
Itemset MakeItemset(std::vector<Item> items);

// "1 2 3"
std::string FormatItemset(const Itemset& items);

}  // namespace ldpfim

#endif  // LDPFIM_ITEMSETS_H_
