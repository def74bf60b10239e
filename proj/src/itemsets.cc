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

#include "ldpfim/itemsets.h"

#include <algorithm>
#include <sstream>
#include <utility>

namespace ldpfim {

bool ItemsetLess(const Itemset& a, const Itemset& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool RanksBefore(const ScoredItemset& a, const ScoredItemset& b) {
  if (a.frequency != b.frequency) return a.frequency > b.frequency;
  if (a.items.size() != b.items.size()) return a.items.size() < b.items.size();
  return ItemsetLess(a.items, b.items);
}

RankedItemsets SelectTopK(std::vector<ScoredItemset> entries, std::size_t k) {
  RankedItemsets out;
  if (entries.size() > k) {
    std::partial_sort(entries.begin(), entries.begin() + k, entries.end(),
                      RanksBefore);
    entries.resize(k);
  } else {
    std::sort(entries.begin(), entries.end(), RanksBefore);
    out.incomplete = entries.size() < k;
  }
  out.entries = std::move(entries);
  return out;
}

Itemset MakeItemset(std::vector<Item> items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
  return items;
}

std::string FormatItemset(const Itemset& items) {
  std::ostringstream out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i > 0) out << ' ';
    out << items[i];
  }
  return out.str();
}

}  // namespace ldpfim
