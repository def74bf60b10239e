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

#ifndef LDPFIM_SVSM_H_
#define LDPFIM_SVSM_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "ldpfim/collector.h"
#include "ldpfim/dataset.h"
#include "ldpfim/itemsets.h"
#include "ldpfim/svim.h"

namespace ldpfim {

using ItemFrequencies = std::unordered_map<Item, double>;

ItemFrequencies FrequenciesOf(const RankedItemsets& items);

// Product over x in `itemset` of gamma * f(x) / max f, where max f is taken
// over every entry of `freqs`; negative frequencies count as 0. Factors are multiplied in descending order so
// equal sets always produce bit-identical values. Throws on an empty itemset,
// an item without a frequency, or a non-positive maximum.
double GuessingFrequency(const Itemset& itemset, const ItemFrequencies& freqs,
                         double gamma);

// Candidate itemsets over the frequent items with their guessing
// frequencies, best first in the canonical order.
struct CandidateItemsets {
  std::vector<ScoredItemset> itemsets;
};

// The `limit` subsets of `frequent_items` with the highest guessing
// frequency. Subsets are enumerated best first from a priority frontier, so
// only O(limit) of them are ever built. Items whose frequency is not positive
// never appear. Throws if `frequent_items` is empty, limit is 0 or gamma is
// outside (0, 1].
CandidateItemsets BuildCandidates(const RankedItemsets& frequent_items,
                                  double gamma, std::size_t limit);

struct SvsmParams {
  double gamma = 0.8;
  double tau = 0.9;
};

struct SvsmEstimate {
  RankedItemsets itemsets;
  CandidateItemsets candidates;
  std::size_t padding_length = 1;
  bool padding_fallback = false;
};

// Size estimation over `size_users` then padded frequency estimation over the
// candidate itemsets with `freq_users`. Each user's input is the list of
// candidates contained in its transaction.
SvsmEstimate EstimateCandidateItemsets(
    const TransactionDB& db, const CandidateItemsets& candidates,
    std::span<const UserId> size_users, std::span<const UserId> freq_users,
    std::span<const UserId> population, std::size_t k, double tau,
    const FrequencyOracle& oracle, Rng& rng, ReportLedger* ledger);

struct SvsmRunParams {
  std::array<double, 3> fractions = {0.5, 0.1, 0.4};
  SvimParams svim;
  SvsmParams svsm;
};

struct SvsmRun {
  RankedItemsets itemsets;
  SvimResult frequent_items;
  std::size_t candidates = 0;
  std::size_t padding_length = 1;
  std::size_t reports = 0;
  bool every_user_once = false;
};

// The complete baseline: frequent items from the first group, then candidate
// itemsets estimated with the second and third groups.
SvsmRun RunSvsm(const TransactionDB& db, std::size_t k,
                const FrequencyOracle& oracle, const SvsmRunParams& params,
                std::uint64_t seed);

}  // namespace ldpfim

#endif  // LDPFIM_SVSM_H_
