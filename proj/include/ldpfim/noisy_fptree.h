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

#ifndef LDPFIM_NOISY_FPTREE_H_
#define LDPFIM_NOISY_FPTREE_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ldpfim/collector.h"
#include "ldpfim/dataset.h"
#include "ldpfim/itemsets.h"
#include "ldpfim/noisy_tree.h"
#include "ldpfim/postprocess.h"
#include "ldpfim/svim.h"

namespace ldpfim {

struct MinerParams {
  // Each level keeps at most floor(xi * k) candidate prefixes.
  double xi = 3.0;
  bool enable_cutdown = true;
  double height_percentile = 0.8;
  double svim_tau = 0.9;
  std::array<double, 3> fractions = {0.5, 0.1, 0.4};

  bool pwc = true;
  bool cci = true;
  bool npb = true;
  bool iwc = true;
  double omega = 0.7;
  double omega_prefix = 0.9;
  double theta0 = 0.3;
  std::size_t cci_repetitions = 5;
  double gamma = 0.8;
  // Itemsets mined before the weighted re-ranking, as a multiple of k.
  std::size_t iwc_pool_factor = 2;

  // Throws std::invalid_argument on out-of-range values.
  void Validate() const;
};

// Per-user transactions as increasing lists of ranks into the frequent items.
using RankedTransactions = std::vector<std::vector<std::uint32_t>>;

RankedTransactions RankTransactions(const TransactionDB& db,
                                    std::span<const Item> item_order);

struct TreeHeight {
  std::size_t height = 1;
  bool fallback = false;
};

// Users report how many frequent items they hold, over {0..k}; the height is
// the percentile of that distribution, within [1, k].
TreeHeight EstimateTreeHeight(const RankedTransactions& ranked,
                              std::span<const UserId> reporters,
                              std::span<const UserId> population, std::size_t k,
                              double percentile, const FrequencyOracle& oracle,
                              Rng& rng, ReportLedger* ledger);

struct CandidatePrefix {
  NoisyFpTree::NodeId parent = NoisyFpTree::kNone;
  std::size_t rank = 0;
};

struct CandidatePrefixSet {
  std::size_t level = 0;
  std::vector<CandidatePrefix> candidates;
};

// One candidate per valid node of level l - 1 with positive count and per
// frequent item ranked after it. Every expanded node is marked invalid.
CandidatePrefixSet GenerateLevelCandidates(NoisyFpTree& tree, std::size_t level);

// Score used to cut candidates down: the parent's count times the chance of
// stepping from the parent's item straight to the candidate's item.
double CutdownScore(const NoisyFpTree& tree, const GuessModel& model,
                    const CandidatePrefix& candidate);

// Keeps the floor(xi * k) candidates with the highest CutdownScore; ties go
// to the lexicographically smaller rank path. Returns `candidates` unchanged
// when it is already small enough.
CandidatePrefixSet CutdownCandidates(const CandidatePrefixSet& candidates,
                                     const NoisyFpTree& tree,
                                     const GuessModel& model, double xi,
                                     std::size_t k);

// Each reporter submits its first `level` ranks when that prefix is a
// candidate and the dummy otherwise. Returns one estimate per candidate.
std::vector<double> QueryLevel(const RankedTransactions& ranked,
                               const NoisyFpTree& tree,
                               const CandidatePrefixSet& candidates,
                               std::span<const UserId> reporters,
                               std::span<const UserId> population,
                               const FrequencyOracle& oracle, Rng& rng,
                               ReportLedger* ledger);

struct ConstructionStats {
  std::vector<std::size_t> generated_per_level;
  std::vector<std::size_t> kept_per_level;
  // Total candidates generated over all levels.
  std::size_t node_expansions = 0;
  // No candidate could be generated before the last level.
  bool stopped_early = false;
  std::size_t unqueried_users = 0;
  double dropped_debit = 0.0;
};

struct ConstructedTree {
  NoisyFpTree tree;
  ConstructionStats stats;
};

// Builds the tree level by level, each level queried by its own share of
// `users`. The root count is |population|.
ConstructedTree ConstructNoisyTree(const RankedTransactions& ranked,
                                   std::span<const UserId> users,
                                   std::span<const UserId> population,
                                   const RankedItemsets& frequent_items,
                                   std::size_t height, std::size_t k,
                                   const MinerParams& params,
                                   const FrequencyOracle& oracle, Rng& rng,
                                   ReportLedger* ledger);

// FP-growth over the estimated counts. An empty tree gives an empty,
// incomplete result.
RankedItemsets MineNoisyTree(const NoisyFpTree& tree, std::size_t k);

struct MinerStats {
  std::size_t frequent_items = 0;
  std::size_t pruned_domain = 0;
  std::size_t svim_padding = 1;
  std::size_t tree_height = 0;
  bool height_fallback = false;
  ConstructionStats construction;
  std::size_t reports = 0;
  bool every_user_once = false;
  bool no_user_twice = false;
};

struct MinerResult {
  RankedItemsets itemsets;
  MinerStats stats;
};

// Frequent items from the first group, tree height from the second, noisy
// tree from the third, then optional constrained inference, mining and
// optional itemset weighted combination. Deterministic in `seed`.
MinerResult LdpFpMiner(const TransactionDB& db, std::size_t k,
                       const FrequencyOracle& oracle, const MinerParams& params,
                       std::uint64_t seed);

}  // namespace ldpfim

#endif  // LDPFIM_NOISY_FPTREE_H_
