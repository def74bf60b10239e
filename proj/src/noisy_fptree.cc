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

#include "ldpfim/noisy_fptree.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "ldpfim/hashing.h"
#include "ldpfim/svsm.h"

namespace ldpfim {
namespace {

void CheckUnit(double value, const char* what) {
  if (!(value >= 0.0 && value <= 1.0)) {
    throw std::invalid_argument(std::string(what) + " must lie in [0, 1]");
  }
}

std::size_t LevelCapacity(double xi, std::size_t k) {
  return static_cast<std::size_t>(std::floor(xi * static_cast<double>(k)));
}

}  // namespace

void MinerParams::Validate() const {
  if (!(xi >= 1.0)) throw std::invalid_argument("xi must be at least 1");
  if (!(height_percentile > 0.0 && height_percentile <= 1.0)) {
    throw std::invalid_argument("height percentile must lie in (0, 1]");
  }
  if (!(svim_tau > 0.0 && svim_tau <= 1.0)) {
    throw std::invalid_argument("SVIM tau must lie in (0, 1]");
  }
  CheckUnit(omega, "omega");
  CheckUnit(omega_prefix, "prefix omega");
  if (!(theta0 > 0.0 && theta0 <= 1.0)) {
    throw std::invalid_argument("theta0 must lie in (0, 1]");
  }
  if (cci_repetitions < 1) {
    throw std::invalid_argument("CCI needs at least one repetition");
  }
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1]");
  }
  if (iwc_pool_factor < 1) {
    throw std::invalid_argument("IWC pool factor must be at least 1");
  }
}

RankedTransactions RankTransactions(const TransactionDB& db,
                                    std::span<const Item> item_order) {
  std::unordered_map<Item, std::uint32_t> rank;
  for (std::size_t r = 0; r < item_order.size(); ++r) {
    if (!rank.emplace(item_order[r], static_cast<std::uint32_t>(r)).second) {
      throw std::invalid_argument("duplicate item in rank order");
    }
  }
  RankedTransactions out(db.size());
  for (std::size_t u = 0; u < db.size(); ++u) {
    for (Item x : db.transactions[u]) {
      auto it = rank.find(x);
      if (it != rank.end()) out[u].push_back(it->second);
    }
    std::sort(out[u].begin(), out[u].end());
  }
  return out;
}

TreeHeight EstimateTreeHeight(const RankedTransactions& ranked,
                              std::span<const UserId> reporters,
                              std::span<const UserId> population, std::size_t k,
                              double percentile, const FrequencyOracle& oracle,
                              Rng& rng, ReportLedger* ledger) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const auto length = CollectPercentileLength(
      reporters, population, [&](UserId u) { return ranked[u].size(); }, k,
      percentile, oracle, rng, ledger);
  return {std::clamp<std::size_t>(length.length, 1, k), length.fallback};
}

CandidatePrefixSet GenerateLevelCandidates(NoisyFpTree& tree,
                                           std::size_t level) {
  if (level < 1 || level > tree.depth() + 1) {
    throw std::invalid_argument("level must follow a populated level");
  }
  CandidatePrefixSet out;
  out.level = level;
  const std::size_t items = tree.item_order().size();
  for (auto id : tree.level(level - 1)) {
    const auto& n = tree.node(id);
    if (!n.valid || !(n.count > 0.0)) continue;
    const std::size_t first = n.rank == NoisyFpTree::kNoRank ? 0 : n.rank + 1;
    for (std::size_t r = first; r < items; ++r) out.candidates.push_back({id, r});
    tree.set_valid(id, false);
  }
  return out;
}

double CutdownScore(const NoisyFpTree& tree, const GuessModel& model,
                    const CandidatePrefix& candidate) {
  const auto& parent = tree.node(candidate.parent);
  const std::optional<std::size_t> parent_rank =
      parent.rank == NoisyFpTree::kNoRank
          ? std::nullopt
          : std::optional<std::size_t>(parent.rank);
  return parent.count * ChildGuessFactor(model, parent_rank, candidate.rank);
}

CandidatePrefixSet CutdownCandidates(const CandidatePrefixSet& candidates,
                                     const NoisyFpTree& tree,
                                     const GuessModel& model, double xi,
                                     std::size_t k) {
  const std::size_t capacity = LevelCapacity(xi, k);
  if (candidates.candidates.size() <= capacity) return candidates;
  struct Scored {
    double score;
    std::vector<std::size_t> path;
    CandidatePrefix candidate;
  };
  std::vector<Scored> scored;
  scored.reserve(candidates.candidates.size());
  for (const auto& c : candidates.candidates) {
    auto path = tree.RankPath(c.parent);
    path.push_back(c.rank);
    scored.push_back({CutdownScore(tree, model, c), std::move(path), c});
  }
  std::partial_sort(scored.begin(), scored.begin() + capacity, scored.end(),
                    [](const Scored& a, const Scored& b) {
                      if (a.score != b.score) return a.score > b.score;
                      return a.path < b.path;
                    });
  CandidatePrefixSet out;
  out.level = candidates.level;
  for (std::size_t i = 0; i < capacity; ++i) {
    out.candidates.push_back(scored[i].candidate);
  }
  return out;
}

std::vector<double> QueryLevel(const RankedTransactions& ranked,
                               const NoisyFpTree& tree,
                               const CandidatePrefixSet& candidates,
                               std::span<const UserId> reporters,
                               std::span<const UserId> population,
                               const FrequencyOracle& oracle, Rng& rng,
                               ReportLedger* ledger) {
  if (reporters.empty()) throw std::invalid_argument("empty level group");
  const std::size_t level = candidates.level;
  std::map<std::pair<NoisyFpTree::NodeId, std::size_t>, std::uint32_t> index;
  std::vector<ElementKey> keys;
  keys.reserve(candidates.candidates.size());
  for (std::size_t i = 0; i < candidates.candidates.size(); ++i) {
    const auto& c = candidates.candidates[i];
    index.emplace(std::make_pair(c.parent, c.rank),
                  static_cast<std::uint32_t>(i));
    auto prefix = tree.Prefix(c.parent);
    prefix.push_back(tree.item_order()[c.rank]);
    keys.push_back(EncodeItemSequence(prefix));
  }
  CollectionRequest request;
  request.domain = keys;
  request.reporters = reporters;
  request.population = population;
  request.input_of = [&](UserId u) {
    const auto& t = ranked[u];
    if (t.size() < level) return UserInput{};
    NoisyFpTree::NodeId at = NoisyFpTree::kRoot;
    for (std::size_t i = 0; i + 1 < level; ++i) {
      at = tree.FindChild(at, t[i]);
      if (at == NoisyFpTree::kNone) return UserInput{};
    }
    auto it = index.find({at, t[level - 1]});
    if (it == index.end()) return UserInput{};
    return UserInput{it->second};
  };
  return oracle.Collect(request, rng, ledger);
}

ConstructedTree ConstructNoisyTree(const RankedTransactions& ranked,
                                   std::span<const UserId> users,
                                   std::span<const UserId> population,
                                   const RankedItemsets& frequent_items,
                                   std::size_t height, std::size_t k,
                                   const MinerParams& params,
                                   const FrequencyOracle& oracle, Rng& rng,
                                   ReportLedger* ledger) {
  if (height < 1) throw std::invalid_argument("tree height must be at least 1");
  if (users.size() < height) {
    throw std::invalid_argument("fewer tree users than tree levels");
  }
  std::vector<Item> order;
  for (const auto& e : frequent_items.entries) order.push_back(e.items.at(0));
  const GuessModel model = MakeGuessModel(
      frequent_items, static_cast<double>(population.size()));
  ConstructedTree result{
      NoisyFpTree(order, static_cast<double>(population.size())), {}};
  NoisyFpTree& tree = result.tree;
  auto& stats = result.stats;
  const auto groups =
      SplitEvenly(std::vector<UserId>(users.begin(), users.end()), height);

  for (std::size_t level = 1; level <= height; ++level) {
    auto candidates = GenerateLevelCandidates(tree, level);
    stats.generated_per_level.push_back(candidates.candidates.size());
    stats.node_expansions += candidates.candidates.size();
    if (candidates.candidates.empty()) {
      stats.stopped_early = true;
      for (std::size_t g = level - 1; g < height; ++g) {
        stats.unqueried_users += groups[g].size();
      }
      stats.generated_per_level.pop_back();
      break;
    }
    if (params.enable_cutdown) {
      candidates = CutdownCandidates(candidates, tree, model, params.xi, k);
    }
    stats.kept_per_level.push_back(candidates.candidates.size());

    auto estimates = QueryLevel(ranked, tree, candidates, groups[level - 1],
                                population, oracle, rng, ledger);
    if (params.pwc) {
      std::vector<double> guesses;
      guesses.reserve(candidates.candidates.size());
      for (const auto& c : candidates.candidates) {
        auto path = tree.RankPath(c.parent);
        path.push_back(c.rank);
        guesses.push_back(GuessingProbability(path, model));
      }
      estimates =
          PrefixWeightedCombination(estimates, guesses, params.omega_prefix);
    }
    if (params.npb) {
      auto balanced = NegativePositiveBalance(std::move(estimates), rng);
      stats.dropped_debit += balanced.dropped_debit;
      estimates = std::move(balanced.values);
    } else {
      for (double& e : estimates) e = std::max(e, 0.0);
    }
    for (std::size_t i = 0; i < candidates.candidates.size(); ++i) {
      const auto& c = candidates.candidates[i];
      const auto id = tree.AddNode(c.parent, c.rank, estimates[i]);
      tree.set_valid(id, estimates[i] > 0.0);
    }
  }
  return result;
}

RankedItemsets MineNoisyTree(const NoisyFpTree& tree, std::size_t k) {
  if (tree.depth() == 0) {
    RankedItemsets empty;
    empty.incomplete = true;
    return empty;
  }
  return FpGrowth(tree.ToFpTree(), k);
}

MinerResult LdpFpMiner(const TransactionDB& db, std::size_t k,
                       const FrequencyOracle& oracle, const MinerParams& params,
                       std::uint64_t seed) {
  params.Validate();
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const GroupSplit split =
      SplitGroups(db.size(), params.fractions, DeriveSeed(seed, {1}));
  std::vector<UserId> population(db.size());
  std::iota(population.begin(), population.end(), 0);
  ReportLedger ledger(db.size());
  MinerResult result;
  auto& stats = result.stats;

  Rng svim_rng(DeriveSeed(seed, {2}));
  SvimParams svim_params;
  svim_params.tau = params.svim_tau;
  const SvimResult svim = Svim(db, split.group(Group::kG1), population, k,
                               oracle, svim_params, svim_rng, &ledger);
  stats.frequent_items = svim.items.size();
  stats.pruned_domain = svim.pruned_domain.size();
  stats.svim_padding = svim.padding_length;

  std::vector<Item> order;
  for (const auto& e : svim.items.entries) order.push_back(e.items[0]);
  const RankedTransactions ranked = RankTransactions(db, order);

  Rng height_rng(DeriveSeed(seed, {3}));
  const TreeHeight height = EstimateTreeHeight(
      ranked, split.group(Group::kG2), population, order.size(),
      params.height_percentile, oracle, height_rng, &ledger);
  stats.tree_height = height.height;
  stats.height_fallback = height.fallback;

  Rng tree_rng(DeriveSeed(seed, {4}));
  auto built = ConstructNoisyTree(ranked, split.group(Group::kG3), population,
                                  svim.items, height.height, k, params, oracle,
                                  tree_rng, &ledger);
  stats.construction = built.stats;
  if (params.cci) {
    const GuessModel model =
        MakeGuessModel(svim.items, static_cast<double>(db.size()));
    Cci(built.tree, model, params.theta0, params.cci_repetitions);
  }

  const ItemFrequencies item_freqs = FrequenciesOf(svim.items);
  const bool positive_items = std::any_of(
      item_freqs.begin(), item_freqs.end(),
      [](const auto& entry) { return entry.second > 0.0; });
  if (params.iwc && positive_items) {
    const auto pool = MineNoisyTree(built.tree, params.iwc_pool_factor * k);
    result.itemsets = ItemsetWeightedCombination(pool, item_freqs, params.gamma,
                                                 params.omega, k);
  } else {
    result.itemsets = MineNoisyTree(built.tree, k);
  }
  stats.reports = ledger.total();
  stats.every_user_once = ledger.EveryUserExactlyOnce();
  stats.no_user_twice = ledger.NoUserTwice();
  return result;
}

}  // namespace ldpfim
