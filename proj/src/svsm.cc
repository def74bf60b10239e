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

#include "ldpfim/svsm.h"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "ldpfim/hashing.h"

namespace ldpfim {
namespace {

double MaxFrequency(const ItemFrequencies& freqs) {
  double best = 0.0;
  bool any = false;
  for (const auto& [item, f] : freqs) {
    if (!any || f > best) best = f;
    any = true;
  }
  if (!any || !(best > 0.0)) {
    throw std::invalid_argument("guessing frequency needs a positive maximum");
  }
  return best;
}

double ProductDescending(std::vector<double> factors) {
  std::sort(factors.begin(), factors.end(), std::greater<>());
  double g = 1.0;
  for (double f : factors) g *= f;
  return g;
}

}  // namespace

ItemFrequencies FrequenciesOf(const RankedItemsets& items) {
  ItemFrequencies freqs;
  for (const auto& e : items.entries) {
    if (e.items.size() != 1) {
      throw std::invalid_argument("expected single-item entries");
    }
    freqs[e.items[0]] = e.frequency;
  }
  return freqs;
}

double GuessingFrequency(const Itemset& itemset, const ItemFrequencies& freqs,
                         double gamma) {
  if (itemset.empty()) {
    throw std::invalid_argument("guessing frequency of an empty itemset");
  }
  const double max_f = MaxFrequency(freqs);
  std::vector<double> factors;
  factors.reserve(itemset.size());
  for (Item x : itemset) {
    auto it = freqs.find(x);
    if (it == freqs.end()) {
      throw std::invalid_argument("item without a known frequency");
    }
    factors.push_back(gamma * std::max(it->second, 0.0) / max_f);
  }
  return ProductDescending(std::move(factors));
}

CandidateItemsets BuildCandidates(const RankedItemsets& frequent_items,
                                  double gamma, std::size_t limit) {
  if (frequent_items.empty()) {
    throw std::invalid_argument("no frequent items to build candidates from");
  }
  if (limit == 0) throw std::invalid_argument("candidate limit must be positive");
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw std::invalid_argument("gamma must lie in (0, 1]");
  }
  const ItemFrequencies freqs = FrequenciesOf(frequent_items);
  const double max_f = MaxFrequency(freqs);

  struct Factor {
    Item item;
    double value;
  };
  std::vector<Factor> sorted;
  for (const auto& e : frequent_items.entries) {
    if (e.frequency > 0.0) {
      sorted.push_back({e.items[0], gamma * e.frequency / max_f});
    }
  }
  std::sort(sorted.begin(), sorted.end(), [](const Factor& a, const Factor& b) {
    if (a.value != b.value) return a.value > b.value;
    return a.item < b.item;
  });

  struct Frontier {
    std::vector<std::size_t> positions;
    ScoredItemset scored;
  };
  auto make = [&](std::vector<std::size_t> positions) {
    Frontier f;
    std::vector<double> factors;
    Itemset items;
    for (std::size_t p : positions) {
      factors.push_back(sorted[p].value);
      items.push_back(sorted[p].item);
    }
    f.scored = {MakeItemset(std::move(items)), ProductDescending(std::move(factors))};
    f.positions = std::move(positions);
    return f;
  };
  auto worse = [](const Frontier& a, const Frontier& b) {
    return RanksBefore(b.scored, a.scored);
  };
  std::priority_queue<Frontier, std::vector<Frontier>, decltype(worse)> frontier(
      worse);

  CandidateItemsets out;
  if (sorted.empty()) return out;
  frontier.push(make({0}));
  while (!frontier.empty() && out.itemsets.size() < limit) {
    Frontier top = frontier.top();
    frontier.pop();
    out.itemsets.push_back(top.scored);
    const std::size_t last = top.positions.back();
    if (last + 1 < sorted.size()) {
      auto replaced = top.positions;
      replaced.back() = last + 1;
      frontier.push(make(std::move(replaced)));
      auto extended = top.positions;
      extended.push_back(last + 1);
      frontier.push(make(std::move(extended)));
    }
  }
  return out;
}

SvsmEstimate EstimateCandidateItemsets(
    const TransactionDB& db, const CandidateItemsets& candidates,
    std::span<const UserId> size_users, std::span<const UserId> freq_users,
    std::span<const UserId> population, std::size_t k, double tau,
    const FrequencyOracle& oracle, Rng& rng, ReportLedger* ledger) {
  if (candidates.itemsets.empty()) {
    throw std::invalid_argument("empty candidate itemset domain");
  }
  const auto& sets = candidates.itemsets;
  auto contained = [&](UserId u) {
    UserInput in;
    const auto& t = db.transactions[u];
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (std::includes(t.begin(), t.end(), sets[i].items.begin(),
                        sets[i].items.end())) {
        in.push_back(static_cast<std::uint32_t>(i));
      }
    }
    return in;
  };

  SvsmEstimate est;
  est.candidates = candidates;
  const auto length = CollectPercentileLength(
      size_users, population, [&](UserId u) { return contained(u).size(); },
      sets.size(), tau, oracle, rng, ledger);
  est.padding_length = length.length;
  est.padding_fallback = length.fallback;

  std::vector<ElementKey> keys;
  keys.reserve(sets.size());
  for (const auto& s : sets) keys.push_back(EncodeItemSequence(s.items));
  CollectionRequest request;
  request.domain = keys;
  request.reporters = freq_users;
  request.population = population;
  request.input_of = contained;
  request.padding = est.padding_length;
  const auto freq = oracle.Collect(request, rng, ledger);
  std::vector<ScoredItemset> scored;
  scored.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    scored.push_back({sets[i].items, freq[i]});
  }
  est.itemsets = SelectTopK(std::move(scored), k);
  return est;
}

SvsmRun RunSvsm(const TransactionDB& db, std::size_t k,
                const FrequencyOracle& oracle, const SvsmRunParams& params,
                std::uint64_t seed) {
  const GroupSplit split =
      SplitGroups(db.size(), params.fractions, DeriveSeed(seed, {1}));
  std::vector<UserId> population(db.size());
  std::iota(population.begin(), population.end(), 0);
  ReportLedger ledger(db.size());

  Rng svim_rng(DeriveSeed(seed, {2}));
  SvsmRun run;
  run.frequent_items = Svim(db, split.group(Group::kG1), population, k, oracle,
                            params.svim, svim_rng, &ledger);
  const auto candidates =
      BuildCandidates(run.frequent_items.items, params.svsm.gamma, 2 * k);
  run.candidates = candidates.itemsets.size();

  Rng est_rng(DeriveSeed(seed, {3}));
  const auto est = EstimateCandidateItemsets(
      db, candidates, split.group(Group::kG2), split.group(Group::kG3),
      population, k, params.svsm.tau, oracle, est_rng, &ledger);
  run.itemsets = est.itemsets;
  run.padding_length = est.padding_length;
  run.reports = ledger.total();
  run.every_user_once = ledger.EveryUserExactlyOnce();
  return run;
}

}  // namespace ldpfim
