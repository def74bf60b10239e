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

#include "ldpfim/svim.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace ldpfim {

PercentileLength PercentileFromHistogram(std::span<const double> histogram,
                                         double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) {
    throw std::invalid_argument("tau must lie in (0, 1]");
  }
  if (histogram.size() < 2) {
    throw std::invalid_argument("length histogram needs bins 0..max_len >= 1");
  }
  const std::size_t max_len = histogram.size() - 1;
  double total = 0.0;
  for (std::size_t j = 1; j <= max_len; ++j) {
    total += std::max(0.0, histogram[j]);
  }
  if (total <= 0.0) return {1, true};
  double cumulative = 0.0;
  for (std::size_t l = 1; l <= max_len; ++l) {
    cumulative += std::max(0.0, histogram[l]);
    if (cumulative / total > tau) return {l, false};
  }
  return {max_len, false};
}

PercentileLength CollectPercentileLength(
    std::span<const UserId> reporters, std::span<const UserId> population,
    const std::function<std::size_t(UserId)>& length_of, std::size_t max_len,
    double tau, const FrequencyOracle& oracle, Rng& rng, ReportLedger* ledger) {
  std::vector<ElementKey> domain;
  domain.reserve(max_len + 1);
  for (std::size_t j = 0; j <= max_len; ++j) {
    domain.push_back(EncodeItem(static_cast<Item>(j)));
  }
  CollectionRequest request;
  request.domain = domain;
  request.reporters = reporters;
  request.population = population;
  request.input_of = [&](UserId u) {
    return UserInput{static_cast<std::uint32_t>(std::min(length_of(u), max_len))};
  };
  const auto histogram = oracle.Collect(request, rng, ledger);
  return PercentileFromHistogram(histogram, tau);
}

SvimResult Svim(const TransactionDB& db, std::span<const UserId> users,
                std::span<const UserId> population, std::size_t k,
                const FrequencyOracle& oracle, const SvimParams& params,
                Rng& rng, ReportLedger* ledger) {
  const auto& items = db.domain.items();
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (k > items.size()) {
    throw std::invalid_argument("k exceeds the number of items in the domain");
  }
  const auto sizes = ApportionSizes(
      users.size(),
      std::vector<double>(params.step_fractions.begin(),
                          params.step_fractions.end()));
  if (sizes[0] == 0 || sizes[1] == 0 || sizes[2] == 0) {
    throw std::invalid_argument("too few users to run every SVIM step");
  }
  const auto prune_users = users.subspan(0, sizes[0]);
  const auto size_users = users.subspan(sizes[0], sizes[1]);
  const auto freq_users = users.subspan(sizes[0] + sizes[1], sizes[2]);

  // Step 1: one sampled item per user over the whole domain.
  std::unordered_map<Item, std::uint32_t> index_of;
  std::vector<ElementKey> keys;
  keys.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    index_of.emplace(items[i], static_cast<std::uint32_t>(i));
    keys.push_back(EncodeItem(items[i]));
  }
  CollectionRequest prune;
  prune.domain = keys;
  prune.reporters = prune_users;
  prune.population = population;
  prune.input_of = [&](UserId u) {
    UserInput in;
    for (Item x : db.transactions[u]) {
      auto it = index_of.find(x);
      if (it != index_of.end()) in.push_back(it->second);
    }
    return in;
  };
  const auto prune_est = oracle.Collect(prune, rng, ledger);
  std::vector<ScoredItemset> scored;
  scored.reserve(items.size());
  for (std::size_t i = 0; i < items.size(); ++i) {
    scored.push_back({{items[i]}, prune_est[i]});
  }
  const auto pruned = SelectTopK(std::move(scored), std::min(2 * k, items.size()));

  SvimResult result;
  std::unordered_map<Item, std::uint32_t> pruned_index;
  std::vector<ElementKey> pruned_keys;
  for (const auto& e : pruned.entries) {
    pruned_index.emplace(e.items[0],
                         static_cast<std::uint32_t>(result.pruned_domain.size()));
    result.pruned_domain.push_back(e.items[0]);
    pruned_keys.push_back(EncodeItem(e.items[0]));
  }
  auto pruned_input = [&](UserId u) {
    UserInput in;
    for (Item x : db.transactions[u]) {
      auto it = pruned_index.find(x);
      if (it != pruned_index.end()) in.push_back(it->second);
    }
    return in;
  };

  // Step 2: padding length from the private length distribution.
  const auto length = CollectPercentileLength(
      size_users, population,
      [&](UserId u) { return pruned_input(u).size(); },
      result.pruned_domain.size(), params.tau, oracle, rng, ledger);
  result.padding_length = length.length;
  result.padding_fallback = length.fallback;

  // Step 3: padded frequency estimation over the pruned domain.
  CollectionRequest freq;
  freq.domain = pruned_keys;
  freq.reporters = freq_users;
  freq.population = population;
  freq.input_of = pruned_input;
  freq.padding = result.padding_length;
  const auto freq_est = oracle.Collect(freq, rng, ledger);
  std::vector<ScoredItemset> top;
  top.reserve(freq_est.size());
  for (std::size_t i = 0; i < freq_est.size(); ++i) {
    top.push_back({{result.pruned_domain[i]}, freq_est[i]});
  }
  result.items = SelectTopK(std::move(top), k);
  return result;
}

}  // namespace ldpfim
