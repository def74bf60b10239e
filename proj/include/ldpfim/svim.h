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

#ifndef LDPFIM_SVIM_H_
#define LDPFIM_SVIM_H_

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "ldpfim/collector.h"
#include "ldpfim/dataset.h"
#include "ldpfim/itemsets.h"

namespace ldpfim {

struct PercentileLength {
  std::size_t length = 1;
  // Set when the clamped histogram had no mass and length 1 was returned.
  bool fallback = false;
};

// Smallest l in {1..max_len} whose cumulative clamped mass over bins 1..l,
// divided by the clamped mass over bins 1..max_len, exceeds `tau`.
// `histogram[j]` is the estimated count of length j for j = 0..max_len; bin 0
// is reported but does not enter the ratio. Negative bins are clamped to 0.
// Returns max_len if the ratio never exceeds tau. Requires 0 < tau <= 1.
PercentileLength PercentileFromHistogram(std::span<const double> histogram,
                                         double tau);

// Collects one length report per reporter over {0..max_len} (lengths above
// max_len are reported as max_len) and returns the tau-percentile.
PercentileLength CollectPercentileLength(
    std::span<const UserId> reporters, std::span<const UserId> population,
    const std::function<std::size_t(UserId)>& length_of, std::size_t max_len,
    double tau, const FrequencyOracle& oracle, Rng& rng, ReportLedger* ledger);

struct SvimParams {
  double tau = 0.9;
  // Share of the SVIM users spent on pruning, size estimation and frequency
  // estimation respectively.
  std::array<double, 3> step_fractions = {1.0 / 3, 1.0 / 3, 1.0 / 3};
};

struct SvimResult {
  // Top-k single items with padding-corrected frequencies at population scale.
  RankedItemsets items;
  // The 2k items kept by the pruning step, ranked by their pruning estimate.
  std::vector<Item> pruned_domain;
  std::size_t padding_length = 1;
  bool padding_fallback = false;
};

// Finds the k most frequent items with the three-step set-valued item mining
// protocol over `users` (each reports once). Throws if k < 1, k > d or
// `users` is too small to staff every step.
SvimResult Svim(const TransactionDB& db, std::span<const UserId> users,
                std::span<const UserId> population, std::size_t k,
                const FrequencyOracle& oracle, const SvimParams& params,
                Rng& rng, ReportLedger* ledger);

}  // namespace ldpfim

#endif  // LDPFIM_SVIM_H_
