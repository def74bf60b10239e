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

#include "ldpfim/metrics.h"

#include <map>
#include <stdexcept>

namespace ldpfim {
namespace {

std::map<Itemset, std::size_t> IndexOf(const RankedItemsets& list) {
  std::map<Itemset, std::size_t> index;
  for (std::size_t i = 0; i < list.size(); ++i) index.emplace(list[i].items, i);
  return index;
}

}  // namespace

double Ncr(const RankedItemsets& truth, const RankedItemsets& estimated) {
  const std::size_t k = truth.size();
  if (k == 0) throw std::invalid_argument("empty true top-k");
  if (estimated.size() > k) {
    throw std::invalid_argument("estimated list is longer than k");
  }
  const auto rank = IndexOf(truth);
  double score = 0.0;
  for (const auto& e : estimated.entries) {
    auto it = rank.find(e.items);
    if (it != rank.end()) score += static_cast<double>(k - it->second);
  }
  const double kd = static_cast<double>(k);
  return score / (kd * (kd + 1.0) / 2.0);
}

SquaredError MeanSquaredError(const RankedItemsets& truth,
                              const RankedItemsets& estimated) {
  const auto index = IndexOf(truth);
  SquaredError out;
  double total = 0.0;
  for (const auto& e : estimated.entries) {
    auto it = index.find(e.items);
    if (it == index.end()) continue;
    const double diff = truth[it->second].frequency - e.frequency;
    total += diff * diff;
    ++out.intersection;
  }
  if (out.intersection > 0) {
    out.value = total / static_cast<double>(out.intersection);
    out.empty_intersection = false;
  }
  return out;
}

MetricReport Evaluate(const RankedItemsets& truth,
                      const RankedItemsets& estimated) {
  MetricReport report;
  report.k = truth.size();
  report.ncr = Ncr(truth, estimated);
  const auto mse = MeanSquaredError(truth, estimated);
  report.var = mse.value;
  report.intersection_size = mse.intersection;
  report.empty_intersection = mse.empty_intersection;
  return report;
}

}  // namespace ldpfim
