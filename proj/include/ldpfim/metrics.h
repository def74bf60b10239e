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

#ifndef LDPFIM_METRICS_H_
#define LDPFIM_METRICS_H_

#include <cstddef>

#include "ldpfim/itemsets.h"

namespace ldpfim {

// Rank-weighted recall of the true top-k. An estimated itemset at true rank i
// (1-based) scores k - i + 1, any other scores 0, and the total is divided by
// k(k + 1) / 2. Throws if `truth` is empty or `estimated` has more than k
// entries.
double Ncr(const RankedItemsets& truth, const RankedItemsets& estimated);

struct SquaredError {
  // Mean of (true - estimated)^2 over the itemsets present in both lists.
  double value = 0.0;
  std::size_t intersection = 0;
  // Set when no itemset is shared and the value is reported as 0.
  bool empty_intersection = true;
};

SquaredError MeanSquaredError(const RankedItemsets& truth,
                              const RankedItemsets& estimated);

struct MetricReport {
  double ncr = 0.0;
  double var = 0.0;
  std::size_t intersection_size = 0;
  std::size_t k = 0;
  bool empty_intersection = true;
};

MetricReport Evaluate(const RankedItemsets& truth,
                      const RankedItemsets& estimated);

}  // namespace ldpfim

#endif  // LDPFIM_METRICS_H_
