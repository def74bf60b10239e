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

#ifndef LDPFIM_POSTPROCESS_H_
#define LDPFIM_POSTPROCESS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "ldpfim/hashing.h"
#include "ldpfim/itemsets.h"
#include "ldpfim/noisy_tree.h"
#include "ldpfim/svsm.h"

namespace ldpfim {

// Occurrence probability of each frequent item, by rank, in [0, 1].
struct GuessModel {
  std::vector<double> probabilities;
};

// Divides each frequency by `population` and clamps into [0, 1].
GuessModel MakeGuessModel(const RankedItemsets& frequent_items,
                          double population);

// Probability that a transaction continues from the item of `parent_rank`
// (or from the start when absent) directly to the item of `child_rank`: the
// child's probability times (1 - p) for every rank strictly in between.
double ChildGuessFactor(const GuessModel& model,
                        std::optional<std::size_t> parent_rank,
                        std::size_t child_rank);

// Guessing probability of the prefix whose items have the given ranks: the
// product of ChildGuessFactor along the path from the start. Throws on an
// empty or non-increasing rank list, or a rank outside the model.
double GuessingProbability(std::span<const std::size_t> prefix_ranks,
                           const GuessModel& model);

// Blends queried level estimates with guessing probabilities. Both sides are
// divided by their own maximum, combined as w * queried + (1 - w) * guess and
// multiplied back by the queried maximum. A side whose maximum is not
// positive contributes zeros. Throws on a size mismatch or w outside [0, 1].
std::vector<double> PrefixWeightedCombination(std::span<const double> queried,
                                              std::span<const double> guesses,
                                              double weight);

// Ratio of the children's guessing probabilities to the parent's.
double CciTheta(double parent_guess, std::span<const double> child_guesses);

struct CciStepResult {
  bool applied = false;
  double theta = 1.0;
  double parent = 0.0;
};

// One constrained-inference correction of a parent and its children. The
// ratio is forced to 1 when the parent count is below the children's sum, and
// nothing changes when the ratio is below `theta0`. On application the parent
// becomes b/(b+1) * parent + 1/(b+1) * sum / theta and every child is shifted
// by (theta * new_parent - sum) / b, so the children then sum to theta times
// the new parent. Throws if `children` is empty.
CciStepResult CciStep(double parent, std::span<double> children, double theta,
                      double theta0);

// Runs `repetitions` top-down sweeps of CciStep over every node with children,
// clamping negative counts to zero after each sweep. The root is never
// corrected.
void Cci(NoisyFpTree& tree, const GuessModel& model, double theta0,
         std::size_t repetitions);

struct BalanceResult {
  std::vector<double> values;
  // Part of the negative mass that positive entries could not absorb.
  double dropped_debit = 0.0;
  bool flagged() const { return dropped_debit > 0.0; }
};

// Zeroes negative entries and removes the same total from randomly chosen
// positive entries, `unit` at a time, never pushing an entry below zero.
BalanceResult NegativePositiveBalance(std::vector<double> estimates, Rng& rng,
                                      double unit = 1.0);

// Re-ranks mined itemsets by w * mined + (1 - w) * guess, where the guess is
// the guessing frequency rescaled so that its maximum over `mined` equals the
// largest mined frequency. Returns the best `k`.
RankedItemsets ItemsetWeightedCombination(const RankedItemsets& mined,
                                          const ItemFrequencies& item_freqs,
                                          double gamma, double weight,
                                          std::size_t k);

}  // namespace ldpfim

#endif  // LDPFIM_POSTPROCESS_H_
