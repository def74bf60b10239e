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

#include "ldpfim/postprocess.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace ldpfim {
namespace {

void CheckWeight(double weight) {
  if (!(weight >= 0.0 && weight <= 1.0)) {
    throw std::invalid_argument("combination weight must lie in [0, 1]");
  }
}

double MaxOf(std::span<const double> values) {
  return values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
}

}  // namespace

GuessModel MakeGuessModel(const RankedItemsets& frequent_items,
                          double population) {
  if (!(population > 0.0)) {
    throw std::invalid_argument("population must be positive");
  }
  GuessModel model;
  for (const auto& e : frequent_items.entries) {
    model.probabilities.push_back(
        std::clamp(e.frequency / population, 0.0, 1.0));
  }
  return model;
}

double ChildGuessFactor(const GuessModel& model,
                        std::optional<std::size_t> parent_rank,
                        std::size_t child_rank) {
  const auto& p = model.probabilities;
  if (child_rank >= p.size()) throw std::out_of_range("rank outside model");
  const std::size_t first = parent_rank ? *parent_rank + 1 : 0;
  if (first > child_rank) {
    throw std::invalid_argument("child must rank after its parent");
  }
  double factor = p[child_rank];
  for (std::size_t r = first; r < child_rank; ++r) factor *= 1.0 - p[r];
  return factor;
}

double GuessingProbability(std::span<const std::size_t> prefix_ranks,
                           const GuessModel& model) {
  if (prefix_ranks.empty()) {
    throw std::invalid_argument("guessing probability of an empty prefix");
  }
  double g = 1.0;
  std::optional<std::size_t> previous;
  for (std::size_t r : prefix_ranks) {
    g *= ChildGuessFactor(model, previous, r);
    previous = r;
  }
  return g;
}

std::vector<double> PrefixWeightedCombination(std::span<const double> queried,
                                              std::span<const double> guesses,
                                              double weight) {
  if (queried.size() != guesses.size()) {
    throw std::invalid_argument("queried and guessed prefix lists differ");
  }
  CheckWeight(weight);
  const double q_max = MaxOf(queried);
  const double g_max = MaxOf(guesses);
  std::vector<double> out(queried.size());
  for (std::size_t i = 0; i < queried.size(); ++i) {
    const double q = q_max > 0.0 ? queried[i] / q_max : 0.0;
    const double g = g_max > 0.0 ? guesses[i] / g_max : 0.0;
    if (weight == 1.0) {
      out[i] = queried[i];
    } else {
      out[i] = (weight * q + (1.0 - weight) * g) * std::max(q_max, 0.0);
    }
  }
  return out;
}

double CciTheta(double parent_guess, std::span<const double> child_guesses) {
  if (!(parent_guess > 0.0)) return 0.0;
  return std::accumulate(child_guesses.begin(), child_guesses.end(), 0.0) /
         parent_guess;
}

CciStepResult CciStep(double parent, std::span<double> children, double theta,
                      double theta0) {
  if (children.empty()) {
    throw std::invalid_argument("constrained inference needs children");
  }
  const double sum = std::accumulate(children.begin(), children.end(), 0.0);
  CciStepResult result;
  result.parent = parent;
  result.theta = parent < sum ? 1.0 : theta;
  if (!(result.theta >= theta0) || !(result.theta > 0.0)) return result;
  const double b = static_cast<double>(children.size());
  result.parent = b / (b + 1.0) * parent + sum / (result.theta * (b + 1.0));
  const double shift = (result.theta * result.parent - sum) / b;
  for (double& c : children) c += shift;
  result.applied = true;
  return result;
}

void Cci(NoisyFpTree& tree, const GuessModel& model, double theta0,
         std::size_t repetitions) {
  std::vector<double> guess(tree.size(), 0.0);
  for (std::size_t l = 1; l <= tree.depth(); ++l) {
    for (auto id : tree.level(l)) {
      const auto& n = tree.node(id);
      const auto& parent = tree.node(n.parent);
      const double base = n.parent == NoisyFpTree::kRoot ? 1.0 : guess[n.parent];
      guess[id] = base * ChildGuessFactor(
                             model,
                             parent.rank == NoisyFpTree::kNoRank
                                 ? std::nullopt
                                 : std::optional<std::size_t>(parent.rank),
                             n.rank);
    }
  }
  std::vector<double> counts;
  std::vector<double> child_guesses;
  for (std::size_t rep = 0; rep < repetitions; ++rep) {
    for (std::size_t l = 1; l < tree.depth(); ++l) {
      for (auto id : tree.level(l)) {
        const auto& n = tree.node(id);
        if (n.children.empty()) continue;
        counts.clear();
        child_guesses.clear();
        for (auto c : n.children) {
          counts.push_back(tree.node(c).count);
          child_guesses.push_back(guess[c]);
        }
        const double theta = CciTheta(guess[id], child_guesses);
        const auto step = CciStep(n.count, counts, theta, theta0);
        if (!step.applied) continue;
        tree.set_count(id, step.parent);
        const auto children = n.children;
        for (std::size_t i = 0; i < children.size(); ++i) {
          tree.set_count(children[i], counts[i]);
        }
      }
    }
    for (std::size_t l = 1; l <= tree.depth(); ++l) {
      for (auto id : tree.level(l)) {
        if (tree.node(id).count < 0.0) tree.set_count(id, 0.0);
      }
    }
  }
}

BalanceResult NegativePositiveBalance(std::vector<double> estimates, Rng& rng,
                                      double unit) {
  if (!(unit > 0.0)) throw std::invalid_argument("balance unit must be positive");
  BalanceResult result;
  double debit = 0.0;
  std::vector<std::size_t> positives;
  for (std::size_t i = 0; i < estimates.size(); ++i) {
    if (estimates[i] < 0.0) {
      debit -= estimates[i];
      estimates[i] = 0.0;
    } else if (estimates[i] > 0.0) {
      positives.push_back(i);
    }
  }
  while (debit > 0.0 && !positives.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, positives.size() - 1);
    const std::size_t slot = pick(rng);
    double& v = estimates[positives[slot]];
    const double amount = std::min({unit, debit, v});
    v -= amount;
    debit -= amount;
    if (v <= 0.0) {
      v = 0.0;
      positives[slot] = positives.back();
      positives.pop_back();
    }
  }
  result.values = std::move(estimates);
  result.dropped_debit = debit;
  return result;
}

RankedItemsets ItemsetWeightedCombination(const RankedItemsets& mined,
                                          const ItemFrequencies& item_freqs,
                                          double gamma, double weight,
                                          std::size_t k) {
  CheckWeight(weight);
  if (weight == 1.0 || mined.empty()) {
    return SelectTopK(mined.entries, k);
  }
  std::vector<double> guesses;
  guesses.reserve(mined.size());
  double mined_max = 0.0;
  for (const auto& e : mined.entries) {
    guesses.push_back(GuessingFrequency(e.items, item_freqs, gamma));
    mined_max = std::max(mined_max, e.frequency);
  }
  const double guess_max = *std::max_element(guesses.begin(), guesses.end());
  const double scale = guess_max > 0.0 ? mined_max / guess_max : 0.0;
  std::vector<ScoredItemset> combined;
  combined.reserve(mined.size());
  for (std::size_t i = 0; i < mined.size(); ++i) {
    combined.push_back(
        {mined[i].items, weight * mined[i].frequency +
                             (1.0 - weight) * guesses[i] * scale});
  }
  return SelectTopK(std::move(combined), k);
}

}  // namespace ldpfim
