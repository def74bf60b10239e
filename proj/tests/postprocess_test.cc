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

#include <cmath>
#include <numeric>
#include <random>

#include "gtest/gtest.h"

namespace ldpfim {
namespace {

const GuessModel kModel{{0.5, 0.4, 0.3}};

double Gp(std::vector<std::size_t> ranks, const GuessModel& m = kModel) {
  return GuessingProbability(ranks, m);
}

TEST(GuessingProbabilityTest, SkippedRanksContributeComplements) {
  EXPECT_DOUBLE_EQ(Gp({0, 2}), 0.5 * 0.6 * 0.3);
  EXPECT_NEAR(Gp({0, 2}), 0.09, 1e-15);
}

TEST(GuessingProbabilityTest, FirstItemAndLeadingSkips) {
  EXPECT_DOUBLE_EQ(Gp({0}), 0.5);
  EXPECT_DOUBLE_EQ(Gp({1}), 0.5 * 0.4);
  EXPECT_DOUBLE_EQ(Gp({2}), 0.5 * 0.6 * 0.3);
  EXPECT_DOUBLE_EQ(Gp({0, 1}), 0.5 * 0.4);
}

TEST(GuessingProbabilityTest, Errors) {
  EXPECT_THROW(Gp({}), std::invalid_argument);
  EXPECT_THROW(Gp({1, 1}), std::invalid_argument);
  EXPECT_THROW(Gp({2, 1}), std::invalid_argument);
  EXPECT_THROW(Gp({3}), std::out_of_range);
}

TEST(GuessingProbabilityTest, SumsOverAllPrefixes) {
  // Every prefix ends at its last item, so the probabilities of the prefixes
  // ending at rank r sum to p_r, and those of each length form a partition of
  // disjoint events.
  Rng rng(2);
  std::uniform_real_distribution<double> u(0, 1);
  for (std::size_t k = 1; k <= 10; ++k) {
    GuessModel m;
    for (std::size_t i = 0; i < k; ++i) m.probabilities.push_back(u(rng));
    std::vector<double> by_length(k + 1, 0), by_last(k, 0);
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
      std::vector<std::size_t> ranks;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask & (1u << i)) ranks.push_back(i);
      }
      const double g = GuessingProbability(ranks, m);
      by_length[ranks.size()] += g;
      by_last[ranks.back()] += g;
    }
    for (std::size_t l = 1; l <= k; ++l) EXPECT_LE(by_length[l], 1.0 + 1e-12);
    for (std::size_t r = 0; r < k; ++r) {
      EXPECT_NEAR(by_last[r], m.probabilities[r], 1e-12);
    }
  }
}

TEST(GuessModelTest, ClampsIntoUnitInterval) {
  RankedItemsets items;
  items.entries = {{{1}, 150}, {{2}, 40}, {{3}, -5}};
  const auto m = MakeGuessModel(items, 100);
  EXPECT_EQ(m.probabilities, (std::vector<double>{1.0, 0.4, 0.0}));
  EXPECT_THROW(MakeGuessModel(items, 0), std::invalid_argument);
}

TEST(ChildGuessFactorTest, AdjacentAndSkipped) {
  EXPECT_DOUBLE_EQ(ChildGuessFactor(kModel, 0, 1), 0.4);
  EXPECT_DOUBLE_EQ(ChildGuessFactor(kModel, 0, 2), 0.3 * (1 - 0.4));
  EXPECT_NEAR(ChildGuessFactor(kModel, 0, 2), 0.18, 1e-15);
  EXPECT_DOUBLE_EQ(ChildGuessFactor(kModel, std::nullopt, 0), 0.5);
  EXPECT_THROW(ChildGuessFactor(kModel, 2, 1), std::invalid_argument);
}

TEST(PrefixWeightedCombinationTest, WeightOneIsIdentity) {
  const std::vector<double> q = {10, -3, 7.5};
  const std::vector<double> g = {0.1, 0.5, 0.2};
  EXPECT_EQ(PrefixWeightedCombination(q, g, 1.0), q);
}

TEST(PrefixWeightedCombinationTest, WeightZeroGivesRescaledGuesses) {
  const std::vector<double> q = {10, 4, 2};
  const std::vector<double> g = {0.1, 0.5, 0.25};
  const auto out = PrefixWeightedCombination(q, g, 0.0);
  EXPECT_DOUBLE_EQ(out[0], 2.0);
  EXPECT_DOUBLE_EQ(out[1], 10.0);
  EXPECT_DOUBLE_EQ(out[2], 5.0);
}

TEST(PrefixWeightedCombinationTest, BlendsNormalizedSides) {
  const std::vector<double> q = {10, 5};
  const std::vector<double> g = {0.2, 0.4};
  const auto out = PrefixWeightedCombination(q, g, 0.9);
  EXPECT_DOUBLE_EQ(out[0], (0.9 * 1.0 + 0.1 * 0.5) * 10);
  EXPECT_DOUBLE_EQ(out[1], (0.9 * 0.5 + 0.1 * 1.0) * 10);
}

TEST(PrefixWeightedCombinationTest, NonPositiveSidesContributeZeros) {
  const std::vector<double> q = {-1, -2};
  const std::vector<double> g = {0.2, 0.4};
  const auto out = PrefixWeightedCombination(q, g, 0.5);
  EXPECT_DOUBLE_EQ(out[0], 0.0);
  EXPECT_DOUBLE_EQ(out[1], 0.0);
  const std::vector<double> zero = {0, 0};
  const std::vector<double> q2 = {4, 2};
  const auto out2 = PrefixWeightedCombination(q2, zero, 0.5);
  EXPECT_DOUBLE_EQ(out2[0], 2.0);
  EXPECT_DOUBLE_EQ(out2[1], 1.0);
}

TEST(PrefixWeightedCombinationTest, Errors) {
  const std::vector<double> a = {1, 2};
  const std::vector<double> b = {1};
  EXPECT_THROW(PrefixWeightedCombination(a, b, 0.5), std::invalid_argument);
  EXPECT_THROW(PrefixWeightedCombination(a, a, 1.5), std::invalid_argument);
}

TEST(CciStepTest, WorkedExample) {
  std::vector<double> children = {8, 6};
  const auto r = CciStep(10, children, 1.0, 0.3);
  EXPECT_TRUE(r.applied);
  EXPECT_NEAR(r.parent, 34.0 / 3, 1e-12);
  EXPECT_NEAR(children[0], 8 - 4.0 / 3, 1e-12);
  EXPECT_NEAR(children[1], 6 - 4.0 / 3, 1e-12);
  EXPECT_NEAR(children[0] + children[1], r.parent, 1e-12);
}

TEST(CciStepTest, SingleChild) {
  std::vector<double> children = {4};
  const auto r = CciStep(10, children, 0.5, 0.3);
  EXPECT_TRUE(r.applied);
  EXPECT_DOUBLE_EQ(r.parent, 0.5 * 10 + 0.5 * 4 / 0.5);
  EXPECT_DOUBLE_EQ(children[0], 0.5 * r.parent);
}

TEST(CciStepTest, LowRatioSkipped) {
  const double theta = CciTheta(0.2, std::vector<double>{0.05});
  EXPECT_DOUBLE_EQ(theta, 0.25);
  std::vector<double> children = {1.0};
  const auto r = CciStep(10, children, theta, 0.3);
  EXPECT_FALSE(r.applied);
  EXPECT_DOUBLE_EQ(r.parent, 10);
  EXPECT_DOUBLE_EQ(children[0], 1.0);
}

TEST(CciStepTest, ChildrenAboveParentForceUnitRatio) {
  std::vector<double> children = {7, 6};
  const auto r = CciStep(10, children, 0.1, 0.3);
  EXPECT_TRUE(r.applied);
  EXPECT_DOUBLE_EQ(r.theta, 1.0);
  EXPECT_NEAR(children[0] + children[1], r.parent, 1e-12);
}

TEST(CciStepTest, ChildrenSumToThetaTimesParent) {
  Rng rng(8);
  std::uniform_real_distribution<double> u(-50, 200);
  std::uniform_real_distribution<double> th(0.3, 1.0);
  for (int i = 0; i < 1000; ++i) {
    std::vector<double> children(1 + rng() % 6);
    for (double& c : children) c = u(rng);
    const double parent = u(rng) + 300;
    const double theta = th(rng);
    const auto r = CciStep(parent, children, theta, 0.3);
    ASSERT_TRUE(r.applied);
    EXPECT_NEAR(std::accumulate(children.begin(), children.end(), 0.0),
                r.theta * r.parent, 1e-9 * std::max(1.0, std::abs(r.parent)));
  }
}

TEST(CciStepTest, EmptyChildrenRejected) {
  std::vector<double> none;
  EXPECT_THROW(CciStep(1, none, 1, 0.3), std::invalid_argument);
}

TEST(CciTest, ConsistentTreeIsFixedPoint) {
  // Counts that equal n times the guessing probability of each prefix satisfy
  // every local constraint exactly.
  const GuessModel m{{0.6, 0.5, 0.4, 0.3}};
  const double n = 1000;
  NoisyFpTree tree({1, 2, 3, 4}, n);
  std::vector<std::pair<NoisyFpTree::NodeId, std::vector<std::size_t>>> nodes = {
      {NoisyFpTree::kRoot, {}}};
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const auto [id, path] = nodes[i];
    const std::size_t first = path.empty() ? 0 : path.back() + 1;
    for (std::size_t r = first; r < 4; ++r) {
      auto child_path = path;
      child_path.push_back(r);
      const auto c = tree.AddNode(id, r, n * GuessingProbability(child_path, m));
      nodes.push_back({c, child_path});
    }
  }
  std::vector<double> before;
  for (std::size_t id = 0; id < tree.size(); ++id) before.push_back(tree.node(id).count);
  Cci(tree, m, 0.3, 5);
  for (std::size_t id = 0; id < tree.size(); ++id) {
    EXPECT_NEAR(tree.node(id).count, before[id], 1e-9) << "node " << id;
  }
}

TEST(CciTest, SweepReachesLocalConsistency) {
  const GuessModel m{{0.5, 0.5}};
  NoisyFpTree tree({1, 2}, 100);
  const auto a = tree.AddNode(NoisyFpTree::kRoot, 0, 50);
  const auto ab = tree.AddNode(a, 1, 40);
  Cci(tree, m, 0.3, 1);
  EXPECT_NEAR(tree.node(ab).count, 0.5 * tree.node(a).count, 1e-12);
}

TEST(CciTest, ClampsNegativeCounts) {
  const GuessModel m{{0.9, 0.9, 0.9}};
  NoisyFpTree tree({1, 2, 3}, 100);
  const auto a = tree.AddNode(NoisyFpTree::kRoot, 0, 10);
  tree.AddNode(a, 1, -20);
  tree.AddNode(a, 2, 0);
  Cci(tree, m, 0.3, 1);
  for (std::size_t id = 1; id < tree.size(); ++id) EXPECT_GE(tree.node(id).count, 0.0);
}

TEST(NegativePositiveBalanceTest, WorkedExample) {
  Rng rng(1);
  const auto r = NegativePositiveBalance({5, -3, 4, -1}, rng);
  EXPECT_DOUBLE_EQ(std::accumulate(r.values.begin(), r.values.end(), 0.0), 5.0);
  for (double v : r.values) EXPECT_GE(v, 0.0);
  EXPECT_FALSE(r.flagged());
}

TEST(NegativePositiveBalanceTest, NonNegativeInputIsIdentity) {
  Rng rng(1);
  const std::vector<double> v = {0, 1.5, 3, 0};
  EXPECT_EQ(NegativePositiveBalance(v, rng).values, v);
}

TEST(NegativePositiveBalanceTest, DeterministicForSeed) {
  const std::vector<double> v = {10, -4, 7, -2, 3};
  Rng a(9), b(9);
  EXPECT_EQ(NegativePositiveBalance(v, a).values,
            NegativePositiveBalance(v, b).values);
}

TEST(NegativePositiveBalanceTest, InsufficientPositivesFlagged) {
  Rng rng(1);
  const auto r = NegativePositiveBalance({2, -5, -1}, rng);
  EXPECT_EQ(r.values, (std::vector<double>{0, 0, 0}));
  EXPECT_DOUBLE_EQ(r.dropped_debit, 4.0);
  EXPECT_TRUE(r.flagged());
}

TEST(NegativePositiveBalanceTest, FractionalEntriesAbsorbPartially) {
  Rng rng(4);
  const auto r = NegativePositiveBalance({0.25, 2.5, -1.5}, rng);
  EXPECT_DOUBLE_EQ(r.values[0] + r.values[1], 1.25);
  EXPECT_GE(r.values[0], 0.0);
  EXPECT_DOUBLE_EQ(r.values[2], 0.0);
}

TEST(ItemsetWeightedCombinationTest, WeightOneKeepsRanking) {
  RankedItemsets mined;
  mined.entries = {{{1}, 30}, {{1, 2}, 20}, {{2}, 10}};
  const ItemFrequencies f = {{1, 100}, {2, 50}};
  const auto out = ItemsetWeightedCombination(mined, f, 0.8, 1.0, 3);
  EXPECT_EQ(out.entries, mined.entries);
}

TEST(ItemsetWeightedCombinationTest, GuessBreaksEqualMinedFrequency) {
  RankedItemsets mined;
  mined.entries = {{{1, 3}, 20}, {{2}, 20}};
  const ItemFrequencies f = {{1, 100}, {2, 90}, {3, 10}};
  const auto out = ItemsetWeightedCombination(mined, f, 0.8, 0.5, 2);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0].items, (Itemset{2}));
  // The best guess is rescaled to the largest mined frequency.
  EXPECT_DOUBLE_EQ(out[0].frequency, 0.5 * 20 + 0.5 * 20);
  const double g13 = (0.8 * 1.0) * (0.8 * 0.1);
  const double g2 = 0.8 * 0.9;
  EXPECT_DOUBLE_EQ(out[1].frequency, 0.5 * 20 + 0.5 * g13 * (20 / g2));
}

TEST(ItemsetWeightedCombinationTest, TruncatesToK) {
  RankedItemsets mined;
  mined.entries = {{{1}, 3}, {{2}, 2}, {{3}, 1}};
  const ItemFrequencies f = {{1, 3}, {2, 2}, {3, 1}};
  EXPECT_EQ(ItemsetWeightedCombination(mined, f, 0.8, 0.7, 2).size(), 2u);
  EXPECT_THROW(ItemsetWeightedCombination(mined, f, 0.8, -0.1, 2),
               std::invalid_argument);
}

}  // namespace
}  // namespace ldpfim
