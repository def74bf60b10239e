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
#include <map>
#include <numeric>

#include "gtest/gtest.h"
#include "ldpfim/exact_miner.h"
#include "test_support.h"

namespace ldpfim {
namespace {

std::vector<UserId> AllUsers(std::size_t n) {
  std::vector<UserId> users(n);
  std::iota(users.begin(), users.end(), 0);
  return users;
}

TEST(PercentileTest, CumulativeThreshold) {
  const std::vector<double> h = {0, 50, 30, 20};
  const auto r = PercentileFromHistogram(h, 0.9);
  EXPECT_EQ(r.length, 3u);
  EXPECT_FALSE(r.fallback);
}

TEST(PercentileTest, StrictInequality) {
  // Lengths [1, 1, 1, 1, 2]: 0.8 of the mass sits at length 1, which is not
  // strictly above 0.8.
  const std::vector<double> h = {0, 4, 1};
  EXPECT_EQ(PercentileFromHistogram(h, 0.8).length, 2u);
  EXPECT_EQ(PercentileFromHistogram(h, 0.79).length, 1u);
}

TEST(PercentileTest, TinyTauGivesFirstPositiveBin) {
  const std::vector<double> h = {9, 0, -3, 5, 1};
  EXPECT_EQ(PercentileFromHistogram(h, 1e-9).length, 3u);
}

TEST(PercentileTest, NegativeBinsClampedAndZeroBinIgnored) {
  const std::vector<double> h = {1000, 10, -50, 10};
  EXPECT_EQ(PercentileFromHistogram(h, 0.5).length, 3u);
  EXPECT_EQ(PercentileFromHistogram(h, 0.4).length, 1u);
}

TEST(PercentileTest, AllZeroFallsBackToOne) {
  const std::vector<double> h = {7, 0, -2, 0};
  const auto r = PercentileFromHistogram(h, 0.9);
  EXPECT_EQ(r.length, 1u);
  EXPECT_TRUE(r.fallback);
}

TEST(PercentileTest, TauOneReturnsMaxLength) {
  const std::vector<double> h = {0, 5, 5};
  EXPECT_EQ(PercentileFromHistogram(h, 1.0).length, 2u);
}

TEST(PercentileTest, RejectsBadTau) {
  const std::vector<double> h = {0, 1};
  EXPECT_THROW(PercentileFromHistogram(h, 0.0), std::invalid_argument);
  EXPECT_THROW(PercentileFromHistogram(h, 1.5), std::invalid_argument);
}

TEST(PercentileTest, MonotoneInTau) {
  Rng rng(3);
  std::uniform_real_distribution<double> u(-5, 20);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> h(12);
    for (double& x : h) x = u(rng);
    std::size_t last = 0;
    for (double tau = 0.05; tau <= 1.0; tau += 0.05) {
      const auto l = PercentileFromHistogram(h, tau).length;
      EXPECT_GE(l, last);
      last = l;
    }
  }
}

TEST(PercentileTest, NoiselessReportsReproduceTruePercentile) {
  const auto db = GenerateSynthetic(3000, 30, {.mean_length = 4.0}, 12);
  const auto users = AllUsers(db.size());
  ExactOracle oracle;
  Rng rng(1);
  const std::size_t max_len = 10;
  const auto got = CollectPercentileLength(
      users, users, [&](UserId u) { return db.transactions[u].size(); }, max_len,
      0.9, oracle, rng, nullptr);
  std::vector<double> h(max_len + 1, 0);
  for (const auto& t : db.transactions) h[std::min(t.size(), max_len)] += 1;
  double total = 0, cum = 0;
  for (std::size_t j = 1; j <= max_len; ++j) total += h[j];
  std::size_t want = max_len;
  for (std::size_t l = 1; l <= max_len; ++l) {
    cum += h[l];
    if (cum / total > 0.9) {
      want = l;
      break;
    }
  }
  EXPECT_EQ(got.length, want);
}

TEST(SvimTest, NoiselessRecoversExactItemRanking) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    const auto db = testing::RandomDb(600, 12, 0.2 + 0.05 * seed, seed);
    const auto users = AllUsers(db.size());
    ExactOracle oracle;
    Rng rng(seed);
    ReportLedger ledger(db.size());
    SvimParams params;
    params.tau = 1.0;
    const std::size_t k = 4;
    const auto result = Svim(db, users, users, k, oracle, params, rng, &ledger);

    // Sampling one item per user weights each occurrence by 1/|t|; the
    // pruned domain is the top 2k under that weight.
    std::map<Item, double> sampled;
    std::map<Item, double> support;
    for (const auto& t : db.transactions) {
      for (Item x : t) {
        sampled[x] += 1.0 / static_cast<double>(t.size());
        support[x] += 1.0;
      }
    }
    std::vector<ScoredItemset> by_sample;
    for (const auto& [x, w] : sampled) by_sample.push_back({{x}, w});
    std::sort(by_sample.begin(), by_sample.end(), testing::CanonicalBefore);
    by_sample.resize(2 * k);
    std::vector<ScoredItemset> kept;
    for (const auto& e : by_sample) kept.push_back({e.items, support[e.items[0]]});
    std::sort(kept.begin(), kept.end(), testing::CanonicalBefore);

    std::vector<Item> want_domain, got_domain = result.pruned_domain;
    for (const auto& e : by_sample) want_domain.push_back(e.items[0]);
    std::sort(want_domain.begin(), want_domain.end());
    std::sort(got_domain.begin(), got_domain.end());
    EXPECT_EQ(got_domain, want_domain);
    ASSERT_EQ(result.items.size(), k);
    for (std::size_t i = 0; i < k; ++i) {
      EXPECT_EQ(result.items[i].items, kept[i].items);
      EXPECT_NEAR(result.items[i].frequency, kept[i].frequency, 1e-9);
    }
    EXPECT_TRUE(ledger.EveryUserExactlyOnce());
  }
}

TEST(SvimTest, KEqualToDomainKeepsEverything) {
  const auto db = testing::RandomDb(300, 6, 0.4, 2);
  const auto users = AllUsers(db.size());
  OlhOracle oracle(1.0);
  Rng rng(2);
  const auto result = Svim(db, users, users, 6, oracle, {}, rng, nullptr);
  EXPECT_EQ(result.pruned_domain.size(), 6u);
  EXPECT_EQ(result.items.size(), 6u);
}

TEST(SvimTest, RejectsKAboveDomain) {
  const auto db = testing::RandomDb(30, 5, 0.4, 2);
  const auto users = AllUsers(db.size());
  OlhOracle oracle(1.0);
  Rng rng(2);
  EXPECT_THROW(Svim(db, users, users, 6, oracle, {}, rng, nullptr),
               std::invalid_argument);
  EXPECT_THROW(Svim(db, users, users, 0, oracle, {}, rng, nullptr),
               std::invalid_argument);
}

TEST(SvimTest, DefaultTau) { EXPECT_DOUBLE_EQ(SvimParams{}.tau, 0.9); }

TEST(SvimTest, PrivateRunFindsDominantItems) {
  SyntheticParams sp;
  sp.mean_length = 3.0;
  sp.zipf_exponent = 1.5;
  const auto db = GenerateSynthetic(60000, 40, sp, 5);
  const auto users = AllUsers(db.size());
  OlhOracle oracle(2.0);
  Rng rng(9);
  ReportLedger ledger(db.size());
  const auto result = Svim(db, users, users, 3, oracle, {}, rng, &ledger);
  std::vector<Item> got;
  for (const auto& e : result.items.entries) got.push_back(e.items[0]);
  std::sort(got.begin(), got.end());
  EXPECT_EQ(got, (std::vector<Item>{1, 2, 3}));
  EXPECT_TRUE(ledger.EveryUserExactlyOnce());
}

}  // namespace
}  // namespace ldpfim
