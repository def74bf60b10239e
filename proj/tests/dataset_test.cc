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

#include "ldpfim/dataset.h"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <string>

#include "gtest/gtest.h"

namespace ldpfim {
namespace {

namespace fs = std::filesystem;

class TempFile {
 public:
  explicit TempFile(const std::string& contents) {
    path_ = fs::temp_directory_path() /
            ("ldpfim_dataset_" + std::to_string(counter_++) + "_" +
             std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
             ".txt");
    std::ofstream(path_) << contents;
  }
  ~TempFile() { fs::remove(path_); }
  const fs::path& path() const { return path_; }

 private:
  static inline int counter_ = 0;
  fs::path path_;
};

TEST(LoadTransactionsTest, ParsesOneTransactionPerLine) {
  TempFile file("1 2 3\n2 3\n");
  const TransactionDB db = LoadTransactions(file.path());
  ASSERT_EQ(db.size(), 2u);
  EXPECT_EQ(db.domain.size(), 3u);
  EXPECT_EQ(db.transactions[0], (Itemset{1, 2, 3}));
  EXPECT_EQ(db.transactions[1], (Itemset{2, 3}));
}

TEST(LoadTransactionsTest, DropsDuplicateItems) {
  TempFile file("5 5 7\n");
  const TransactionDB db = LoadTransactions(file.path());
  EXPECT_EQ(db.transactions[0], (Itemset{5, 7}));
}

TEST(LoadTransactionsTest, SkipsBlankAndMetadataLines) {
  TempFile file("# comment\n\n1 2\n@CONVERTED\n3\n");
  const TransactionDB db = LoadTransactions(file.path());
  EXPECT_EQ(db.size(), 2u);
}

TEST(LoadTransactionsTest, ReportsLineOfBadToken) {
  TempFile file("1 2\n3 x\n");
  try {
    LoadTransactions(file.path());
    FAIL() << "expected a parse error";
  } catch (const std::exception& e) {
    EXPECT_NE(std::string(e.what()).find(":2:"), std::string::npos) << e.what();
  }
}

TEST(LoadTransactionsTest, RejectsNegativeAndMissingFiles) {
  TempFile file("1 -2\n");
  EXPECT_THROW(LoadTransactions(file.path()), std::exception);
  EXPECT_THROW(LoadTransactions("/nonexistent/ldpfim.txt"), std::exception);
}

TEST(LoadTransactionsTest, RoundTripsThroughWrite) {
  const TransactionDB db = MakeTransactionDB({{3, 1}, {2}, {1, 2, 3, 9}});
  TempFile file("");
  WriteTransactions(db, file.path());
  EXPECT_EQ(LoadTransactions(file.path()), db);
}

TEST(ItemDomainTest, RejectsDuplicatesAndEmpty) {
  EXPECT_THROW(ItemDomain({1, 2, 1}), std::invalid_argument);
  EXPECT_THROW(ItemDomain(std::vector<Item>{}), std::invalid_argument);
  EXPECT_TRUE(ItemDomain({4, 2}).Contains(2));
}

TEST(GenerateSyntheticTest, HasRequestedShape) {
  const TransactionDB db = GenerateSynthetic(2000, 50, {}, 3);
  EXPECT_EQ(db.size(), 2000u);
  EXPECT_EQ(db.domain.size(), 50u);
  for (const auto& t : db.transactions) {
    ASSERT_FALSE(t.empty());
    EXPECT_TRUE(std::is_sorted(t.begin(), t.end()));
    EXPECT_EQ(std::set<Item>(t.begin(), t.end()).size(), t.size());
    for (Item x : t) EXPECT_TRUE(x >= 1 && x <= 50);
  }
}

TEST(GenerateSyntheticTest, DegenerateSingleItem) {
  const TransactionDB db = GenerateSynthetic(1, 1, {.mean_length = 1.0}, 9);
  ASSERT_EQ(db.size(), 1u);
  EXPECT_EQ(db.transactions[0], (Itemset{1}));
}

TEST(GenerateSyntheticTest, IsPureInSeed) {
  SyntheticParams params;
  params.patterns = {{{1, 2, 3}, 0.2}};
  EXPECT_EQ(GenerateSynthetic(500, 30, params, 42),
            GenerateSynthetic(500, 30, params, 42));
  EXPECT_NE(GenerateSynthetic(500, 30, params, 42),
            GenerateSynthetic(500, 30, params, 43));
}

TEST(GenerateSyntheticTest, MeanLengthAndPopularityFollowModel) {
  const TransactionDB db = GenerateSynthetic(20000, 200, {.mean_length = 5.0}, 1);
  double total = 0;
  std::vector<int> counts(201, 0);
  for (const auto& t : db.transactions) {
    total += t.size();
    for (Item x : t) ++counts[x];
  }
  EXPECT_NEAR(total / db.size(), 5.0, 0.2);
  EXPECT_GT(counts[1], counts[10]);
  EXPECT_GT(counts[10], counts[100]);
}

TEST(GenerateSyntheticTest, PlantsPatternsAtTheirRate) {
  SyntheticParams params;
  params.mean_length = 2.0;
  params.patterns = {{{40, 41, 42}, 0.25}};
  const TransactionDB db = GenerateSynthetic(20000, 50, params, 8);
  int hits = 0;
  for (const auto& t : db.transactions) {
    if (std::includes(t.begin(), t.end(), params.patterns[0].items.begin(),
                      params.patterns[0].items.end())) {
      ++hits;
    }
  }
  EXPECT_NEAR(hits / 20000.0, 0.25, 0.02);
}

TEST(GenerateSyntheticTest, RejectsInconsistentParams) {
  EXPECT_THROW(GenerateSynthetic(10, 5, {.mean_length = 6.0}, 1),
               std::invalid_argument);
  SyntheticParams bad;
  bad.patterns = {{{7}, 0.5}};
  EXPECT_THROW(GenerateSynthetic(10, 5, bad, 1), std::invalid_argument);
}

TEST(SplitGroupsTest, SizesFollowFractions) {
  const GroupSplit split = SplitGroups(10, {0.5, 0.1, 0.4}, 1);
  EXPECT_EQ(split.group(Group::kG1).size(), 5u);
  EXPECT_EQ(split.group(Group::kG2).size(), 1u);
  EXPECT_EQ(split.group(Group::kG3).size(), 4u);
}

TEST(SplitGroupsTest, AllToFirstGroup) {
  const GroupSplit split = SplitGroups(7, {1.0, 0.0, 0.0}, 1);
  EXPECT_EQ(split.group(Group::kG1).size(), 7u);
  EXPECT_TRUE(split.group(Group::kG2).empty());
  EXPECT_TRUE(split.group(Group::kG3).empty());
}

TEST(SplitGroupsTest, RejectsBadFractions) {
  EXPECT_THROW(SplitGroups(10, {0.5, 0.5, 0.1}, 1), std::invalid_argument);
  EXPECT_THROW(SplitGroups(10, {1.2, -0.2, 0.0}, 1), std::invalid_argument);
}

TEST(SplitGroupsTest, PartitionsExactlyForManyFractions) {
  const std::vector<std::array<double, 3>> cases = {
      {0.5, 0.1, 0.4}, {1.0 / 3, 1.0 / 3, 1.0 / 3}, {0.0, 0.0, 1.0},
      {0.7, 0.2, 0.1}, {0.01, 0.98, 0.01}};
  for (std::size_t n : {1u, 2u, 17u, 1000u}) {
    for (const auto& f : cases) {
      const GroupSplit split = SplitGroups(n, f, n * 31 + 7);
      std::vector<int> seen(n, 0);
      for (int g = 0; g < 3; ++g) {
        const auto& members = split.members[g];
        EXPECT_LE(std::abs(static_cast<double>(members.size()) -
                           std::floor(f[g] * n)),
                  1.0);
        for (UserId u : members) {
          ++seen[u];
          EXPECT_EQ(static_cast<int>(split.labels[u]), g);
        }
      }
      for (int s : seen) EXPECT_EQ(s, 1);
    }
  }
}

TEST(SplitEvenlyTest, NearEqualContiguousParts) {
  std::vector<UserId> users(10);
  std::iota(users.begin(), users.end(), 0);
  const auto parts = SplitEvenly(users, 3);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0], (std::vector<UserId>{0, 1, 2, 3}));
  EXPECT_EQ(parts[1], (std::vector<UserId>{4, 5, 6}));
  EXPECT_EQ(parts[2], (std::vector<UserId>{7, 8, 9}));
}

TEST(DatabaseDigestTest, DependsOnContent) {
  const auto a = MakeTransactionDB({{1, 2}, {3}});
  const auto b = MakeTransactionDB({{1, 2}, {4}});
  EXPECT_EQ(DatabaseDigest(a), DatabaseDigest(a));
  EXPECT_NE(DatabaseDigest(a), DatabaseDigest(b));
}

}  // namespace
}  // namespace ldpfim
