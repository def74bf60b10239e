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

#ifndef LDPFIM_DATASET_H_
#define LDPFIM_DATASET_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "ldpfim/itemsets.h"

namespace ldpfim {

// Index of a user (equivalently, of its transaction) in a TransactionDB.
using UserId = std::uint32_t;

// Ordered list of distinct item identifiers.
class ItemDomain {
 public:
  ItemDomain() = default;
  // Throws std::invalid_argument on duplicates or an empty list.
  explicit ItemDomain(std::vector<Item> items);

  const std::vector<Item>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  bool Contains(Item item) const;

  friend bool operator==(const ItemDomain&, const ItemDomain&) = default;

 private:
  std::vector<Item> items_;
};

// Each transaction is an Itemset (sorted, duplicate free).
using Transaction = Itemset;

struct TransactionDB {
  std::vector<Transaction> transactions;
  ItemDomain domain;

  std::size_t size() const { return transactions.size(); }

  friend bool operator==(const TransactionDB&, const TransactionDB&) = default;
};

// Builds a database from raw rows: rows are deduplicated and sorted, and the
// domain is the set of items seen. Throws if no item is present.
TransactionDB MakeTransactionDB(std::vector<std::vector<Item>> rows);

// Reads the SPMF plain format: one transaction per line, items separated by
// whitespace. Blank lines and SPMF metadata lines (starting with '#', '%' or
// '@') are skipped. Errors carry the 1-based line number.
TransactionDB LoadTransactions(const std::filesystem::path& path);

void WriteTransactions(const TransactionDB& db,
                       const std::filesystem::path& path);

// Content digest (hex) used to key cached ground truth.
std::string DatabaseDigest(const TransactionDB& db);

// An itemset injected wholesale into a transaction with `probability`.
struct PlantedPattern {
  Itemset items;
  double probability = 0.0;
};

// Synthetic generator model. Each transaction draws a base length from a
// geometric law on {1, 2, ...} with the given mean, truncated to [1, d] by
// redrawing; that many distinct items are drawn from a Zipf(zipf_exponent, d)
// popularity law (item i, for i = 1..d, has weight i^-s); finally every
// planted pattern is unioned in independently with its probability.
struct SyntheticParams {
  double mean_length = 8.0;
  double zipf_exponent = 1.1;
  std::vector<PlantedPattern> patterns;
};

// Items are numbered 1..d and the domain is the full universe {1..d}.
// Deterministic in (n, d, params, seed).
TransactionDB GenerateSynthetic(std::size_t n, std::size_t d,
                                const SyntheticParams& params,
                                std::uint64_t seed);

enum class Group : std::uint8_t { kG1 = 0, kG2 = 1, kG3 = 2 };

struct GroupSplit {
  std::array<double, 3> fractions{};
  std::vector<Group> labels;                     // per user
  std::array<std::vector<UserId>, 3> members;    // in permutation order

  const std::vector<UserId>& group(Group g) const {
    return members[static_cast<int>(g)];
  }
};

// Partition sizes for `n` elements by fractions: floors, with the remainder
// handed to the largest fractional parts (ties to the lowest index). Each size
// is within one of floor(fraction * n).
std::vector<std::size_t> ApportionSizes(std::size_t n,
                                        const std::vector<double>& fractions);

// Uniform random permutation under `seed`, then contiguous assignment.
// Throws std::invalid_argument unless fractions are non-negative and sum to 1
// within 1e-9.
GroupSplit SplitGroups(std::size_t n, const std::array<double, 3>& fractions,
                       std::uint64_t seed);

// Splits `users` into `parts` contiguous runs of near-equal size.
std::vector<std::vector<UserId>> SplitEvenly(const std::vector<UserId>& users,
                                             std::size_t parts);

}  // namespace ldpfim

#endif  // LDPFIM_DATASET_H_
