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

#ifndef LDPFIM_EXACT_MINER_H_
#define LDPFIM_EXACT_MINER_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "ldpfim/dataset.h"
#include "ldpfim/itemsets.h"

namespace ldpfim {

// Prefix tree over rank-ordered transactions. Node counts are real valued so
// the same structure serves exact trees (integral counts) and noisy trees.
// Every root-to-node path lists items in strictly increasing rank (rank 0 is
// the most frequent item), siblings carry distinct items, and a header table
// links all nodes of each item.
class FpTree {
 public:
  using NodeId = std::int32_t;
  static constexpr NodeId kRoot = 0;
  static constexpr NodeId kNone = -1;

  struct Node {
    Item item = 0;
    double count = 0.0;
    NodeId parent = kNone;
    std::vector<NodeId> children;
  };

  // `item_order` lists the items by rank, best first. Throws on duplicates.
  explicit FpTree(std::vector<Item> item_order);

  // Inserts a rank-ordered path, merging shared prefixes and adding `count`
  // to every node along it. Throws std::invalid_argument if the items are not
  // strictly rank-ascending or unknown. Returns the last node (root if empty).
  NodeId AddPath(std::span<const Item> ordered_items, double count);

  // Adds a child holding `item`; the item must rank after the parent's item
  // and the parent must not already have a child with it.
  NodeId AddChild(NodeId parent, Item item, double count);

  NodeId FindChild(NodeId parent, Item item) const;

  const Node& node(NodeId id) const { return nodes_.at(id); }
  void set_count(NodeId id, double count) { nodes_.at(id).count = count; }
  std::size_t size() const { return nodes_.size(); }

  const std::vector<Item>& item_order() const { return item_order_; }
  bool HasItem(Item item) const { return rank_.contains(item); }
  std::size_t RankOf(Item item) const;
  const std::vector<NodeId>& NodesOf(Item item) const;

  // Items on the path from the root to `id`, in rank order.
  std::vector<Item> PathTo(NodeId id) const;

 private:
  std::vector<Item> item_order_;
  std::unordered_map<Item, std::size_t> rank_;
  std::vector<Node> nodes_;
  std::vector<std::vector<NodeId>> header_;  // by rank
};

// Transactions pruned to the frequent items and reordered by rank.
struct PreprocessedDB {
  std::vector<Item> item_order;
  std::vector<std::vector<Item>> sequences;
};

// Keeps only items listed in `frequent_items` (ranked best first) and emits
// each transaction as a rank-ordered sequence.
PreprocessedDB Preprocess(const TransactionDB& db,
                          const RankedItemsets& frequent_items);

// All items of the database ranked by exact support (canonical order).
RankedItemsets RankItemsByFrequency(const TransactionDB& db);

// Builds the exact tree; counts are prefix supports. Throws if a sequence is
// not in rank order.
FpTree BuildFpTree(const PreprocessedDB& db);

// Top-k itemsets (length >= 1, support > 0) mined by recursive conditional
// pattern bases. Branches whose support falls below the current k-th best are
// pruned. Throws if k < 1.
RankedItemsets FpGrowth(const FpTree& tree, std::size_t k,
                        std::optional<std::size_t> max_len = std::nullopt);

// Number of transactions containing `itemset`.
std::size_t ItemsetFrequency(const TransactionDB& db, const Itemset& itemset);

// Exact top-k by support with the canonical tie-break. `incomplete` is set
// when fewer than k itemsets have positive support.
RankedItemsets ExactTopK(const TransactionDB& db, std::size_t k,
                         std::optional<std::size_t> max_len = std::nullopt);

}  // namespace ldpfim

#endif  // LDPFIM_EXACT_MINER_H_
