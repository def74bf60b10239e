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

#ifndef LDPFIM_NOISY_TREE_H_
#define LDPFIM_NOISY_TREE_H_

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "ldpfim/exact_miner.h"
#include "ldpfim/itemsets.h"

namespace ldpfim {

// Prefix tree whose node counts are privately estimated. Items are referred to
// by rank (0 is the most frequent item); a node's children all rank after it.
class NoisyFpTree {
 public:
  using NodeId = std::int32_t;
  static constexpr NodeId kRoot = 0;
  static constexpr NodeId kNone = -1;
  static constexpr std::size_t kNoRank = std::numeric_limits<std::size_t>::max();

  struct Node {
    std::size_t rank = kNoRank;
    double count = 0.0;
    NodeId parent = kNone;
    std::size_t level = 0;
    // Expandable at the next level. Cleared once children are generated.
    bool valid = false;
    std::vector<NodeId> children;
  };

  NoisyFpTree(std::vector<Item> item_order, double root_count);

  // Adds a child of `parent` for the item of rank `rank`. Throws unless the
  // rank is in range, after the parent's rank, and not already a child.
  NodeId AddNode(NodeId parent, std::size_t rank, double count);

  const Node& node(NodeId id) const { return nodes_.at(id); }
  void set_count(NodeId id, double count) { nodes_.at(id).count = count; }
  void set_valid(NodeId id, bool valid) { nodes_.at(id).valid = valid; }
  std::size_t size() const { return nodes_.size(); }

  // Deepest populated level (0 for a bare root).
  std::size_t depth() const { return levels_.size() - 1; }
  // Nodes of level l; level 0 holds only the root.
  const std::vector<NodeId>& level(std::size_t l) const { return levels_.at(l); }

  NodeId FindChild(NodeId parent, std::size_t rank) const;

  const std::vector<Item>& item_order() const { return item_order_; }
  // Ranks along the root-to-node path.
  std::vector<std::size_t> RankPath(NodeId id) const;
  // Items along the root-to-node path, in rank order.
  std::vector<Item> Prefix(NodeId id) const;

  // Copies the tree into an FpTree over the same item order, for mining.
  FpTree ToFpTree() const;

 private:
  std::vector<Item> item_order_;
  std::vector<Node> nodes_;
  std::vector<std::vector<NodeId>> levels_;
};

}  // namespace ldpfim

#endif  // LDPFIM_NOISY_TREE_H_
