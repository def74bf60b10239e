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

#include "ldpfim/noisy_tree.h"

#include <algorithm>
#include <stdexcept>

namespace ldpfim {

NoisyFpTree::NoisyFpTree(std::vector<Item> item_order, double root_count)
    : item_order_(std::move(item_order)) {
  Node root;
  root.count = root_count;
  root.valid = true;
  nodes_.push_back(root);
  levels_.push_back({kRoot});
}

NoisyFpTree::NodeId NoisyFpTree::AddNode(NodeId parent, std::size_t rank,
                                         double count) {
  const Node& p = nodes_.at(parent);
  if (rank >= item_order_.size()) {
    throw std::invalid_argument("item rank out of range");
  }
  if (p.rank != kNoRank && rank <= p.rank) {
    throw std::invalid_argument("child must rank after its parent");
  }
  if (FindChild(parent, rank) != kNone) {
    throw std::invalid_argument("parent already has a child with this item");
  }
  Node child;
  child.rank = rank;
  child.count = count;
  child.parent = parent;
  child.level = p.level + 1;
  const NodeId id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back(child);
  nodes_[parent].children.push_back(id);
  if (levels_.size() <= child.level) levels_.resize(child.level + 1);
  levels_[child.level].push_back(id);
  return id;
}

NoisyFpTree::NodeId NoisyFpTree::FindChild(NodeId parent,
                                           std::size_t rank) const {
  for (NodeId c : nodes_.at(parent).children) {
    if (nodes_[c].rank == rank) return c;
  }
  return kNone;
}

std::vector<std::size_t> NoisyFpTree::RankPath(NodeId id) const {
  std::vector<std::size_t> path;
  for (NodeId v = id; v != kRoot; v = nodes_.at(v).parent) {
    path.push_back(nodes_[v].rank);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Item> NoisyFpTree::Prefix(NodeId id) const {
  std::vector<Item> items;
  for (std::size_t r : RankPath(id)) items.push_back(item_order_[r]);
  return items;
}

FpTree NoisyFpTree::ToFpTree() const {
  FpTree tree(item_order_);
  std::vector<FpTree::NodeId> mapped(nodes_.size(), FpTree::kNone);
  mapped[kRoot] = FpTree::kRoot;
  tree.set_count(FpTree::kRoot, nodes_[kRoot].count);
  for (std::size_t l = 1; l < levels_.size(); ++l) {
    for (NodeId id : levels_[l]) {
      const Node& n = nodes_[id];
      mapped[id] =
          tree.AddChild(mapped[n.parent], item_order_[n.rank], n.count);
    }
  }
  return tree;
}

}  // namespace ldpfim
