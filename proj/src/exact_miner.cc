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

#include "ldpfim/exact_miner.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>
#include <stdexcept>
#include <utility>

namespace ldpfim {
namespace {

// Keeps the best k itemsets seen so far under the canonical order.
class TopKCollector {
 public:
  explicit TopKCollector(std::size_t k) : k_(k) {}

  // Whether an itemset with this support could still enter the top k.
  bool Admits(double support) const {
    return support > 0.0 &&
           (best_.size() < k_ || support >= best_.rbegin()->frequency);
  }

  void Offer(ScoredItemset candidate) {
    if (!Admits(candidate.frequency)) return;
    if (best_.size() == k_) {
      if (!RanksBefore(candidate, *best_.rbegin())) return;
      best_.erase(std::prev(best_.end()));
    }
    best_.insert(std::move(candidate));
  }

  RankedItemsets Finish() const {
    return SelectTopK({best_.begin(), best_.end()}, k_);
  }

 private:
  struct Order {
    bool operator()(const ScoredItemset& a, const ScoredItemset& b) const {
      return RanksBefore(a, b);
    }
  };
  std::size_t k_;
  std::set<ScoredItemset, Order> best_;
};

Itemset WithItem(const Itemset& base, Item x) {
  Itemset out = base;
  out.insert(std::upper_bound(out.begin(), out.end(), x), x);
  return out;
}

void MineTree(const FpTree& tree, const Itemset& suffix, std::size_t max_len,
              TopKCollector& out) {
  const auto& order = tree.item_order();
  std::vector<std::pair<double, std::size_t>> supports;  // (support, rank)
  supports.reserve(order.size());
  for (std::size_t r = 0; r < order.size(); ++r) {
    double s = 0.0;
    for (FpTree::NodeId id : tree.NodesOf(order[r])) s += tree.node(id).count;
    if (s > 0.0) supports.emplace_back(s, r);
  }
  std::stable_sort(supports.begin(), supports.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });

  for (const auto& [support, rank] : supports) {
    out.Offer({WithItem(suffix, order[rank]), support});
  }
  if (suffix.size() + 1 >= max_len) return;

  for (const auto& [support, rank] : supports) {
    if (!out.Admits(support)) break;
    const Item x = order[rank];
    // Conditional pattern base of x: prefix paths weighted by x-node counts.
    std::vector<std::pair<std::vector<Item>, double>> base;
    std::unordered_map<Item, double> cond_support;
    for (FpTree::NodeId id : tree.NodesOf(x)) {
      const double w = tree.node(id).count;
      if (w <= 0.0) continue;
      std::vector<Item> path = tree.PathTo(tree.node(id).parent);
      if (path.empty()) continue;
      for (Item y : path) cond_support[y] += w;
      base.emplace_back(std::move(path), w);
    }
    std::vector<Item> kept;
    for (std::size_t r = 0; r < rank; ++r) {
      auto it = cond_support.find(order[r]);
      if (it != cond_support.end() && out.Admits(it->second)) {
        kept.push_back(order[r]);
      }
    }
    if (kept.empty()) continue;
    std::stable_sort(kept.begin(), kept.end(), [&](Item a, Item b) {
      return cond_support[a] > cond_support[b];
    });
    FpTree cond(kept);
    std::vector<Item> filtered;
    for (const auto& [path, w] : base) {
      filtered.clear();
      for (Item y : path) {
        if (cond.HasItem(y)) filtered.push_back(y);
      }
      std::sort(filtered.begin(), filtered.end(), [&](Item a, Item b) {
        return cond.RankOf(a) < cond.RankOf(b);
      });
      cond.AddPath(filtered, w);
    }
    MineTree(cond, WithItem(suffix, x), max_len, out);
  }
}

}  // namespace

FpTree::FpTree(std::vector<Item> item_order)
    : item_order_(std::move(item_order)), header_(item_order_.size()) {
  for (std::size_t r = 0; r < item_order_.size(); ++r) {
    if (!rank_.emplace(item_order_[r], r).second) {
      throw std::invalid_argument("duplicate item in FP-tree order");
    }
  }
  nodes_.emplace_back();  // root
}

std::size_t FpTree::RankOf(Item item) const {
  auto it = rank_.find(item);
  if (it == rank_.end()) {
    throw std::invalid_argument("item " + std::to_string(item) +
                                " is not ranked in this tree");
  }
  return it->second;
}

const std::vector<FpTree::NodeId>& FpTree::NodesOf(Item item) const {
  return header_[RankOf(item)];
}

FpTree::NodeId FpTree::FindChild(NodeId parent, Item item) const {
  for (NodeId c : nodes_.at(parent).children) {
    if (nodes_[c].item == item) return c;
  }
  return kNone;
}

FpTree::NodeId FpTree::AddChild(NodeId parent, Item item, double count) {
  const std::size_t rank = RankOf(item);
  if (parent != kRoot && RankOf(nodes_.at(parent).item) >= rank) {
    throw std::invalid_argument("child item must rank after its parent");
  }
  if (FindChild(parent, item) != kNone) {
    throw std::invalid_argument("sibling with the same item already exists");
  }
  const auto id = static_cast<NodeId>(nodes_.size());
  Node node;
  node.item = item;
  node.count = count;
  node.parent = parent;
  nodes_.push_back(std::move(node));
  nodes_[parent].children.push_back(id);
  header_[rank].push_back(id);
  return id;
}

FpTree::NodeId FpTree::AddPath(std::span<const Item> ordered_items,
                               double count) {
  NodeId at = kRoot;
  std::size_t last_rank = 0;
  bool first = true;
  nodes_[kRoot].count += count;
  for (Item x : ordered_items) {
    const std::size_t rank = RankOf(x);
    if (!first && rank <= last_rank) {
      throw std::invalid_argument("transaction is not in rank order");
    }
    first = false;
    last_rank = rank;
    NodeId child = FindChild(at, x);
    if (child == kNone) {
      child = AddChild(at, x, 0.0);
    }
    nodes_[child].count += count;
    at = child;
  }
  return at;
}

std::vector<Item> FpTree::PathTo(NodeId id) const {
  std::vector<Item> path;
  for (NodeId at = id; at != kRoot && at != kNone; at = nodes_.at(at).parent) {
    path.push_back(nodes_[at].item);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

PreprocessedDB Preprocess(const TransactionDB& db,
                          const RankedItemsets& frequent_items) {
  PreprocessedDB out;
  std::unordered_map<Item, std::size_t> rank;
  for (const auto& e : frequent_items.entries) {
    if (e.items.size() != 1) {
      throw std::invalid_argument("frequent items must be singletons");
    }
    if (!rank.emplace(e.items[0], out.item_order.size()).second) {
      throw std::invalid_argument("frequent items must be distinct");
    }
    out.item_order.push_back(e.items[0]);
  }
  out.sequences.reserve(db.size());
  for (const auto& t : db.transactions) {
    std::vector<std::pair<std::size_t, Item>> kept;
    for (Item x : t) {
      auto it = rank.find(x);
      if (it != rank.end()) kept.emplace_back(it->second, x);
    }
    std::sort(kept.begin(), kept.end());
    std::vector<Item> seq;
    seq.reserve(kept.size());
    for (const auto& [r, x] : kept) seq.push_back(x);
    out.sequences.push_back(std::move(seq));
  }
  return out;
}

RankedItemsets RankItemsByFrequency(const TransactionDB& db) {
  std::unordered_map<Item, std::size_t> counts;
  for (const auto& t : db.transactions) {
    for (Item x : t) ++counts[x];
  }
  std::vector<ScoredItemset> entries;
  entries.reserve(counts.size());
  for (const auto& [x, c] : counts) {
    entries.push_back({{x}, static_cast<double>(c)});
  }
  return SelectTopK(std::move(entries), counts.size());
}

FpTree BuildFpTree(const PreprocessedDB& db) {
  FpTree tree(db.item_order);
  for (const auto& seq : db.sequences) tree.AddPath(seq, 1.0);
  return tree;
}

RankedItemsets FpGrowth(const FpTree& tree, std::size_t k,
                        std::optional<std::size_t> max_len) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const std::size_t limit =
      max_len.value_or(std::numeric_limits<std::size_t>::max());
  TopKCollector out(k);
  if (limit >= 1) MineTree(tree, {}, limit, out);
  return out.Finish();
}

std::size_t ItemsetFrequency(const TransactionDB& db, const Itemset& itemset) {
  std::size_t count = 0;
  for (const auto& t : db.transactions) {
    if (std::includes(t.begin(), t.end(), itemset.begin(), itemset.end())) {
      ++count;
    }
  }
  return count;
}

RankedItemsets ExactTopK(const TransactionDB& db, std::size_t k,
                         std::optional<std::size_t> max_len) {
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  const auto items = RankItemsByFrequency(db);
  return FpGrowth(BuildFpTree(Preprocess(db, items)), k, max_len);
}

}  // namespace ldpfim
