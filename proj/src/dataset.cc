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

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string_view>
#include <unordered_set>
#include <utility>

#include "ldpfim/hashing.h"

namespace ldpfim {

ItemDomain::ItemDomain(std::vector<Item> items) : items_(std::move(items)) {
  if (items_.empty()) {
    throw std::invalid_argument("item domain must hold at least one item");
  }
  std::vector<Item> sorted = items_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("item domain has duplicate identifiers");
  }
}

bool ItemDomain::Contains(Item item) const {
  return std::find(items_.begin(), items_.end(), item) != items_.end();
}

TransactionDB MakeTransactionDB(std::vector<std::vector<Item>> rows) {
  TransactionDB db;
  db.transactions.reserve(rows.size());
  std::vector<Item> seen;
  for (auto& row : rows) {
    Transaction t = MakeItemset(std::move(row));
    seen.insert(seen.end(), t.begin(), t.end());
    db.transactions.push_back(std::move(t));
  }
  db.domain = ItemDomain(MakeItemset(std::move(seen)));
  return db;
}

TransactionDB LoadTransactions(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot read transactions from " + path.string());
  }
  std::vector<std::vector<Item>> rows;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view rest(line);
    std::size_t first = rest.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) continue;
    if (rest[first] == '#' || rest[first] == '%' || rest[first] == '@') {
      continue;
    }
    std::vector<Item> row;
    while (true) {
      std::size_t b = rest.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) break;
      rest.remove_prefix(b);
      std::size_t e = rest.find_first_of(" \t\r");
      std::string_view token = rest.substr(0, e);
      Item value = 0;
      auto [ptr, ec] =
          std::from_chars(token.data(), token.data() + token.size(), value);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw std::runtime_error(path.string() + ":" +
                                 std::to_string(line_no) +
                                 ": not a non-negative integer item: '" +
                                 std::string(token) + "'");
      }
      row.push_back(value);
      if (e == std::string_view::npos) break;
      rest.remove_prefix(e);
    }
    rows.push_back(std::move(row));
  }
  if (in.bad()) {
    throw std::runtime_error("read error on " + path.string());
  }
  if (rows.empty()) {
    throw std::runtime_error(path.string() + ": no transactions");
  }
  return MakeTransactionDB(std::move(rows));
}

void WriteTransactions(const TransactionDB& db,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (const auto& t : db.transactions) out << FormatItemset(t) << '\n';
  if (!out) throw std::runtime_error("write error on " + path.string());
}

std::string DatabaseDigest(const TransactionDB& db) {
  std::uint64_t h = Mix64(db.size());
  std::string buf;
  for (const auto& t : db.transactions) {
    buf.clear();
    for (Item x : t) {
      for (int b = 0; b < 4; ++b) buf.push_back(static_cast<char>(x >> (8 * b)));
    }
    h = Mix64(h ^ SeededHash(t.size(), buf));
  }
  std::ostringstream out;
  out << std::hex;
  out.width(16);
  out.fill('0');
  out << h;
  return out.str();
}

TransactionDB GenerateSynthetic(std::size_t n, std::size_t d,
                                const SyntheticParams& params,
                                std::uint64_t seed) {
  if (n < 1 || d < 1) {
    throw std::invalid_argument("synthetic generator needs n >= 1 and d >= 1");
  }
  if (!(params.mean_length >= 1.0) ||
      params.mean_length > static_cast<double>(d)) {
    throw std::invalid_argument(
        "mean transaction length must lie in [1, d]");
  }
  if (!(params.zipf_exponent >= 0.0)) {
    throw std::invalid_argument("zipf exponent must be non-negative");
  }
  for (const auto& p : params.patterns) {
    if (p.items.empty() || !(p.probability >= 0.0 && p.probability <= 1.0)) {
      throw std::invalid_argument(
          "planted patterns need items and a probability in [0, 1]");
    }
    for (Item x : p.items) {
      if (x < 1 || x > d) {
        throw std::invalid_argument("planted pattern item outside 1..d");
      }
    }
  }

  Rng rng(seed);
  std::vector<double> weights(d);
  for (std::size_t i = 0; i < d; ++i) {
    weights[i] = std::pow(static_cast<double>(i + 1), -params.zipf_exponent);
  }
  std::discrete_distribution<std::size_t> popularity(weights.begin(),
                                                     weights.end());
  std::geometric_distribution<std::size_t> extra(1.0 / params.mean_length);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<std::vector<Item>> rows(n);
  std::vector<char> taken(d, 0);
  for (auto& row : rows) {
    std::size_t len;
    do {
      len = 1 + extra(rng);
    } while (len > d);
    if (len == d) {
      row.resize(d);
      std::iota(row.begin(), row.end(), Item{1});
    } else {
      while (row.size() < len) {
        std::size_t idx = popularity(rng);
        if (!taken[idx]) {
          taken[idx] = 1;
          row.push_back(static_cast<Item>(idx + 1));
        }
      }
      for (Item x : row) taken[x - 1] = 0;
    }
    for (const auto& p : params.patterns) {
      if (unit(rng) < p.probability) {
        row.insert(row.end(), p.items.begin(), p.items.end());
      }
    }
  }

  TransactionDB db;
  db.transactions.reserve(n);
  for (auto& row : rows) db.transactions.push_back(MakeItemset(std::move(row)));
  std::vector<Item> universe(d);
  std::iota(universe.begin(), universe.end(), Item{1});
  db.domain = ItemDomain(std::move(universe));
  return db;
}

std::vector<std::size_t> ApportionSizes(std::size_t n,
                                        const std::vector<double>& fractions) {
  std::vector<std::size_t> sizes(fractions.size());
  std::vector<double> remainder(fractions.size());
  std::size_t assigned = 0;
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    double exact = fractions[i] * static_cast<double>(n);
    sizes[i] = static_cast<std::size_t>(std::floor(exact));
    remainder[i] = exact - static_cast<double>(sizes[i]);
    assigned += sizes[i];
  }
  std::vector<std::size_t> order(fractions.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainder[a] > remainder[b];
  });
  for (std::size_t i = 0; assigned < n; i = (i + 1) % order.size()) {
    ++sizes[order[i]];
    ++assigned;
  }
  // Floating error in fractions summing to 1 can overshoot by one.
  for (std::size_t i = order.size(); assigned > n && i-- > 0;) {
    if (sizes[order[i]] > 0) {
      --sizes[order[i]];
      --assigned;
    }
  }
  return sizes;
}

GroupSplit SplitGroups(std::size_t n, const std::array<double, 3>& fractions,
                       std::uint64_t seed) {
  double sum = 0.0;
  for (double f : fractions) {
    if (!(f >= 0.0)) {
      throw std::invalid_argument("group fractions must be non-negative");
    }
    sum += f;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("group fractions must sum to 1");
  }
  std::vector<UserId> perm(n);
  std::iota(perm.begin(), perm.end(), UserId{0});
  Rng rng(seed);
  std::shuffle(perm.begin(), perm.end(), rng);

  GroupSplit split;
  split.fractions = fractions;
  split.labels.resize(n);
  auto sizes =
      ApportionSizes(n, std::vector<double>(fractions.begin(), fractions.end()));
  std::size_t pos = 0;
  for (int g = 0; g < 3; ++g) {
    auto& members = split.members[g];
    members.assign(perm.begin() + pos, perm.begin() + pos + sizes[g]);
    for (UserId u : members) split.labels[u] = static_cast<Group>(g);
    pos += sizes[g];
  }
  return split;
}

std::vector<std::vector<UserId>> SplitEvenly(const std::vector<UserId>& users,
                                             std::size_t parts) {
  if (parts == 0) throw std::invalid_argument("cannot split into zero parts");
  std::vector<std::vector<UserId>> out(parts);
  std::size_t base = users.size() / parts;
  std::size_t extra = users.size() % parts;
  std::size_t pos = 0;
  for (std::size_t i = 0; i < parts; ++i) {
    std::size_t len = base + (i < extra ? 1 : 0);
    out[i].assign(users.begin() + pos, users.begin() + pos + len);
    pos += len;
  }
  return out;
}

}  // namespace ldpfim
