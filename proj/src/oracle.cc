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

#include "ldpfim/oracle.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ldpfim {
namespace {

void CheckEpsilon(double epsilon) {
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
    throw std::invalid_argument("epsilon must be positive and finite");
  }
}

// Draws a value of [0, range) other than `x`, uniformly.
std::int64_t UniformOther(std::int64_t x, std::int64_t range, Rng& rng) {
  std::uniform_int_distribution<std::int64_t> pick(0, range - 2);
  std::int64_t v = pick(rng);
  return v >= x ? v + 1 : v;
}

void AppendLittleEndian(ElementKey& key, std::uint32_t v) {
  for (int b = 0; b < 4; ++b) key.push_back(static_cast<char>(v >> (8 * b)));
}

}  // namespace

std::int64_t OptimalHashRange(double epsilon) {
  CheckEpsilon(epsilon);
  double g = std::ceil(std::exp(epsilon) + 1.0);
  if (g > static_cast<double>(std::int64_t{1} << 62)) {
    throw std::invalid_argument("epsilon too large for a 64-bit hash range");
  }
  return static_cast<std::int64_t>(g);
}

OracleParams OracleParams::Grr(double epsilon, std::int64_t domain_size) {
  CheckEpsilon(epsilon);
  if (domain_size < 1) throw std::invalid_argument("GRR domain must be non-empty");
  OracleParams params;
  params.epsilon = epsilon;
  params.domain_size = domain_size;
  params.g = domain_size;
  double e = std::exp(epsilon);
  double denom = e + static_cast<double>(domain_size) - 1.0;
  params.p = e / denom;
  params.q = domain_size > 1 ? 1.0 / denom : 0.0;
  return params;
}

OracleParams OracleParams::Olh(double epsilon, std::int64_t domain_size) {
  OracleParams params;
  params.epsilon = epsilon;
  params.domain_size = domain_size;
  params.g = OptimalHashRange(epsilon);
  double e = std::exp(epsilon);
  double denom = e + static_cast<double>(params.g) - 1.0;
  params.p = e / denom;
  params.q = 1.0 / denom;
  return params;
}

std::int64_t GrrPerturb(std::int64_t x, const OracleParams& params, Rng& rng) {
  if (x < 0 || x >= params.domain_size) {
    throw std::out_of_range("GRR input outside the domain");
  }
  if (params.domain_size == 1) return x;
  std::bernoulli_distribution keep(params.p);
  if (keep(rng)) return x;
  return UniformOther(x, params.domain_size, rng);
}

std::vector<double> GrrAggregate(std::span<const std::int64_t> reports,
                                 const OracleParams& params) {
  if (reports.empty()) throw std::invalid_argument("no GRR reports");
  std::vector<std::int64_t> counts(params.domain_size, 0);
  for (std::int64_t r : reports) {
    if (r < 0 || r >= params.domain_size) {
      throw std::out_of_range("GRR report outside the domain");
    }
    ++counts[r];
  }
  const double n = static_cast<double>(reports.size());
  std::vector<double> estimates(counts.size());
  if (params.domain_size == 1) {
    estimates[0] = n;
    return estimates;
  }
  for (std::size_t v = 0; v < counts.size(); ++v) {
    estimates[v] = (static_cast<double>(counts[v]) - n * params.q) /
                   (params.p - params.q);
  }
  return estimates;
}

double GrrVariance(double n, double epsilon, std::int64_t domain_size) {
  double e = std::exp(epsilon);
  return n * (static_cast<double>(domain_size) - 2.0 + e) / ((e - 1.0) * (e - 1.0));
}

std::vector<std::vector<double>> GrrProbabilityTable(const OracleParams& params) {
  const auto d = static_cast<std::size_t>(params.domain_size);
  std::vector<std::vector<double>> table(d, std::vector<double>(d, params.q));
  for (std::size_t x = 0; x < d; ++x) table[x][x] = params.p;
  return table;
}

double MaxProbabilityRatio(const std::vector<std::vector<double>>& table) {
  double worst = 1.0;
  if (table.empty()) return worst;
  const std::size_t outputs = table.front().size();
  for (std::size_t o = 0; o < outputs; ++o) {
    double hi = 0.0;
    double lo = std::numeric_limits<double>::infinity();
    for (const auto& row : table) {
      hi = std::max(hi, row[o]);
      lo = std::min(lo, row[o]);
    }
    if (hi == 0.0) continue;
    if (lo == 0.0) return std::numeric_limits<double>::infinity();
    worst = std::max(worst, hi / lo);
  }
  return worst;
}

ElementKey EncodeItem(Item item) {
  ElementKey key;
  AppendLittleEndian(key, item);
  return key;
}

ElementKey EncodeItemSequence(std::span<const Item> items) {
  ElementKey key;
  key.reserve(4 * (items.size() + 1));
  AppendLittleEndian(key, static_cast<std::uint32_t>(items.size()));
  for (Item x : items) AppendLittleEndian(key, x);
  return key;
}

ElementKey EncodeDummy() { return ElementKey(1, static_cast<char>(0xFF)); }

std::int64_t OlhHash(std::uint64_t hash_seed, std::string_view key,
                     std::int64_t g) {
  return static_cast<std::int64_t>(SeededHash(hash_seed, key) %
                                   static_cast<std::uint64_t>(g));
}

OlhReport OlhPerturb(std::string_view key, const OracleParams& params,
                     std::uint64_t hash_seed, Rng& rng) {
  OlhReport report;
  report.hash_seed = hash_seed;
  std::int64_t h = OlhHash(hash_seed, key, params.g);
  std::bernoulli_distribution keep(params.p);
  report.y = keep(rng) ? h : UniformOther(h, params.g, rng);
  return report;
}

std::vector<std::int64_t> OlhSupport(std::span<const OlhReport> reports,
                                     std::span<const ElementKey> domain,
                                     std::int64_t g) {
  std::vector<std::int64_t> support(domain.size(), 0);
  for (const OlhReport& r : reports) {
    if (r.y < 0 || r.y >= g) {
      throw std::out_of_range("OLH report outside the hash range");
    }
    for (std::size_t i = 0; i < domain.size(); ++i) {
      if (OlhHash(r.hash_seed, domain[i], g) == r.y) ++support[i];
    }
  }
  return support;
}

std::vector<double> OlhAggregate(std::span<const OlhReport> reports,
                                 std::span<const ElementKey> domain,
                                 const OracleParams& params) {
  if (domain.empty()) throw std::invalid_argument("empty OLH candidate domain");
  const auto support = OlhSupport(reports, domain, params.g);
  const double n = static_cast<double>(reports.size());
  const double inv_g = 1.0 / static_cast<double>(params.g);
  std::vector<double> estimates(domain.size());
  for (std::size_t i = 0; i < domain.size(); ++i) {
    estimates[i] = (static_cast<double>(support[i]) - n * inv_g) /
                   (params.p - inv_g);
  }
  return estimates;
}

double OlhVariance(double n, double epsilon) {
  double e = std::exp(epsilon);
  return n * 4.0 * e / ((e - 1.0) * (e - 1.0));
}

std::optional<std::size_t> PsSampleIndex(std::size_t size, std::size_t padding,
                                         Rng& rng) {
  if (padding < 1) throw std::invalid_argument("padding length must be >= 1");
  std::size_t slots = std::max(size, padding);
  std::uniform_int_distribution<std::size_t> pick(0, slots - 1);
  std::size_t slot = pick(rng);
  if (slot < size) return slot;
  return std::nullopt;
}

PaddedSample PsSample(std::span<const Item> transaction, std::size_t padding,
                      Rng& rng) {
  PaddedSample sample;
  sample.padding = padding;
  if (auto idx = PsSampleIndex(transaction.size(), padding, rng)) {
    sample.value = transaction[*idx];
  }
  return sample;
}

std::vector<double> PsfoEstimate(std::span<const OlhReport> reports,
                                 std::span<const ElementKey> domain,
                                 std::size_t padding,
                                 const OracleParams& params) {
  if (padding < 1) throw std::invalid_argument("padding length must be >= 1");
  std::vector<ElementKey> extended(domain.begin(), domain.end());
  extended.push_back(EncodeDummy());
  auto estimates = OlhAggregate(reports, extended, params);
  estimates.pop_back();
  for (double& e : estimates) e *= static_cast<double>(padding);
  return estimates;
}

}  // namespace ldpfim
