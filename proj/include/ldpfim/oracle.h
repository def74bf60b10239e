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

#ifndef LDPFIM_ORACLE_H_
#define LDPFIM_ORACLE_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "ldpfim/hashing.h"
#include "ldpfim/itemsets.h"

namespace ldpfim {

// Perturbation parameters of a frequency oracle.
//
// GRR over a domain of size d: p = e^eps / (e^eps + d - 1), q = (1 - p)/(d - 1).
// OLH: hash range g = ceil(e^eps + 1), p = e^eps / (e^eps + g - 1) and
// q = 1 / (e^eps + g - 1) for the inner GRR over [g].
struct OracleParams {
  double epsilon = 0.0;
  std::int64_t domain_size = 0;  // GRR: |domain|. OLH: informational.
  std::int64_t g = 0;            // OLH hash range; equals domain_size for GRR.
  double p = 0.0;
  double q = 0.0;

  static OracleParams Grr(double epsilon, std::int64_t domain_size);
  static OracleParams Olh(double epsilon, std::int64_t domain_size = 0);
};

// ceil(e^eps + 1), computed on the double value of e^eps.
std::int64_t OptimalHashRange(double epsilon);

// --- Generalized random response -------------------------------------------

// Returns x with probability p and each other value with probability q.
std::int64_t GrrPerturb(std::int64_t x, const OracleParams& params, Rng& rng);

// Unbiased per-value counts (count(v) - n q) / (p - q). Throws on an empty
// report list or a report outside the domain.
std::vector<double> GrrAggregate(std::span<const std::int64_t> reports,
                                 const OracleParams& params);

// n (d - 2 + e^eps) / (e^eps - 1)^2
double GrrVariance(double n, double epsilon, std::int64_t domain_size);

// Row x, column o: Pr[output o | input x].
std::vector<std::vector<double>> GrrProbabilityTable(const OracleParams& params);

// max over (x1, x2, o) of Pr[o|x1] / Pr[o|x2]; +inf if some entry is zero
// while another in its column is not.
double MaxProbabilityRatio(const std::vector<std::vector<double>>& table);

// --- Optimized local hashing -----------------------------------------------

// Canonical byte encodings of oracle domain elements. Items are 4-byte
// little-endian integers; sequences are a 4-byte little-endian length followed
// by their items; the dummy is the single byte 0xFF.
using ElementKey = std::string;
ElementKey EncodeItem(Item item);
ElementKey EncodeItemSequence(std::span<const Item> items);
ElementKey EncodeDummy();

std::int64_t OlhHash(std::uint64_t hash_seed, std::string_view key,
                     std::int64_t g);

struct OlhReport {
  std::uint64_t hash_seed = 0;
  std::int64_t y = 0;
};

// Hashes `key` with the member of the family selected by `hash_seed`, then
// applies GRR over [g].
OlhReport OlhPerturb(std::string_view key, const OracleParams& params,
                     std::uint64_t hash_seed, Rng& rng);

// Number of reports whose hash of each candidate matches the reported value.
std::vector<std::int64_t> OlhSupport(std::span<const OlhReport> reports,
                                     std::span<const ElementKey> domain,
                                     std::int64_t g);

// (support - n/g) / (p - 1/g) per candidate. Throws on an empty domain.
std::vector<double> OlhAggregate(std::span<const OlhReport> reports,
                                 std::span<const ElementKey> domain,
                                 const OracleParams& params);

// n 4 e^eps / (e^eps - 1)^2
double OlhVariance(double n, double epsilon);

// --- Padding and sampling --------------------------------------------------

struct PaddedSample {
  std::optional<Item> value;  // nullopt is the dummy
  std::size_t padding = 1;

  bool is_dummy() const { return !value.has_value(); }
};

// Index form of padding-and-sampling over a transaction of `size` elements
// padded to `padding` slots: when size < padding a uniform slot is chosen and
// slots past `size` are dummies; otherwise a uniform element is chosen.
std::optional<std::size_t> PsSampleIndex(std::size_t size, std::size_t padding,
                                         Rng& rng);

PaddedSample PsSample(std::span<const Item> transaction, std::size_t padding,
                      Rng& rng);

// OLH estimation over `domain` plus the dummy, each real estimate multiplied
// by `padding`. Throws if padding < 1.
std::vector<double> PsfoEstimate(std::span<const OlhReport> reports,
                                 std::span<const ElementKey> domain,
                                 std::size_t padding,
                                 const OracleParams& params);

}  // namespace ldpfim

#endif  // LDPFIM_ORACLE_H_
