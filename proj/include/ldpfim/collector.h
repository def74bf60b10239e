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

#ifndef LDPFIM_COLLECTOR_H_
#define LDPFIM_COLLECTOR_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "ldpfim/dataset.h"
#include "ldpfim/oracle.h"

namespace ldpfim {

// Counts perturbation calls per simulated user. Every user must end up with
// exactly one report across a whole pipeline run.
class ReportLedger {
 public:
  explicit ReportLedger(std::size_t users) : counts_(users, 0) {}

  void Record(UserId user);
  std::size_t total() const { return total_; }
  std::size_t users() const { return counts_.size(); }
  std::uint32_t CountFor(UserId user) const { return counts_.at(user); }
  bool EveryUserExactlyOnce() const;
  bool NoUserTwice() const;

 private:
  std::vector<std::uint32_t> counts_;
  std::size_t total_ = 0;
};

// One user's input at a collection round: indices into the round's domain.
// The user pads this list to `padding` slots and samples one slot.
using UserInput = std::vector<std::uint32_t>;

// One collection round: `reporters` each submit one sanitized report over
// `domain` (plus an implicit dummy). Estimates are corrected by `padding` and
// expressed at the scale of `population` (|population| / |reporters| times the
// reporters' estimate).
struct CollectionRequest {
  std::span<const ElementKey> domain;
  std::span<const UserId> reporters;
  std::span<const UserId> population;
  std::function<UserInput(UserId)> input_of;
  std::size_t padding = 1;
};

enum class OracleKind {
  kOlh,    // local hashing, the real mechanism
  kExact,  // noiseless stub
};

class FrequencyOracle {
 public:
  virtual ~FrequencyOracle() = default;

  // Runs one round and returns one estimate per domain element. Each reporter
  // is recorded in `ledger` when non-null. Throws if there are no reporters.
  virtual std::vector<double> Collect(const CollectionRequest& request,
                                      Rng& rng, ReportLedger* ledger) const = 0;

  virtual OracleKind kind() const = 0;
  virtual double epsilon() const = 0;
};

// Padding-and-sampling followed by OLH with the full budget per reporter.
class OlhOracle final : public FrequencyOracle {
 public:
  explicit OlhOracle(double epsilon);

  std::vector<double> Collect(const CollectionRequest& request, Rng& rng,
                              ReportLedger* ledger) const override;
  OracleKind kind() const override { return OracleKind::kOlh; }
  double epsilon() const override { return params_.epsilon; }
  const OracleParams& params() const { return params_; }

 private:
  OracleParams params_;
};

// Returns the exact expectation of the padding-and-sampling estimator over the
// whole population: sum over users of padding / max(padding, |input|) for each
// element they hold. There is no perturbation and no group-sampling error, so
// pipelines driven by it are deterministic and reproduce exact counts whenever
// no user is truncated by padding. Reporters are still recorded in the ledger.
class ExactOracle final : public FrequencyOracle {
 public:
  explicit ExactOracle(double epsilon = 1.0) : epsilon_(epsilon) {}

  std::vector<double> Collect(const CollectionRequest& request, Rng& rng,
                              ReportLedger* ledger) const override;
  OracleKind kind() const override { return OracleKind::kExact; }
  double epsilon() const override { return epsilon_; }

 private:
  double epsilon_;
};

std::unique_ptr<FrequencyOracle> MakeOracle(OracleKind kind, double epsilon);

OracleKind ParseOracleKind(const std::string& name);
std::string OracleKindName(OracleKind kind);

}  // namespace ldpfim

#endif  // LDPFIM_COLLECTOR_H_
