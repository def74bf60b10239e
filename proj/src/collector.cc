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

#include "ldpfim/collector.h"

#include <algorithm>
#include <stdexcept>

namespace ldpfim {

void ReportLedger::Record(UserId user) {
  ++counts_.at(user);
  ++total_;
}

bool ReportLedger::EveryUserExactlyOnce() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](std::uint32_t c) { return c == 1; });
}

bool ReportLedger::NoUserTwice() const {
  return std::all_of(counts_.begin(), counts_.end(),
                     [](std::uint32_t c) { return c <= 1; });
}

OlhOracle::OlhOracle(double epsilon) : params_(OracleParams::Olh(epsilon)) {}

std::vector<double> OlhOracle::Collect(const CollectionRequest& request,
                                       Rng& rng, ReportLedger* ledger) const {
  if (request.reporters.empty()) {
    throw std::invalid_argument("collection round has no reporters");
  }
  if (request.domain.empty()) {
    throw std::invalid_argument("collection round has an empty domain");
  }
  const ElementKey dummy = EncodeDummy();
  std::vector<OlhReport> reports;
  reports.reserve(request.reporters.size());
  for (UserId u : request.reporters) {
    if (ledger != nullptr) ledger->Record(u);
    const UserInput input = request.input_of(u);
    auto slot = PsSampleIndex(input.size(), request.padding, rng);
    const ElementKey& key = slot ? request.domain[input[*slot]] : dummy;
    reports.push_back(OlhPerturb(key, params_, rng(), rng));
  }
  auto estimates =
      PsfoEstimate(reports, request.domain, request.padding, params_);
  const double scale = static_cast<double>(request.population.size()) /
                       static_cast<double>(request.reporters.size());
  for (double& e : estimates) e *= scale;
  return estimates;
}

std::vector<double> ExactOracle::Collect(const CollectionRequest& request,
                                         Rng& /*rng*/,
                                         ReportLedger* ledger) const {
  if (request.reporters.empty()) {
    throw std::invalid_argument("collection round has no reporters");
  }
  if (request.padding < 1) {
    throw std::invalid_argument("padding length must be >= 1");
  }
  if (ledger != nullptr) {
    for (UserId u : request.reporters) ledger->Record(u);
  }
  const double padding = static_cast<double>(request.padding);
  std::vector<double> estimates(request.domain.size(), 0.0);
  for (UserId u : request.population) {
    const UserInput input = request.input_of(u);
    if (input.empty()) continue;
    const double w =
        padding / std::max(padding, static_cast<double>(input.size()));
    for (std::uint32_t e : input) estimates.at(e) += w;
  }
  return estimates;
}

std::unique_ptr<FrequencyOracle> MakeOracle(OracleKind kind, double epsilon) {
  switch (kind) {
    case OracleKind::kOlh:
      return std::make_unique<OlhOracle>(epsilon);
    case OracleKind::kExact:
      return std::make_unique<ExactOracle>(epsilon);
  }
  throw std::invalid_argument("unknown oracle kind");
}

OracleKind ParseOracleKind(const std::string& name) {
  if (name == "olh") return OracleKind::kOlh;
  if (name == "exact") return OracleKind::kExact;
  throw std::invalid_argument("unknown oracle '" + name +
                              "' (expected olh or exact)");
}

std::string OracleKindName(OracleKind kind) {
  return kind == OracleKind::kOlh ? "olh" : "exact";
}

}  // namespace ldpfim
