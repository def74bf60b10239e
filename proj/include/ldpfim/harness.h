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

#ifndef LDPFIM_HARNESS_H_
#define LDPFIM_HARNESS_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "ldpfim/collector.h"
#include "ldpfim/dataset.h"
#include "ldpfim/itemsets.h"
#include "ldpfim/metrics.h"
#include "ldpfim/noisy_fptree.h"

namespace ldpfim {

struct SyntheticSpec {
  std::size_t n = 0;
  std::size_t d = 0;
  SyntheticParams params;
  std::uint64_t seed = 0;
};

struct DatasetSpec {
  std::optional<std::filesystem::path> path;
  std::optional<SyntheticSpec> synthetic;
};

enum class MinerKind { kFpMiner, kSvsm };

struct MinerVariant {
  std::string name;
  MinerKind miner = MinerKind::kFpMiner;
  MinerParams params;
  // Size-estimation percentile of the baseline's candidate phase.
  double svsm_tau = 0.9;
};

struct ExperimentConfig {
  DatasetSpec dataset;
  std::vector<MinerVariant> variants;
  std::vector<std::size_t> ks;
  std::vector<double> epsilons;
  std::size_t trials = 20;
  std::filesystem::path output_dir = "results";
  std::uint64_t master_seed = 1;
  OracleKind oracle = OracleKind::kOlh;

  void Validate() const;
};

// Parses the JSON experiment description. Unknown keys are rejected.
ExperimentConfig ParseConfig(const nlohmann::json& json);
ExperimentConfig LoadConfig(const std::filesystem::path& path);

// The output directory after applying LDPFIM_OUTPUT_ROOT to relative paths.
std::filesystem::path ResolveOutputDir(const std::filesystem::path& dir);

TransactionDB LoadDataset(const DatasetSpec& spec);

struct TrialResult {
  std::string miner;
  std::size_t k = 0;
  double epsilon = 0.0;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  MetricReport metrics;
  RankedItemsets itemsets;
  double wall_seconds = 0.0;
  std::size_t frequent_items = 0;
  std::size_t tree_height = 0;
  std::vector<std::size_t> generated_per_level;
  std::vector<std::size_t> kept_per_level;
  std::size_t node_expansions = 0;
  bool stopped_early = false;
  std::size_t reports = 0;
  std::size_t unqueried_users = 0;
  // Every user reported at most once and reports plus unqueried users is n.
  bool ledger_ok = false;
};

// Wall time is left out so stored trials are byte-identical across reruns.
nlohmann::json TrialToJson(const TrialResult& trial);
TrialResult TrialFromJson(const nlohmann::json& json);

std::uint64_t TrialSeed(std::uint64_t master_seed, const std::string& miner,
                        std::size_t k, double epsilon, std::size_t trial);

// Runs one trial of `variant` on `db`.
TrialResult RunTrial(const TransactionDB& db, const RankedItemsets& truth,
                     const MinerVariant& variant, std::size_t k,
                     double epsilon, std::size_t trial, std::uint64_t seed,
                     OracleKind oracle);

// "1 2 3 #SUP: 42" lines.
void WriteItemsets(const RankedItemsets& itemsets,
                   const std::filesystem::path& path);
RankedItemsets ReadItemsets(const std::filesystem::path& path);

// Exact top-k, cached on disk under `cache_dir` by database digest and k.
RankedItemsets CachedGroundTruth(const TransactionDB& db, std::size_t k,
                                 const std::filesystem::path& cache_dir);

// Runs every (variant, k, epsilon, trial) cell, writes trials/*.json,
// timings.csv and aggregate.csv under the resolved output directory.
std::vector<TrialResult> RunExperiment(const ExperimentConfig& config);

struct AggregateRow {
  std::string miner;
  std::size_t k = 0;
  double epsilon = 0.0;
  double mean_ncr = 0.0;
  double std_ncr = 0.0;
  double mean_var = 0.0;
  double std_var = 0.0;
  std::size_t trials = 0;
};

// One row per (miner, k, epsilon), sorted by that key. Standard deviations
// are sample deviations (0 for a single trial).
std::vector<AggregateRow> Aggregate(const std::vector<TrialResult>& trials);

void WriteAggregateCsv(const std::vector<AggregateRow>& rows,
                       const std::filesystem::path& path);

// Trial files in a results directory, ordered by file name.
std::vector<TrialResult> LoadTrials(const std::filesystem::path& results_dir);

}  // namespace ldpfim

#endif  // LDPFIM_HARNESS_H_
