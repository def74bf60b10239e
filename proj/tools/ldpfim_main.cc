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

// Command-line harness: dataset generation, ground truth, experiment runs,
// metric recomputation and aggregate reports.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ldpfim/dataset.h"
#include "ldpfim/exact_miner.h"
#include "ldpfim/harness.h"
#include "ldpfim/metrics.h"

namespace {

namespace fs = std::filesystem;

// "1,2,3:0.05" -> items {1,2,3} planted with probability 0.05.
ldpfim::PlantedPattern ParsePattern(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("pattern '" + text + "' needs items:probability");
  }
  std::vector<ldpfim::Item> items;
  std::stringstream list(text.substr(0, colon));
  std::string token;
  while (std::getline(list, token, ',')) {
    items.push_back(static_cast<ldpfim::Item>(std::stoul(token)));
  }
  return {ldpfim::MakeItemset(std::move(items)), std::stod(text.substr(colon + 1))};
}

fs::path GroundTruthFor(const fs::path& results, std::size_t k) {
  const auto dir = results / "ground_truth";
  const std::string suffix = "_k" + std::to_string(k) + ".txt";
  fs::path found;
  if (fs::is_directory(dir)) {
    for (const auto& entry : fs::directory_iterator(dir)) {
      const auto name = entry.path().filename().string();
      if (name.size() > suffix.size() &&
          name.compare(name.size() - suffix.size(), suffix.size(), suffix) == 0) {
        if (!found.empty()) {
          throw std::runtime_error("several ground-truth files for k=" +
                                   std::to_string(k));
        }
        found = entry.path();
      }
    }
  }
  if (found.empty()) {
    throw std::runtime_error("no ground truth for k=" + std::to_string(k) +
                             " under " + dir.string());
  }
  return found;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Locally private frequent itemset mining experiments"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  auto* gen = app.add_subcommand("gen-data", "Write a synthetic dataset");
  std::size_t gen_n = 0, gen_d = 0;
  std::uint64_t gen_seed = 1;
  ldpfim::SyntheticParams gen_params;
  std::vector<std::string> gen_patterns;
  std::string gen_out;
  gen->add_option("--n", gen_n, "Number of transactions")->required();
  gen->add_option("--d", gen_d, "Number of items")->required();
  gen->add_option("--mean-length", gen_params.mean_length, "Mean base length");
  gen->add_option("--zipf", gen_params.zipf_exponent, "Zipf exponent");
  gen->add_option("--pattern", gen_patterns,
                  "Planted pattern as items:probability, e.g. 1,2,3:0.05");
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", gen_out, "Output file")->required();

  auto* truth = app.add_subcommand("ground-truth", "Exact top-k itemsets");
  std::string truth_data, truth_out;
  std::size_t truth_k = 0;
  std::size_t truth_max_len = 0;
  truth->add_option("--data", truth_data, "SPMF transaction file")->required();
  truth->add_option("--k", truth_k, "Number of itemsets")->required();
  truth->add_option("--max-len", truth_max_len, "Longest itemset (0: no limit)");
  truth->add_option("--out", truth_out, "Output file (default: stdout)");

  auto* run = app.add_subcommand("run", "Run experiments from a JSON config");
  std::string run_config, run_output;
  run->add_option("--config", run_config, "Experiment config")->required();
  run->add_option("--output-dir", run_output, "Override the output directory");

  auto* metrics = app.add_subcommand(
      "metrics", "Recompute trial metrics from stored itemsets");
  std::string metrics_results, metrics_out;
  metrics->add_option("--results", metrics_results, "Results directory")
      ->required();
  metrics->add_option("--out", metrics_out,
                      "Per-trial CSV (default: <results>/metrics.csv)");

  auto* report = app.add_subcommand("report", "Aggregate trials into CSV");
  std::string report_results, report_out;
  report->add_option("--results", report_results, "Results directory")
      ->required();
  report->add_option("--out", report_out,
                     "Aggregate CSV (default: <results>/aggregate.csv)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      for (const auto& p : gen_patterns) {
        gen_params.patterns.push_back(ParsePattern(p));
      }
      const auto db = ldpfim::GenerateSynthetic(gen_n, gen_d, gen_params, gen_seed);
      ldpfim::WriteTransactions(db, gen_out);
      std::cout << "wrote " << db.size() << " transactions over "
                << db.domain.size() << " items to " << gen_out << "\n";
    } else if (*truth) {
      const auto db = ldpfim::LoadTransactions(truth_data);
      const auto top = ldpfim::ExactTopK(
          db, truth_k,
          truth_max_len > 0 ? std::optional<std::size_t>(truth_max_len)
                            : std::nullopt);
      if (truth_out.empty()) {
        for (const auto& e : top.entries) {
          std::cout << ldpfim::FormatItemset(e.items)
                    << " #SUP: " << static_cast<long long>(e.frequency) << "\n";
        }
      } else {
        ldpfim::WriteItemsets(top, truth_out);
      }
      if (top.incomplete) {
        std::cerr << "only " << top.size() << " itemsets have positive support\n";
      }
    } else if (*run) {
      auto config = ldpfim::LoadConfig(run_config);
      if (!run_output.empty()) config.output_dir = run_output;
      const auto results = ldpfim::RunExperiment(config);
      const auto dir = ldpfim::ResolveOutputDir(config.output_dir);
      std::cout << "ran " << results.size() << " trials; results in "
                << dir.string() << "\n";
      for (const auto& t : results) {
        if (!t.ledger_ok) {
          std::cerr << "report accounting failed for " << t.miner << " trial "
                    << t.trial << "\n";
          return 3;
        }
      }
    } else if (*metrics) {
      const fs::path dir = metrics_results;
      const auto trials = ldpfim::LoadTrials(dir);
      std::ostringstream out;
      out << "miner,k,epsilon,trial,ncr,var,intersection_size,matches_stored\n";
      std::size_t mismatches = 0;
      for (const auto& t : trials) {
        const auto truth_list = ldpfim::ReadItemsets(GroundTruthFor(dir, t.k));
        auto estimated = t.itemsets;
        if (estimated.size() > truth_list.size()) {
          estimated.entries.resize(truth_list.size());
        }
        const auto m = ldpfim::Evaluate(truth_list, estimated);
        const bool same = m.ncr == t.metrics.ncr && m.var == t.metrics.var;
        if (!same) ++mismatches;
        out << t.miner << "," << t.k << "," << t.epsilon << "," << t.trial << ","
            << m.ncr << "," << m.var << "," << m.intersection_size << ","
            << (same ? "true" : "false") << "\n";
      }
      const fs::path path = metrics_out.empty() ? dir / "metrics.csv"
                                                : fs::path(metrics_out);
      std::ofstream file(path);
      file << out.str();
      std::cout << "recomputed " << trials.size() << " trials into "
                << path.string() << "; " << mismatches
                << " differ from stored values\n";
      return mismatches == 0 ? 0 : 4;
    } else if (*report) {
      const fs::path dir = report_results;
      const auto rows = ldpfim::Aggregate(ldpfim::LoadTrials(dir));
      const fs::path path = report_out.empty() ? dir / "aggregate.csv"
                                               : fs::path(report_out);
      ldpfim::WriteAggregateCsv(rows, path);
      std::cout << "wrote " << rows.size() << " rows to " << path.string()
                << "\n";
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
