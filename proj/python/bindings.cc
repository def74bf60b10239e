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

// Python bindings for the core library.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "ldpfim/collector.h"
#include "ldpfim/dataset.h"
#include "ldpfim/exact_miner.h"
#include "ldpfim/metrics.h"
#include "ldpfim/noisy_fptree.h"
#include "ldpfim/oracle.h"
#include "ldpfim/postprocess.h"
#include "ldpfim/svsm.h"

namespace py = pybind11;

namespace {

using ItemsetList = std::vector<std::pair<ldpfim::Itemset, double>>;

ItemsetList ToList(const ldpfim::RankedItemsets& r) {
  ItemsetList out;
  for (const auto& e : r.entries) out.emplace_back(e.items, e.frequency);
  return out;
}

ldpfim::RankedItemsets FromList(const ItemsetList& list) {
  ldpfim::RankedItemsets r;
  for (const auto& [items, f] : list) {
    r.entries.push_back({ldpfim::MakeItemset(items), f});
  }
  return r;
}

ldpfim::TransactionDB ToDb(std::vector<std::vector<ldpfim::Item>> rows) {
  return ldpfim::MakeTransactionDB(std::move(rows));
}

ldpfim::MinerParams ParamsFrom(const py::dict& kwargs) {
  ldpfim::MinerParams p;
  for (const auto& [key, value] : kwargs) {
    const auto name = key.cast<std::string>();
    if (name == "xi") p.xi = value.cast<double>();
    else if (name == "enable_cutdown") p.enable_cutdown = value.cast<bool>();
    else if (name == "height_percentile") p.height_percentile = value.cast<double>();
    else if (name == "svim_tau") p.svim_tau = value.cast<double>();
    else if (name == "pwc") p.pwc = value.cast<bool>();
    else if (name == "cci") p.cci = value.cast<bool>();
    else if (name == "npb") p.npb = value.cast<bool>();
    else if (name == "iwc") p.iwc = value.cast<bool>();
    else if (name == "omega") p.omega = value.cast<double>();
    else if (name == "omega_prefix") p.omega_prefix = value.cast<double>();
    else if (name == "theta0") p.theta0 = value.cast<double>();
    else if (name == "cci_repetitions") p.cci_repetitions = value.cast<std::size_t>();
    else if (name == "gamma") p.gamma = value.cast<double>();
    else throw py::key_error("unknown miner parameter: " + name);
  }
  return p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Locally differentially private frequent itemset mining";

  m.def(
      "generate_synthetic",
      [](std::size_t n, std::size_t d, double mean_length, double zipf_exponent,
         const std::vector<std::pair<std::vector<ldpfim::Item>, double>>& patterns,
         std::uint64_t seed) {
        ldpfim::SyntheticParams params;
        params.mean_length = mean_length;
        params.zipf_exponent = zipf_exponent;
        for (const auto& [items, prob] : patterns) {
          params.patterns.push_back({ldpfim::MakeItemset(items), prob});
        }
        return ldpfim::GenerateSynthetic(n, d, params, seed).transactions;
      },
      py::arg("n"), py::arg("d"), py::arg("mean_length") = 8.0,
      py::arg("zipf_exponent") = 1.1,
      py::arg("patterns") =
          std::vector<std::pair<std::vector<ldpfim::Item>, double>>{},
      py::arg("seed") = 0);

  m.def(
      "load_transactions",
      [](const std::filesystem::path& path) {
        return ldpfim::LoadTransactions(path).transactions;
      },
      py::arg("path"));

  m.def(
      "exact_top_k",
      [](std::vector<std::vector<ldpfim::Item>> rows, std::size_t k) {
        return ToList(ldpfim::ExactTopK(ToDb(std::move(rows)), k));
      },
      py::arg("transactions"), py::arg("k"));

  m.def(
      "ldp_fpminer",
      [](std::vector<std::vector<ldpfim::Item>> rows, std::size_t k,
         double epsilon, std::uint64_t seed, const std::string& oracle,
         const py::kwargs& kwargs) {
        const auto o = ldpfim::MakeOracle(ldpfim::ParseOracleKind(oracle), epsilon);
        const auto r = ldpfim::LdpFpMiner(ToDb(std::move(rows)), k, *o,
                                          ParamsFrom(kwargs), seed);
        return ToList(r.itemsets);
      },
      py::arg("transactions"), py::arg("k"), py::arg("epsilon"),
      py::arg("seed") = 0, py::arg("oracle") = "olh");

  m.def(
      "svsm",
      [](std::vector<std::vector<ldpfim::Item>> rows, std::size_t k,
         double epsilon, std::uint64_t seed, const std::string& oracle,
         double gamma) {
        const auto o = ldpfim::MakeOracle(ldpfim::ParseOracleKind(oracle), epsilon);
        ldpfim::SvsmRunParams params;
        params.svsm.gamma = gamma;
        return ToList(
            ldpfim::RunSvsm(ToDb(std::move(rows)), k, *o, params, seed).itemsets);
      },
      py::arg("transactions"), py::arg("k"), py::arg("epsilon"),
      py::arg("seed") = 0, py::arg("oracle") = "olh", py::arg("gamma") = 0.8);

  m.def(
      "ncr",
      [](const ItemsetList& truth, const ItemsetList& estimated) {
        return ldpfim::Ncr(FromList(truth), FromList(estimated));
      },
      py::arg("truth"), py::arg("estimated"));

  m.def(
      "var",
      [](const ItemsetList& truth, const ItemsetList& estimated) {
        return ldpfim::MeanSquaredError(FromList(truth), FromList(estimated)).value;
      },
      py::arg("truth"), py::arg("estimated"));

  m.def("grr_variance", &ldpfim::GrrVariance, py::arg("n"), py::arg("epsilon"),
        py::arg("domain_size"));
  m.def("olh_variance", &ldpfim::OlhVariance, py::arg("n"), py::arg("epsilon"));
  m.def("optimal_hash_range", &ldpfim::OptimalHashRange, py::arg("epsilon"));

  m.def(
      "guessing_probability",
      [](const std::vector<std::size_t>& ranks,
         const std::vector<double>& probabilities) {
        return ldpfim::GuessingProbability(ranks,
                                           ldpfim::GuessModel{probabilities});
      },
      py::arg("ranks"), py::arg("probabilities"));

  m.def(
      "negative_positive_balance",
      [](std::vector<double> values, std::uint64_t seed) {
        ldpfim::Rng rng(seed);
        auto r = ldpfim::NegativePositiveBalance(std::move(values), rng);
        return py::make_tuple(r.values, r.dropped_debit);
      },
      py::arg("values"), py::arg("seed") = 0);
}
