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

#include "ldpfim/harness.h"

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "ldpfim/exact_miner.h"
#include "ldpfim/hashing.h"
#include "ldpfim/svsm.h"

namespace ldpfim {
namespace {

using nlohmann::json;

void RejectUnknownKeys(const json& obj, const std::set<std::string>& allowed,
                       const std::string& where) {
  if (!obj.is_object()) throw std::invalid_argument(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw std::invalid_argument("unknown key '" + key + "' in " + where);
    }
  }
}

template <typename T>
std::vector<T> ScalarOrList(const json& value) {
  if (value.is_array()) return value.get<std::vector<T>>();
  return {value.get<T>()};
}

void ApplyParams(const json& p, MinerVariant& v) {
  RejectUnknownKeys(p,
                    {"xi", "enable_cutdown", "height_percentile", "svim_tau",
                     "svsm_tau", "fractions", "pwc", "cci", "npb", "iwc",
                     "omega", "omega_prefix", "theta0", "cci_repetitions",
                     "gamma", "iwc_pool_factor"},
                    "params");
  auto& m = v.params;
  if (p.contains("xi")) m.xi = p["xi"].get<double>();
  if (p.contains("enable_cutdown")) m.enable_cutdown = p["enable_cutdown"].get<bool>();
  if (p.contains("height_percentile")) {
    m.height_percentile = p["height_percentile"].get<double>();
  }
  if (p.contains("svim_tau")) m.svim_tau = p["svim_tau"].get<double>();
  if (p.contains("svsm_tau")) v.svsm_tau = p["svsm_tau"].get<double>();
  if (p.contains("fractions")) {
    const auto f = p["fractions"].get<std::vector<double>>();
    if (f.size() != 3) throw std::invalid_argument("fractions needs 3 values");
    m.fractions = {f[0], f[1], f[2]};
  }
  if (p.contains("pwc")) m.pwc = p["pwc"].get<bool>();
  if (p.contains("cci")) m.cci = p["cci"].get<bool>();
  if (p.contains("npb")) m.npb = p["npb"].get<bool>();
  if (p.contains("iwc")) m.iwc = p["iwc"].get<bool>();
  if (p.contains("omega")) m.omega = p["omega"].get<double>();
  if (p.contains("omega_prefix")) m.omega_prefix = p["omega_prefix"].get<double>();
  if (p.contains("theta0")) m.theta0 = p["theta0"].get<double>();
  if (p.contains("cci_repetitions")) {
    m.cci_repetitions = p["cci_repetitions"].get<std::size_t>();
  }
  if (p.contains("gamma")) m.gamma = p["gamma"].get<double>();
  if (p.contains("iwc_pool_factor")) {
    m.iwc_pool_factor = p["iwc_pool_factor"].get<std::size_t>();
  }
}

MinerKind ParseMinerKind(const std::string& name) {
  if (name == "fpminer") return MinerKind::kFpMiner;
  if (name == "svsm") return MinerKind::kSvsm;
  throw std::invalid_argument("unknown miner '" + name + "'");
}

MinerVariant DefaultVariant(MinerKind kind) {
  MinerVariant v;
  v.miner = kind;
  v.name = kind == MinerKind::kFpMiner ? "fpminer" : "svsm";
  return v;
}

std::string FormatDouble(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string FileSafe(std::string s) {
  for (char& c : s) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '-' || c == '_' || c == '.';
    if (!ok) c = '_';
  }
  return s;
}

std::string TrialFileName(const TrialResult& t) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "_k%zu_eps%g_t%04zu.json", t.k, t.epsilon,
                t.trial);
  return FileSafe(t.miner) + buf;
}

json ItemsetsToJson(const RankedItemsets& r) {
  json entries = json::array();
  for (const auto& e : r.entries) {
    entries.push_back({{"items", e.items}, {"frequency", e.frequency}});
  }
  return {{"entries", entries}, {"incomplete", r.incomplete}};
}

RankedItemsets ItemsetsFromJson(const json& j) {
  RankedItemsets r;
  for (const auto& e : j.at("entries")) {
    r.entries.push_back({e.at("items").get<Itemset>(),
                         e.at("frequency").get<double>()});
  }
  r.incomplete = j.at("incomplete").get<bool>();
  return r;
}

void WriteText(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace

void ExperimentConfig::Validate() const {
  if (!dataset.path.has_value() == !dataset.synthetic.has_value()) {
    throw std::invalid_argument("dataset needs exactly one of path or synthetic");
  }
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (variants.empty()) throw std::invalid_argument("no miners selected");
  if (ks.empty() || epsilons.empty()) {
    throw std::invalid_argument("k and epsilon lists must be non-empty");
  }
  for (auto k : ks) {
    if (k < 1) throw std::invalid_argument("every k must be at least 1");
  }
  for (double e : epsilons) {
    if (!(e > 0.0) || !std::isfinite(e)) {
      throw std::invalid_argument("every epsilon must be positive and finite");
    }
  }
  std::set<std::string> names;
  for (const auto& v : variants) {
    if (!names.insert(v.name).second) {
      throw std::invalid_argument("duplicate miner name '" + v.name + "'");
    }
    v.params.Validate();
  }
}

ExperimentConfig ParseConfig(const json& j) {
  RejectUnknownKeys(j,
                    {"dataset", "miners", "params", "k", "epsilon", "trials",
                     "output_dir", "master_seed", "oracle"},
                    "config");
  ExperimentConfig c;
  const json& ds = j.at("dataset");
  RejectUnknownKeys(ds, {"path", "synthetic"}, "dataset");
  if (ds.contains("path")) c.dataset.path = ds["path"].get<std::string>();
  if (ds.contains("synthetic")) {
    const json& s = ds["synthetic"];
    RejectUnknownKeys(
        s, {"n", "d", "mean_length", "zipf_exponent", "patterns", "seed"},
        "synthetic");
    SyntheticSpec spec;
    spec.n = s.at("n").get<std::size_t>();
    spec.d = s.at("d").get<std::size_t>();
    if (s.contains("mean_length")) {
      spec.params.mean_length = s["mean_length"].get<double>();
    }
    if (s.contains("zipf_exponent")) {
      spec.params.zipf_exponent = s["zipf_exponent"].get<double>();
    }
    if (s.contains("patterns")) {
      for (const auto& p : s["patterns"]) {
        RejectUnknownKeys(p, {"items", "probability"}, "pattern");
        spec.params.patterns.push_back(
            {MakeItemset(p.at("items").get<std::vector<Item>>()),
             p.at("probability").get<double>()});
      }
    }
    if (s.contains("seed")) spec.seed = s["seed"].get<std::uint64_t>();
    c.dataset.synthetic = spec;
  }

  const json shared = j.value("params", json::object());
  const json miners = j.value("miners", json("both"));
  if (miners.is_string()) {
    const auto m = miners.get<std::string>();
    if (m == "both") {
      c.variants = {DefaultVariant(MinerKind::kFpMiner),
                    DefaultVariant(MinerKind::kSvsm)};
    } else {
      c.variants = {DefaultVariant(ParseMinerKind(m))};
    }
    for (auto& v : c.variants) ApplyParams(shared, v);
  } else if (miners.is_array()) {
    for (const auto& m : miners) {
      RejectUnknownKeys(m, {"name", "miner", "params"}, "miner variant");
      MinerVariant v = DefaultVariant(ParseMinerKind(m.at("miner").get<std::string>()));
      v.name = m.value("name", v.name);
      ApplyParams(shared, v);
      if (m.contains("params")) ApplyParams(m["params"], v);
      c.variants.push_back(v);
    }
  } else {
    throw std::invalid_argument("miners must be a string or a list");
  }

  c.ks = ScalarOrList<std::size_t>(j.at("k"));
  c.epsilons = ScalarOrList<double>(j.at("epsilon"));
  c.trials = j.value("trials", std::size_t{20});
  c.output_dir = j.value("output_dir", std::string("results"));
  c.master_seed = j.value("master_seed", std::uint64_t{1});
  c.oracle = ParseOracleKind(j.value("oracle", std::string("olh")));
  c.Validate();
  return c;
}

ExperimentConfig LoadConfig(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path.string());
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
  return ParseConfig(j);
}

std::filesystem::path ResolveOutputDir(const std::filesystem::path& dir) {
  const char* root = std::getenv("LDPFIM_OUTPUT_ROOT");
  if (root != nullptr && *root != '\0' && dir.is_relative()) {
    return std::filesystem::path(root) / dir;
  }
  return dir;
}

TransactionDB LoadDataset(const DatasetSpec& spec) {
  if (spec.path) return LoadTransactions(*spec.path);
  if (spec.synthetic) {
    const auto& s = *spec.synthetic;
    return GenerateSynthetic(s.n, s.d, s.params, s.seed);
  }
  throw std::invalid_argument("dataset has neither a path nor synthetic settings");
}

json TrialToJson(const TrialResult& t) {
  return {
      {"miner", t.miner},
      {"k", t.k},
      {"epsilon", t.epsilon},
      {"trial", t.trial},
      {"seed", t.seed},
      {"ncr", t.metrics.ncr},
      {"var", t.metrics.var},
      {"intersection_size", t.metrics.intersection_size},
      {"empty_intersection", t.metrics.empty_intersection},
      {"itemsets", ItemsetsToJson(t.itemsets)},
      {"frequent_items", t.frequent_items},
      {"tree_height", t.tree_height},
      {"generated_per_level", t.generated_per_level},
      {"kept_per_level", t.kept_per_level},
      {"node_expansions", t.node_expansions},
      {"stopped_early", t.stopped_early},
      {"reports", t.reports},
      {"unqueried_users", t.unqueried_users},
      {"ledger_ok", t.ledger_ok},
  };
}

TrialResult TrialFromJson(const json& j) {
  TrialResult t;
  t.miner = j.at("miner").get<std::string>();
  t.k = j.at("k").get<std::size_t>();
  t.epsilon = j.at("epsilon").get<double>();
  t.trial = j.at("trial").get<std::size_t>();
  t.seed = j.at("seed").get<std::uint64_t>();
  t.metrics.k = t.k;
  t.metrics.ncr = j.at("ncr").get<double>();
  t.metrics.var = j.at("var").get<double>();
  t.metrics.intersection_size = j.at("intersection_size").get<std::size_t>();
  t.metrics.empty_intersection = j.at("empty_intersection").get<bool>();
  t.itemsets = ItemsetsFromJson(j.at("itemsets"));
  t.frequent_items = j.at("frequent_items").get<std::size_t>();
  t.tree_height = j.at("tree_height").get<std::size_t>();
  t.generated_per_level = j.at("generated_per_level").get<std::vector<std::size_t>>();
  t.kept_per_level = j.at("kept_per_level").get<std::vector<std::size_t>>();
  t.node_expansions = j.at("node_expansions").get<std::size_t>();
  t.stopped_early = j.at("stopped_early").get<bool>();
  t.reports = j.at("reports").get<std::size_t>();
  t.unqueried_users = j.at("unqueried_users").get<std::size_t>();
  t.ledger_ok = j.at("ledger_ok").get<bool>();
  return t;
}

std::uint64_t TrialSeed(std::uint64_t master_seed, const std::string& miner,
                        std::size_t k, double epsilon, std::size_t trial) {
  return DeriveSeed(master_seed, {TagOf(miner), static_cast<std::uint64_t>(k),
                                  std::bit_cast<std::uint64_t>(epsilon),
                                  static_cast<std::uint64_t>(trial)});
}

TrialResult RunTrial(const TransactionDB& db, const RankedItemsets& truth,
                     const MinerVariant& variant, std::size_t k,
                     double epsilon, std::size_t trial, std::uint64_t seed,
                     OracleKind oracle_kind) {
  const auto oracle = MakeOracle(oracle_kind, epsilon);
  TrialResult t;
  t.miner = variant.name;
  t.k = k;
  t.epsilon = epsilon;
  t.trial = trial;
  t.seed = seed;
  const auto start = std::chrono::steady_clock::now();
  if (variant.miner == MinerKind::kFpMiner) {
    const MinerResult r = LdpFpMiner(db, k, *oracle, variant.params, seed);
    t.itemsets = r.itemsets;
    t.frequent_items = r.stats.frequent_items;
    t.tree_height = r.stats.tree_height;
    t.generated_per_level = r.stats.construction.generated_per_level;
    t.kept_per_level = r.stats.construction.kept_per_level;
    t.node_expansions = r.stats.construction.node_expansions;
    t.stopped_early = r.stats.construction.stopped_early;
    t.reports = r.stats.reports;
    t.unqueried_users = r.stats.construction.unqueried_users;
    t.ledger_ok = r.stats.no_user_twice &&
                  t.reports + t.unqueried_users == db.size();
  } else {
    SvsmRunParams p;
    p.fractions = variant.params.fractions;
    p.svim.tau = variant.params.svim_tau;
    p.svsm.gamma = variant.params.gamma;
    p.svsm.tau = variant.svsm_tau;
    const SvsmRun r = RunSvsm(db, k, *oracle, p, seed);
    t.itemsets = r.itemsets;
    t.frequent_items = r.frequent_items.items.size();
    t.reports = r.reports;
    t.ledger_ok = r.every_user_once && r.reports == db.size();
  }
  t.wall_seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  RankedItemsets estimated = t.itemsets;
  if (estimated.size() > truth.size()) estimated.entries.resize(truth.size());
  if (!truth.empty()) t.metrics = Evaluate(truth, estimated);
  return t;
}

void WriteItemsets(const RankedItemsets& itemsets,
                   const std::filesystem::path& path) {
  std::ostringstream out;
  for (const auto& e : itemsets.entries) {
    out << FormatItemset(e.items) << " #SUP: " << FormatDouble(e.frequency)
        << "\n";
  }
  WriteText(path, out.str());
}

RankedItemsets ReadItemsets(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  RankedItemsets r;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto mark = line.find("#SUP:");
    if (mark == std::string::npos) {
      throw std::invalid_argument(path.string() + ":" + std::to_string(line_no) +
                                  ": missing #SUP:");
    }
    std::istringstream items(line.substr(0, mark));
    std::vector<Item> xs;
    Item x;
    while (items >> x) xs.push_back(x);
    r.entries.push_back({MakeItemset(std::move(xs)),
                         std::stod(line.substr(mark + 5))});
  }
  return r;
}

RankedItemsets CachedGroundTruth(const TransactionDB& db, std::size_t k,
                                 const std::filesystem::path& cache_dir) {
  std::filesystem::create_directories(cache_dir);
  const auto path =
      cache_dir / (DatabaseDigest(db) + "_k" + std::to_string(k) + ".txt");
  if (std::filesystem::exists(path)) {
    RankedItemsets cached = ReadItemsets(path);
    cached.incomplete = cached.size() < k;
    return cached;
  }
  RankedItemsets truth = ExactTopK(db, k);
  WriteItemsets(truth, path);
  return truth;
}

std::vector<TrialResult> RunExperiment(const ExperimentConfig& config) {
  config.Validate();
  const TransactionDB db = LoadDataset(config.dataset);
  const auto out_dir = ResolveOutputDir(config.output_dir);
  std::filesystem::create_directories(out_dir / "trials");
  std::vector<TrialResult> results;
  std::ostringstream timings;
  timings << "miner,k,epsilon,trial,wall_seconds\n";
  for (std::size_t k : config.ks) {
    const RankedItemsets truth =
        CachedGroundTruth(db, k, out_dir / "ground_truth");
    for (const auto& variant : config.variants) {
      for (double eps : config.epsilons) {
        for (std::size_t trial = 0; trial < config.trials; ++trial) {
          const auto seed =
              TrialSeed(config.master_seed, variant.name, k, eps, trial);
          TrialResult t = RunTrial(db, truth, variant, k, eps, trial, seed,
                                   config.oracle);
          WriteText(out_dir / "trials" / TrialFileName(t),
                    TrialToJson(t).dump(2) + "\n");
          timings << t.miner << "," << t.k << "," << FormatDouble(t.epsilon)
                  << "," << t.trial << "," << FormatDouble(t.wall_seconds)
                  << "\n";
          results.push_back(std::move(t));
        }
      }
    }
  }
  WriteText(out_dir / "timings.csv", timings.str());
  WriteAggregateCsv(Aggregate(results), out_dir / "aggregate.csv");
  return results;
}

std::vector<AggregateRow> Aggregate(const std::vector<TrialResult>& trials) {
  std::map<std::tuple<std::string, std::size_t, double>,
           std::vector<const TrialResult*>>
      groups;
  for (const auto& t : trials) {
    groups[std::make_tuple(t.miner, t.k, t.epsilon)].push_back(&t);
  }
  auto mean_std = [](const std::vector<double>& xs) {
    double mean = 0.0;
    for (double x : xs) mean += x;
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - mean) * (x - mean);
    const double sd =
        xs.size() > 1 ? std::sqrt(ss / static_cast<double>(xs.size() - 1)) : 0.0;
    return std::make_pair(mean, sd);
  };
  std::vector<AggregateRow> rows;
  for (auto& [key, members] : groups) {
    std::sort(members.begin(), members.end(),
              [](const TrialResult* a, const TrialResult* b) {
                return a->trial < b->trial;
              });
    AggregateRow row{std::get<0>(key), std::get<1>(key), std::get<2>(key)};
    std::vector<double> ncr, var;
    for (const auto* t : members) {
      ncr.push_back(t->metrics.ncr);
      var.push_back(t->metrics.var);
    }
    std::tie(row.mean_ncr, row.std_ncr) = mean_std(ncr);
    std::tie(row.mean_var, row.std_var) = mean_std(var);
    row.trials = members.size();
    rows.push_back(row);
  }
  return rows;
}

void WriteAggregateCsv(const std::vector<AggregateRow>& rows,
                       const std::filesystem::path& path) {
  std::ostringstream out;
  out << "miner,k,epsilon,mean_ncr,std_ncr,mean_var,std_var,trials\n";
  for (const auto& r : rows) {
    out << r.miner << "," << r.k << "," << FormatDouble(r.epsilon) << ","
        << FormatDouble(r.mean_ncr) << "," << FormatDouble(r.std_ncr) << ","
        << FormatDouble(r.mean_var) << "," << FormatDouble(r.std_var) << ","
        << r.trials << "\n";
  }
  WriteText(path, out.str());
}

std::vector<TrialResult> LoadTrials(const std::filesystem::path& results_dir) {
  const auto dir = results_dir / "trials";
  if (!std::filesystem::is_directory(dir)) {
    throw std::runtime_error("no trials directory under " + results_dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.path().extension() == ".json") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<TrialResult> trials;
  for (const auto& f : files) {
    std::ifstream in(f);
    trials.push_back(TrialFromJson(json::parse(in)));
  }
  return trials;
}

}  // namespace ldpfim
