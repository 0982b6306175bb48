// Copyright 2026 The VHD Simulator Authors.
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

#include "vhd/experiment.hpp"

#include <chrono>
#include <cstdio>
#include <ostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vhd/fast_forward.hpp"
#include "vhd/sampling.hpp"
#include "vhd/variance_scan.hpp"
#include "vhd/verify.hpp"

namespace vhd {

namespace {

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys = {
      "model", "qubits", "layers", "dt", "iterations", "restarts", "mode", "shots", "update_rule",
      "learning_rate", "vff_learning_rate", "nested_gamma", "f_term", "t_target", "t_min", "t_max",
      "t_points", "times", "checkpoint_interval", "threads", "out", "seed", "ansatz_file", "params_vhd",
      "params_vff", "n_min", "n_max", "samples", "gamma_rule", "suites", "tolerance_scale"};
  return keys;
}

void require(bool ok, const std::string& msg) {
  if (!ok) throw std::invalid_argument("config: " + msg);
}

std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t"), b = item.find_last_not_of(" \t");
    if (a != std::string::npos) out.push_back(item.substr(a, b - a + 1));
  }
  return out;
}

LayeredAnsatz ansatz_for(const ExperimentConfig& cfg) {
  return cfg.qubits == 1 ? LayeredAnsatz::single_qubit_euler() : LayeredAnsatz::build(cfg.qubits, cfg.ansatz_layers());
}

ParamsFile params_of(const DiagonalPauliSum& budget, const Vec& gamma, const Vec& theta) {
  ParamsFile p;
  p.num_qubits = budget.num_qubits();
  p.strings.assign(budget.strings().begin(), budget.strings().end());
  p.gamma = gamma;
  p.theta = theta;
  return p;
}

struct Trained {
  LayeredAnsatz ansatz;
  DiagonalPauliSum diag;
  Vec theta;
};

Trained load_trained(const std::filesystem::path& ansatz_path, const std::filesystem::path& params_path) {
  const LayeredAnsatz a = LayeredAnsatz::from_text(read_file(ansatz_path));
  const ParamsFile p = ParamsFile::from_text(read_file(params_path), params_path.string());
  if (p.num_qubits != a.num_qubits()) {
    throw std::invalid_argument(params_path.string() + ": qubit count does not match the ansatz");
  }
  if (p.theta.size() != a.num_params()) {
    throw std::invalid_argument(params_path.string() + ": theta count does not match the ansatz");
  }
  return {a, DiagonalPauliSum(p.num_qubits, p.strings, p.gamma), p.theta};
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory '" + dir.string() + "'");
}

}  // namespace

ExperimentConfig ExperimentConfig::from(const KeyValueConfig& kv) {
  for (const auto& [k, v] : kv.values()) require(known_keys().count(k) != 0, "unknown key '" + k + "'");
  ExperimentConfig c;
  c.model = kv.get_string("model", c.model);
  c.qubits = static_cast<int>(kv.get_int("qubits", c.qubits));
  c.layers = static_cast<int>(kv.get_int("layers", c.layers));
  c.dt = kv.get_double("dt", c.dt);
  c.iterations = static_cast<int>(kv.get_int("iterations", c.iterations));
  c.restarts = static_cast<int>(kv.get_int("restarts", c.restarts));
  c.mode = parse_shot_mode(kv.get_string("mode", std::string(shot_mode_name(c.mode))));
  const long long shots = kv.get_int("shots", static_cast<long long>(c.shots));
  require(shots >= 1, "shots must be >= 1");
  c.shots = static_cast<std::uint64_t>(shots);
  c.update_rule = parse_update_rule(kv.get_string("update_rule", std::string(update_rule_name(c.update_rule))));
  c.learning_rate = kv.get_double("learning_rate", c.learning_rate);
  c.vff_learning_rate = kv.get_double("vff_learning_rate", c.vff_learning_rate);
  c.nested_gamma = kv.get_bool("nested_gamma", c.nested_gamma);
  c.f_term = kv.get_double("f_term", c.f_term);
  c.t_target = kv.get_double("t_target", c.t_target);
  c.t_min = kv.get_double("t_min", c.t_min);
  c.t_max = kv.get_double("t_max", c.t_max);
  c.t_points = static_cast<int>(kv.get_int("t_points", c.t_points));
  c.times = kv.get_doubles("times", c.times);
  c.checkpoint_interval = static_cast<int>(kv.get_int("checkpoint_interval", c.checkpoint_interval));
  c.threads = static_cast<int>(kv.get_int("threads", c.threads));
  c.out = kv.get_string("out", c.out.string());
  const long long seed = kv.get_int("seed", static_cast<long long>(c.seed));
  require(seed >= 0, "seed must be non-negative");
  c.seed = static_cast<std::uint64_t>(seed);
  c.ansatz_file = kv.get_string("ansatz_file", "");
  c.params_vhd = kv.get_string("params_vhd", "");
  c.params_vff = kv.get_string("params_vff", "");
  c.n_min = static_cast<int>(kv.get_int("n_min", c.n_min));
  c.n_max = static_cast<int>(kv.get_int("n_max", c.n_max));
  c.samples = static_cast<int>(kv.get_int("samples", c.samples));
  c.gamma_rule = kv.get_string("gamma_rule", c.gamma_rule);
  c.suites = split_names(kv.get_string("suites", ""));
  c.tolerance_scale = kv.get_double("tolerance_scale", c.tolerance_scale);

  require(c.qubits >= 1 && c.qubits <= kDefaultTolerances.max_qubits, "qubits out of range");
  require(c.layers >= 0, "layers must be >= 0");
  require(c.dt > 0, "dt must be positive");
  require(c.iterations >= 1, "iterations must be >= 1");
  require(c.restarts >= 1, "restarts must be >= 1");
  require(c.learning_rate > 0 && c.vff_learning_rate > 0, "learning rates must be positive");
  require(c.f_term > 0 && c.f_term <= 1, "f_term must lie in (0, 1]");
  require(c.t_target > 0, "t_target must be positive");
  require(c.t_points >= 1 && c.t_min > 0 && c.t_max >= c.t_min, "invalid time grid");
  for (std::size_t i = 0; i < c.times.size(); ++i) {
    require(c.times[i] >= 0 && (i == 0 || c.times[i] > c.times[i - 1]), "times must be non-negative and increasing");
  }
  require(c.n_min >= 2 && c.n_max >= c.n_min && c.n_max <= kDefaultTolerances.max_qubits, "invalid n range");
  require(c.samples >= 2, "samples must be >= 2");
  require(c.gamma_rule == "unit" || c.gamma_rule == "zero", "gamma_rule must be unit or zero");
  require(c.tolerance_scale >= 0, "tolerance_scale must be non-negative");
  // Output location and thread count do not change results.
  KeyValueConfig hashed;
  for (const auto& [k, v] : kv.values()) {
    if (k != "out" && k != "threads") hashed.set(k, v);
  }
  c.config_hash = hashed.hash();
  return c;
}

OptConfig ExperimentConfig::opt_config() const {
  OptConfig o;
  o.rule = update_rule;
  o.learning_rate = learning_rate;
  o.vff_learning_rate = vff_learning_rate;
  o.max_iterations = iterations;
  o.restarts = restarts;
  o.f_term = f_term;
  o.t_target = t_target;
  o.shots = {mode, shots, seed};
  o.seed = seed;
  o.nested_gamma = nested_gamma;
  o.checkpoint_interval = checkpoint_interval;
  o.threads = threads;
  return o;
}

std::vector<double> ExperimentConfig::time_grid() const {
  return times.empty() ? log_grid(t_min, t_max, t_points) : times;
}

PauliSum load_hamiltonian(const ExperimentConfig& cfg) {
  if (cfg.model == "xy") return xy_hamiltonian(cfg.qubits);
  const PauliSum h = PauliSum::from_text(read_file(cfg.model));
  if (h.num_qubits() != cfg.qubits) throw std::invalid_argument(cfg.model + ": qubit count does not match config");
  return h;
}

int cmd_diagonalize(const ExperimentConfig& cfg, std::ostream& log) {
  const auto t0 = std::chrono::steady_clock::now();
  const PauliSum h = load_hamiltonian(cfg);
  const DiagonalPauliSum budget = DiagonalPauliSum::weight_one(cfg.qubits);
  const LayeredAnsatz a = ansatz_for(cfg);
  const OptConfig opt = cfg.opt_config();
  const PipelineResult result = run_pipeline(h, budget, a, cfg.dt, opt);
  const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const RestartResult& best = result.best();

  std::string trace = metadata_header(cfg.meta(), {"model=" + cfg.model, "qubits=" + std::to_string(cfg.qubits)}) +
                      trace_csv_header();
  bool monotone = true;
  for (const auto& r : result.restarts) {
    trace += trace_csv_rows(r.trace, r.restart);
    for (std::size_t i = 1; i < r.vhd.trace.records.size(); ++i) {
      monotone &= r.vhd.trace.records[i].best_cost <= r.vhd.trace.records[i - 1].best_cost;
    }
  }

  const double d = static_cast<double>(a.dim());
  nlohmann::ordered_json j;
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(cfg.config_hash));
  j["config_hash"] = hash;
  j["seed"] = cfg.seed;
  j["code_version"] = kCodeVersion;
  j["model"] = cfg.model;
  j["qubits"] = cfg.qubits;
  j["layers"] = a.num_layers();
  j["num_params"] = a.num_params();
  j["mode"] = shot_mode_name(cfg.mode);
  j["update_rule"] = update_rule_name(cfg.update_rule);
  j["best_restart"] = best.restart;
  j["best_cost"] = best.vhd.best.c_vhd;
  j["best_cost_normalized"] = best.vhd.best.c_vhd_normalized;
  j["best_cost_exact"] = best.exact.c_vhd;
  j["best_cost_exact_normalized"] = best.exact.c_vhd_normalized;
  j["termination_cost"] = result.termination_threshold;
  j["terminated"] = best.vhd.trace.terminated;
  j["t_target"] = cfg.t_target;
  j["guaranteed_fidelity"] = fidelity_lower_bound(std::max(0.0, best.exact.c_vhd), cfg.t_target, d);
  j["vff_cost"] = best.vff.cost;
  j["vff_iterations"] = best.vff.trace.iterations;
  j["vhd_iterations"] = best.vhd.trace.iterations;
  j["restart_costs_normalized"] = nlohmann::json::array();
  for (const auto& r : result.restarts) j["restart_costs_normalized"].push_back(r.vhd.best.c_vhd_normalized);
  j["wall_time_seconds"] = wall;

  ensure_dir(cfg.out);
  // Everything is rendered before the first write.
  const std::string files[][2] = {
      {"trace.csv", trace},
      {"ansatz.txt", a.to_text()},
      {"params_vhd.txt", params_of(budget, best.vhd.gamma, best.vhd.theta).to_text()},
      {"params_vff.txt", params_of(budget, best.vff.gamma, best.vff.theta).to_text()},
      {"summary.json", j.dump(2) + "\n"},
  };
  for (const auto& [name, content] : files) write_file_atomic(cfg.out / name, content);

  log << "best restart " << best.restart << ": normalized cost " << best.vhd.best.c_vhd_normalized
      << ", guaranteed fidelity at T=" << cfg.t_target << " " << j["guaranteed_fidelity"].get<double>() << "\n";
  if (!monotone) {
    log << "invariant violated: best-seen cost increased\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_fastforward(const ExperimentConfig& cfg, std::ostream& log) {
  const std::filesystem::path ansatz_path = cfg.resolve(cfg.ansatz_file, "ansatz.txt");
  const Trained vhd = load_trained(ansatz_path, cfg.resolve(cfg.params_vhd, "params_vhd.txt"));
  const Trained vff = load_trained(ansatz_path, cfg.resolve(cfg.params_vff, "params_vff.txt"));
  const PauliSum h = load_hamiltonian(cfg);
  if (h.num_qubits() != vhd.ansatz.num_qubits()) throw std::invalid_argument("Hamiltonian and ansatz qubit counts differ");
  const std::vector<double> grid = cfg.time_grid();

  const SweepResult s_vhd = infidelity_sweep(h, vhd.ansatz, vhd.theta, vhd.diag, grid, SweepSource::Vhd);
  const TransferResult t = transfer_parameters(vff.diag.gammas(), vff.theta, h, vff.diag, vff.ansatz, cfg.dt);
  const SweepResult s_vff =
      infidelity_sweep(h, vff.ansatz, vff.theta, vff.diag.with_gammas(t.gamma), grid, SweepSource::Vff);

  // Every point must respect the fidelity bound implied by the measured cost.
  const double cost = std::max(0.0, cost_vhd(h, vhd.diag, vhd.ansatz, vhd.theta).c_vhd);
  const double d = static_cast<double>(vhd.ansatz.dim());
  int violations = 0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double bound = 1.0 - fidelity_lower_bound(cost, grid[k], d);
    if (s_vhd.infidelities[k] > bound + 1e-9) ++violations;
  }

  ensure_dir(cfg.out);
  const std::string stem = "ff_n" + std::to_string(cfg.qubits) + "_";
  const std::string vhd_csv = sweep_csv(s_vhd, cfg.meta()), vff_csv = sweep_csv(s_vff, cfg.meta());
  write_file_atomic(cfg.out / (stem + "vhd.csv"), vhd_csv);
  write_file_atomic(cfg.out / (stem + "vff.csv"), vff_csv);
  log << "max infidelity vhd " << *std::max_element(s_vhd.infidelities.begin(), s_vhd.infidelities.end())
      << ", vff " << *std::max_element(s_vff.infidelities.begin(), s_vff.infidelities.end()) << "\n";
  if (violations) {
    log << "invariant violated: " << violations << " sweep points exceed the fidelity bound\n";
    return kExitFailure;
  }
  return kExitOk;
}

int cmd_variance_scan(const ExperimentConfig& cfg, std::ostream& log) {
  std::vector<int> ns;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) ns.push_back(n);
  const GammaRule rule = cfg.gamma_rule == "zero" ? GammaRule(zero_gamma_rule) : GammaRule(unit_gamma_rule);
  const VarianceReport report =
      scan_gradient_variance(xy_hamiltonian, ns, cfg.samples, log_depth_ansatz, rule, cfg.seed, cfg.threads);
  ensure_dir(cfg.out);
  const std::string csv = variance_csv(report, cfg.meta(),
                                       {"probe=empirical; ansatz blocks are not local 2-designs",
                                        "gamma_rule=" + cfg.gamma_rule, "layers=ceil(log2 n)+1"});
  write_file_atomic(cfg.out / "variance_scan.csv", csv);
  int failures = 0;
  for (const auto& r : report.rows) {
    const bool ok = std::abs(r.mean) <= 4 * r.stderr_mean;
    failures += !ok;
    log << "n=" << r.n << " variance " << r.variance << " mean " << r.mean << (ok ? "" : "  [mean not consistent with 0]")
        << "\n";
  }
  return failures ? kExitFailure : kExitOk;
}

int cmd_verify(const ExperimentConfig& cfg, std::ostream& log) {
  VerifyOptions opt;
  opt.tolerance_scale = cfg.tolerance_scale;
  opt.suites = cfg.suites;
  opt.seed = cfg.seed;
  const auto results = run_verify(opt);
  int passed = 0;
  const SuiteResult* first_bad = nullptr;
  for (const auto& r : results) {
    log << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks - r.failures << "/" << r.checks << ")";
    if (!r.passed()) log << ": " << r.first_violation;
    log << "\n";
    if (r.passed()) ++passed;
    else if (!first_bad) first_bad = &r;
  }
  log << passed << "/" << results.size() << " suites passed\n";
  if (first_bad) {
    log << "first violated invariant: " << first_bad->name << ": " << first_bad->first_violation << "\n";
    return kExitFailure;
  }
  return kExitOk;
}

}  // namespace vhd
