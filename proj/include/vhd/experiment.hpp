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

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vhd/cost.hpp"
#include "vhd/descent.hpp"
#include "vhd/io.hpp"
#include "vhd/optimizer.hpp"

namespace vhd {

enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitUsage = 2 };

struct ExperimentConfig {
  std::string model = "xy";  // "xy" or a path to a PauliSum text file
  int qubits = 3;
  int layers = 0;  // 0 selects m = n
  double dt = 0.25;
  int iterations = 320;
  int restarts = 20;
  ShotMode mode = ShotMode::Exact;
  std::uint64_t shots = 1000000000;
  UpdateRule update_rule = UpdateRule::GradientDescent;
  double learning_rate = 0.05;
  double vff_learning_rate = 0.05;
  bool nested_gamma = false;
  double f_term = 0.999;
  double t_target = 1000;
  double t_min = 0.1;
  double t_max = 1000;
  int t_points = 50;
  std::vector<double> times;  // explicit grid; overrides t_min/t_max/t_points
  int checkpoint_interval = 32;
  int threads = 0;
  std::filesystem::path out = ".";
  std::uint64_t seed = 1;
  // fastforward inputs; empty paths resolve inside `out`
  std::filesystem::path ansatz_file;
  std::filesystem::path params_vhd;
  std::filesystem::path params_vff;
  // variance-scan
  int n_min = 2;
  int n_max = 7;
  int samples = 200;
  std::string gamma_rule = "unit";  // unit | zero
  // verify
  std::vector<std::string> suites;
  double tolerance_scale = 1.0;

  std::uint64_t config_hash = 0;

  // Unknown keys and out-of-range values raise std::invalid_argument.
  static ExperimentConfig from(const KeyValueConfig& kv);

  int ansatz_layers() const { return layers > 0 ? layers : qubits; }
  OptConfig opt_config() const;
  OutputMeta meta() const { return {config_hash, seed}; }
  std::vector<double> time_grid() const;
  std::filesystem::path resolve(const std::filesystem::path& p, const char* fallback) const {
    return p.empty() ? out / fallback : p;
  }
};

PauliSum load_hamiltonian(const ExperimentConfig& cfg);

int cmd_diagonalize(const ExperimentConfig& cfg, std::ostream& log);
int cmd_fastforward(const ExperimentConfig& cfg, std::ostream& log);
int cmd_variance_scan(const ExperimentConfig& cfg, std::ostream& log);
int cmd_verify(const ExperimentConfig& cfg, std::ostream& log);

}  // namespace vhd
