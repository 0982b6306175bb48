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

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "vhd/linalg.hpp"

namespace vhd {

enum class UpdateRule { GradientDescent, Adam };

std::string_view update_rule_name(UpdateRule rule);
UpdateRule parse_update_rule(std::string_view name);

struct StepConfig {
  UpdateRule rule = UpdateRule::GradientDescent;
  double learning_rate = 0.05;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-12;
};

// Fixed-step gradient descent or Adam on a flat parameter vector.
class Stepper {
 public:
  Stepper(const StepConfig& cfg, Eigen::Index size);
  void step(Vec& x, const Vec& grad);

 private:
  StepConfig cfg_;
  Vec m_, v_;
  int t_ = 0;
};

enum class Phase { Vff, Vhd };

std::string_view phase_name(Phase phase);

struct TraceRecord {
  int iteration = 0;
  Phase phase = Phase::Vhd;
  // VHD cost at the current (VHD) or transferred (VFF) parameters.
  double c_vhd = 0;
  double c_vhd_normalized = 0;
  double grad_norm_theta = 0;
  double grad_norm_gamma = 0;
  // LHST cost; NaN during the VHD phase.
  double c_vff = std::numeric_limits<double>::quiet_NaN();
  // Lowest value of the phase objective seen so far.
  double best_cost = 0;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
};

struct Checkpoint {
  int iteration = 0;
  Phase phase = Phase::Vhd;
  Vec theta;
  Vec gamma;
};

struct OptTrace {
  std::vector<TraceRecord> records;
  std::vector<Checkpoint> checkpoints;
  bool terminated = false;  // stopped by the termination threshold
  int iterations = 0;

  // Appends `other`, renumbering its iterations after the last one here.
  void append(const OptTrace& other);
};

// Index set {1, interval, 2*interval, ..., last} used for snapshots.
inline bool is_checkpoint(int iteration, int last, int interval) {
  return iteration == 1 || iteration == last || (interval > 0 && iteration % interval == 0);
}

}  // namespace vhd
