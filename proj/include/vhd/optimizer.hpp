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
#include <vector>

#include "vhd/ansatz.hpp"
#include "vhd/cost.hpp"
#include "vhd/descent.hpp"
#include "vhd/pauli.hpp"
#include "vhd/random.hpp"
#include "vhd/vff.hpp"

namespace vhd {

struct OptConfig {
  UpdateRule rule = UpdateRule::GradientDescent;
  double learning_rate = 0.05;      // VHD phase
  double vff_learning_rate = 0.05;  // VFF phase
  int max_iterations = 320;         // per phase
  int restarts = 1;
  double f_term = 0.999;
  double t_target = 1000.0;
  ShotConfig shots;
  std::uint64_t seed = 0;
  // Replace gamma by its exact minimiser beta(theta) after every theta step
  // instead of updating both jointly.
  bool nested_gamma = false;
  int checkpoint_interval = 0;
  // Worker threads for restarts; 0 reads VHD_SIM_THREADS, else hardware.
  int threads = 0;

  void validate() const;
  StepConfig vhd_step() const { return {rule, learning_rate}; }
  StepConfig vff_step() const { return {rule, vff_learning_rate}; }
};

// C_term = (2 / T^2) (1 - sqrt(1 - ((d + 1) / d) (1 - F))).
double termination_cost(double f_term, double t, double d);

// Lower bound on the average fidelity at time T implied by cost C; 0 when
// C T^2 / 2 > 1.
double fidelity_lower_bound(double cost, double t, double d);

struct Start {
  Vec theta;
  Vec gamma;
};

// theta ~ U[0, 2 pi), gamma ~ U[-1, 1] * max |h|.
Start random_start(const PauliSum& h, const DiagonalPauliSum& budget, const LayeredAnsatz& a, Engine& rng);

struct VhdResult {
  Vec theta;
  Vec gamma;
  CostReport best;  // report at the returned parameters, as seen by the optimizer
  OptTrace trace;
};

VhdResult vhd_optimize(const PauliSum& h, const DiagonalPauliSum& budget, const LayeredAnsatz& a,
                       const Start& start, const OptConfig& opt, std::uint64_t stream = 0);

struct RestartResult {
  int restart = 0;
  Start initial;
  VffResult vff;
  TransferResult transfer;
  VhdResult vhd;
  CostReport exact;  // exact-mode cost at the final parameters
  OptTrace trace;    // VFF followed by VHD records
};

struct PipelineResult {
  std::vector<RestartResult> restarts;
  int best_index = 0;
  double termination_threshold = 0;
  double dt = 0;

  const RestartResult& best() const { return restarts[static_cast<std::size_t>(best_index)]; }
};

RestartResult run_restart(const PauliSum& h, const DiagonalPauliSum& budget, const LayeredAnsatz& a,
                          double dt, const OptConfig& opt, int restart);

// Restarts run in parallel; the best one has the lowest normalized VHD cost,
// ties going to the lowest index.
PipelineResult run_pipeline(const PauliSum& h, const DiagonalPauliSum& budget, const LayeredAnsatz& a,
                            double dt, const OptConfig& opt);

// Thread count from VHD_SIM_THREADS, falling back to the hardware count.
int worker_threads(int requested, int tasks);

}  // namespace vhd
