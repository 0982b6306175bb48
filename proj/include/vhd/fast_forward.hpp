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

#include <string>
#include <vector>

#include "vhd/ansatz.hpp"
#include "vhd/pauli.hpp"

namespace vhd {

enum class SweepSource { Vff, Vhd };

std::string_view sweep_source_name(SweepSource s);

struct SweepResult {
  std::vector<double> times;
  std::vector<double> infidelities;
  SweepSource source = SweepSource::Vhd;
};

// W(theta) exp(-i D T) W(theta)^dag; circuit depth does not depend on T.
OperatorXcd fast_forward_unitary(const LayeredAnsatz& a, const Vec& theta, const DiagonalPauliSum& diag, double t);

OperatorXcd exact_evolution(const PauliSum& h, double t);

// W exp(-i dt N D) W^dag, the VFF step raised to the N-th power.
OperatorXcd vff_forward_unitary(const LayeredAnsatz& a, const Vec& theta, const DiagonalPauliSum& diag,
                                double dt, int steps);

// n points log-spaced on [lo, hi] inclusive.
std::vector<double> log_grid(double lo, double hi, int points);

// 1 - average gate fidelity between exp(-i H T) and W exp(-i D T) W^dag.
SweepResult infidelity_sweep(const PauliSum& h, const LayeredAnsatz& a, const Vec& theta,
                             const DiagonalPauliSum& diag, const std::vector<double>& times,
                             SweepSource source = SweepSource::Vhd);

// Infidelity of V_VFF^N against exp(-i H N dt) for N = 1..steps.
SweepResult vff_step_sweep(const PauliSum& h, const LayeredAnsatz& a, const Vec& theta,
                           const DiagonalPauliSum& diag, double dt, int steps);

}  // namespace vhd
