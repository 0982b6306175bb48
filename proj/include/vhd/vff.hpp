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

#include <functional>
#include <vector>

#include "vhd/ansatz.hpp"
#include "vhd/cost.hpp"
#include "vhd/descent.hpp"
#include "vhd/pauli.hpp"

namespace vhd {

struct TrotterStep {
  double dt = 0;
  std::vector<PauliString> ordering;  // factor order, leftmost first
  OperatorXcd unitary;
};

// prod_s exp(-i h_s sigma_s dt) over the canonical term order of H, the first
// term as the leftmost factor.
TrotterStep trotter_first_order(const PauliSum& h, double dt);

// Entanglement fidelity of the single-qubit channel induced by M = U V^dag on
// qubit j (0-based), other qubits traced out: ||Tr_j M||_HS^2 / (2 d).
double entanglement_fidelity(const OperatorXcd& m, int j);
double entanglement_fidelity(const OperatorXcd& u, const OperatorXcd& v, int j);

// 1 - mean_j F_e^{(j)}(U V^dag).
double lhst_cost(const OperatorXcd& u, const OperatorXcd& v);
double lhst_cost_of_product(const OperatorXcd& m);

// W exp(-i dt D(gamma)) W^dag
OperatorXcd vff_unitary(const LayeredAnsatz& a, const Vec& theta, const DiagonalPauliSum& diag, double dt);

struct TransferResult {
  Vec theta;
  Vec gamma;
  Vec beta;
  Eigen::VectorXi alpha;
};

// alpha = round((beta - gamma) dt / pi), halves rounded away from zero.
Eigen::VectorXi branch_offsets(const Vec& beta, const Vec& gamma, double dt);

TransferResult transfer_parameters(const Vec& gamma_vff, const Vec& theta_vff, const PauliSum& h,
                                   const DiagonalPauliSum& budget, const LayeredAnsatz& a, double dt);

struct VffGradient {
  double cost = 0;
  Vec grad_theta;
  Vec grad_gamma;
};

inline constexpr double kVffGammaStep = 1e-4;

// Parameter-shift for theta, applied separately to the W and W^dag
// occurrences; central differences with step kVffGammaStep for gamma.
VffGradient vff_gradient(const OperatorXcd& target, const LayeredAnsatz& a, const Vec& theta,
                         const DiagonalPauliSum& diag, double dt);

struct VffOptions {
  int iterations = 320;
  StepConfig step;
  int checkpoint_interval = 0;
  // Record the VHD cost at the transferred parameters every iteration.
  bool record_vhd_cost = true;
};

struct VffResult {
  Vec theta;
  Vec gamma;
  double cost = 0;
  OptTrace trace;
};

VffResult vff_optimize(const PauliSum& h, double dt, const LayeredAnsatz& a, const DiagonalPauliSum& start,
                       const Vec& theta0, const VffOptions& opt);

}  // namespace vhd
