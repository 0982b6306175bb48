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
#include <functional>
#include <vector>

#include "vhd/ansatz.hpp"
#include "vhd/pauli.hpp"

namespace vhd {

using HamiltonianBuilder = std::function<PauliSum(int)>;
using AnsatzBuilder = std::function<LayeredAnsatz(int)>;
using GammaRule = std::function<DiagonalPauliSum(int)>;

// ceil(log2 n) + 1 internal layers.
int log_depth_layers(int num_qubits);
LayeredAnsatz log_depth_ansatz(int num_qubits);

// gamma_k = 1 (or 0) on the weight-one strings.
DiagonalPauliSum unit_gamma_rule(int num_qubits);
DiagonalPauliSum zero_gamma_rule(int num_qubits);

// Parameter of the first internal-layer gate that touches the middle qubit
// ceil(n/2) - 1.
int probe_parameter(const LayeredAnsatz& a);

struct VarianceRow {
  int n = 0;
  int samples = 0;
  int mu = 0;
  double mean = 0;
  double variance = 0;         // unbiased sample variance
  double stderr_mean = 0;      // sqrt(variance / samples)
  double stderr_variance = 0;  // from the sample fourth central moment
};

struct VarianceReport {
  std::vector<VarianceRow> rows;
  std::uint64_t seed = 0;
};

// Exact parameter-shift derivative d C / d theta_mu at one point.
double partial_derivative(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
                          const Vec& theta, int mu);

VarianceReport scan_gradient_variance(const HamiltonianBuilder& family, const std::vector<int>& ns, int samples,
                                      const AnsatzBuilder& ansatz, const GammaRule& gammas, std::uint64_t seed,
                                      int threads = 0);

}  // namespace vhd
