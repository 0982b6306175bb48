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

#include "vhd/fast_forward.hpp"

#include <cmath>
#include <stdexcept>

namespace vhd {

std::string_view sweep_source_name(SweepSource s) { return s == SweepSource::Vff ? "vff" : "vhd"; }

OperatorXcd fast_forward_unitary(const LayeredAnsatz& a, const Vec& theta, const DiagonalPauliSum& diag,
                                 double t) {
  if (diag.num_qubits() != a.num_qubits()) throw DimensionError("fast_forward_unitary: qubit count mismatch");
  const OperatorXcd w = ansatz_unitary(a, theta);
  return w * exp_diagonal_phases<double>(diag, t).asDiagonal() * w.adjoint();
}

OperatorXcd exact_evolution(const PauliSum& h, double t) { return expm_i(to_matrix(h), t); }

OperatorXcd vff_forward_unitary(const LayeredAnsatz& a, const Vec& theta, const DiagonalPauliSum& diag,
                                double dt, int steps) {
  if (steps < 0) throw std::invalid_argument("vff_forward_unitary: step count must be >= 0");
  return fast_forward_unitary(a, theta, diag, dt * steps);
}

std::vector<double> log_grid(double lo, double hi, int points) {
  if (points < 1 || !(lo > 0) || !(hi >= lo)) throw std::invalid_argument("log_grid: invalid range");
  std::vector<double> out;
  if (points == 1) return {lo};
  const double a = std::log10(lo), b = std::log10(hi);
  for (int i = 0; i < points; ++i) out.push_back(std::pow(10.0, a + (b - a) * i / (points - 1)));
  return out;
}

SweepResult infidelity_sweep(const PauliSum& h, const LayeredAnsatz& a, const Vec& theta,
                             const DiagonalPauliSum& diag, const std::vector<double>& times,
                             SweepSource source) {
  if (times.empty()) throw std::invalid_argument("infidelity_sweep: empty time grid");
  for (std::size_t i = 1; i < times.size(); ++i) {
    if (!(times[i] > times[i - 1])) throw std::invalid_argument("infidelity_sweep: grid must be increasing");
  }
  if (h.num_qubits() != a.num_qubits()) throw DimensionError("infidelity_sweep: qubit count mismatch");
  const HermitianEigen<double> eig = eigh(to_matrix(h));
  const OperatorXcd w = ansatz_unitary(a, theta);
  SweepResult out;
  out.source = source;
  for (double t : times) {
    const OperatorXcd u = expm_i(eig, t);
    const OperatorXcd v = w * exp_diagonal_phases<double>(diag, t).asDiagonal() * w.adjoint();
    out.times.push_back(t);
    out.infidelities.push_back(std::clamp(1.0 - avg_gate_fidelity(u, v), 0.0, 1.0));
  }
  return out;
}

SweepResult vff_step_sweep(const PauliSum& h, const LayeredAnsatz& a, const Vec& theta,
                           const DiagonalPauliSum& diag, double dt, int steps) {
  if (steps < 1 || !(dt > 0)) throw std::invalid_argument("vff_step_sweep: need dt > 0 and steps >= 1");
  std::vector<double> times;
  for (int k = 1; k <= steps; ++k) times.push_back(dt * k);
  return infidelity_sweep(h, a, theta, diag, times, SweepSource::Vff);
}

}  // namespace vhd
