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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "vhd/cost.hpp"
#include "vhd/fast_forward.hpp"
#include "vhd/optimizer.hpp"
#include "vhd/random.hpp"
#include "vhd/sampling.hpp"
#include "vhd/vff.hpp"

namespace vhd {
namespace {

constexpr double kPi = std::numbers::pi;

TEST(FastForward, TrivialCases) {
  Engine rng(241);
  const auto a = build_layered_ansatz(2, 1);
  const Vec theta = random_angles(a.num_params(), rng);
  const auto diag = DiagonalPauliSum(2, {1, 2}, random_uniform(2, -1, 1, rng));
  const OperatorXcd id = OperatorXcd::Identity(4, 4);
  EXPECT_LT((fast_forward_unitary(a, theta, diag, 0.0) - id).norm(), 1e-13);
  const auto zero = diag.with_gammas(Vec::Zero(2));
  for (double t : {0.5, 7.0, 300.0}) EXPECT_LT((fast_forward_unitary(a, theta, zero, t) - id).norm(), 1e-13);
  EXPECT_LT((vff_forward_unitary(a, theta, diag, 0.25, 0) - id).norm(), 1e-13);
  EXPECT_LT((vff_forward_unitary(a, theta, diag, 0.25, 1) - vff_unitary(a, theta, diag, 0.25)).norm(), 1e-13);
  const OperatorXcd v = vff_unitary(a, theta, diag, 0.25);
  EXPECT_LT((vff_forward_unitary(a, theta, diag, 0.25, 3) - v * v * v).norm(), 1e-12);
  EXPECT_THROW(vff_forward_unitary(a, theta, diag, 0.25, -1), std::invalid_argument);
}

TEST(ExactEvolution, Examples) {
  const auto h = xy_hamiltonian(2);
  EXPECT_LT((exact_evolution(h, 0.0) - OperatorXcd::Identity(4, 4)).norm(), 1e-14);
  const PauliSum z(1, {{1.0, PauliString::from_word("Z")}});
  EXPECT_LT((exact_evolution(z, kPi) + OperatorXcd::Identity(2, 2)).norm(), 1e-14);
}

TEST(LogGrid, Endpoints) {
  const auto g = log_grid(0.1, 1000, 50);
  ASSERT_EQ(g.size(), 50u);
  EXPECT_DOUBLE_EQ(g.front(), 0.1);
  EXPECT_DOUBLE_EQ(g.back(), 1000);
  for (std::size_t i = 1; i < g.size(); ++i) EXPECT_NEAR(g[i] / g[i - 1], std::pow(1e4, 1.0 / 49), 1e-12);
  EXPECT_THROW(log_grid(0, 1, 3), std::invalid_argument);
}

TEST(InfidelitySweep, PerfectSingleQubit) {
  const PauliSum x(1, {{1.0, PauliString::from_word("X")}});
  const auto a = LayeredAnsatz::single_qubit_euler();
  Vec theta(3), gamma(1);
  theta << 0, kPi / 2, kPi / 2;
  gamma << 1;
  const auto diag = DiagonalPauliSum::weight_one(1).with_gammas(gamma);
  const auto s = infidelity_sweep(x, a, theta, diag, log_grid(0.1, 1000, 50));
  for (double inf : s.infidelities) EXPECT_LT(inf, 1e-12);
  const auto zero = infidelity_sweep(x, a, theta, diag, {0.0});
  ASSERT_EQ(zero.infidelities.size(), 1u);
  EXPECT_LT(zero.infidelities[0], 1e-15);
  EXPECT_THROW(infidelity_sweep(x, a, theta, diag, {}), std::invalid_argument);
  EXPECT_THROW(infidelity_sweep(x, a, theta, diag, {1.0, 0.5}), std::invalid_argument);
}

TEST(InfidelitySweep, PropertyBoundConsistencyAndPhaseInvariance) {
  Engine rng(251);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const auto a = small_ansatz(n, 1);
    const auto budget = DiagonalPauliSum::weight_one(n);
    const Vec theta0 = random_angles(a.num_params(), rng);
    const Vec gamma0 = random_uniform(n, -1, 1, rng);
    const OperatorXcd w0 = ansatz_unitary(a, theta0);
    const auto h = pauli_decompose(w0 * to_matrix(budget.with_gammas(gamma0).to_pauli_sum()) * w0.adjoint());
    const Vec theta = theta0 + 1e-3 * random_uniform(a.num_params(), -1, 1, rng);
    const auto diag = budget.with_gammas(gamma0);
    const double c = cost_vhd(h, diag, a, theta).c_vhd;
    const double d = static_cast<double>(a.dim());
    const auto times = log_grid(0.1, 100, 20);
    const auto s = infidelity_sweep(h, a, theta, diag, times);
    for (std::size_t i = 0; i < times.size(); ++i) {
      const double t = times[i];
      EXPECT_LE(s.infidelities[i], 1 - fidelity_lower_bound(c, t, d) + 1e-9);
      // Global phase on W leaves the simulation unitary unchanged.
      const OperatorXcd w = std::polar(1.0, 0.7) * ansatz_unitary(a, theta);
      const OperatorXcd v = w * exp_diagonal(diag, t) * w.adjoint();
      EXPECT_NEAR(1 - avg_gate_fidelity(exact_evolution(h, t), v), s.infidelities[i], 1e-12);
    }
  }
}

TEST(VffStepSweep, MatchesIntegerTimes) {
  Engine rng(257);
  const auto h = xy_hamiltonian(2);
  const auto a = build_layered_ansatz(2, 1);
  const Vec theta = random_angles(a.num_params(), rng);
  const auto diag = DiagonalPauliSum::weight_one(2).with_gammas(random_uniform(2, -1, 1, rng));
  const auto steps = vff_step_sweep(h, a, theta, diag, 0.25, 4);
  ASSERT_EQ(steps.times.size(), 4u);
  EXPECT_EQ(steps.source, SweepSource::Vff);
  for (int n = 1; n <= 4; ++n) {
    const double t = 0.25 * n;
    const double ref = 1 - avg_gate_fidelity(exact_evolution(h, t), vff_forward_unitary(a, theta, diag, 0.25, n));
    EXPECT_NEAR(steps.infidelities[static_cast<std::size_t>(n - 1)], ref, 1e-12);
  }
}

}  // namespace
}  // namespace vhd
