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

#include "oracles.hpp"
#include "vhd/linalg.hpp"
#include "vhd/pauli.hpp"
#include "vhd/random.hpp"

namespace vhd {
namespace {

using C = std::complex<double>;
constexpr double kPi = std::numbers::pi;

TEST(Eigh, DiagonalInput) {
  OperatorXcd m = OperatorXcd::Zero(2, 2);
  m(0, 0) = 3;
  m(1, 1) = 1;
  const auto e = eigh(m);
  EXPECT_NEAR(e.eigenvalues(0), 1, 1e-15);
  EXPECT_NEAR(e.eigenvalues(1), 3, 1e-15);
}

TEST(Eigh, PauliX) {
  const auto e = eigh(oracle::pauli_2x2('X'));
  EXPECT_NEAR(e.eigenvalues(0), -1, 1e-15);
  EXPECT_NEAR(e.eigenvalues(1), 1, 1e-15);
  StateVectorXcd minus(2), plus(2);
  minus << 1 / std::sqrt(2.0), -1 / std::sqrt(2.0);
  plus << 1 / std::sqrt(2.0), 1 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(e.eigenvectors.col(0).dot(minus)), 1, 1e-14);
  EXPECT_NEAR(std::abs(e.eigenvectors.col(1).dot(plus)), 1, 1e-14);
}

TEST(Eigh, XyChainAgainstLongDoubleJacobi) {
  const OperatorXcd h = to_matrix(xy_hamiltonian(3));
  const auto e = eigh(h);
  const auto ref = oracle::hermitian_eigenvalues(h);
  for (Eigen::Index i = 0; i < 8; ++i) EXPECT_NEAR(e.eigenvalues(i), static_cast<double>(ref[i]), 1e-12);
  EXPECT_NEAR(static_cast<double>(ref.front()), -2 * std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(static_cast<double>(ref.back()), 2 * std::sqrt(2.0), 1e-15);
}

TEST(Eigh, RejectsNonHermitianAndNonSquare) {
  OperatorXcd m = OperatorXcd::Zero(2, 2);
  m(0, 1) = 1;
  EXPECT_THROW(eigh(m), NotHermitianError);
  EXPECT_THROW(eigh(OperatorXcd(OperatorXcd::Zero(2, 3))), DimensionError);
}

TEST(Eigh, PropertyReconstructionAndJacobiAgreement) {
  Engine rng(29);
  for (int trial = 0; trial < 20; ++trial) {
    const auto d = dimension_for(1 + trial % 3);
    const OperatorXcd m = random_hermitian<double>(d, rng);
    const auto e = eigh(m);
    const OperatorXcd back = e.eigenvectors * e.eigenvalues.cast<C>().asDiagonal() * e.eigenvectors.adjoint();
    EXPECT_LT((back - m).norm(), 1e-12 * std::max(1.0, m.norm()));
    EXPECT_TRUE(is_unitary(e.eigenvectors));
    const auto ref = oracle::hermitian_eigenvalues(m);
    for (Eigen::Index i = 0; i < d; ++i) EXPECT_NEAR(e.eigenvalues(i), static_cast<double>(ref[i]), 1e-11);
  }
}

TEST(ExpmI, Examples) {
  const OperatorXcd z = oracle::pauli_2x2('Z');
  const OperatorXcd x = oracle::pauli_2x2('X');
  EXPECT_LT((expm_i(z, 0.0) - OperatorXcd::Identity(2, 2)).norm(), 1e-15);
  EXPECT_LT((expm_i(z, kPi) + OperatorXcd::Identity(2, 2)).norm(), 1e-14);
  EXPECT_LT((expm_i(x, kPi / 2) - C(0, -1) * x).norm(), 1e-14);
}

TEST(ExpmI, MatchesTaylorSeries) {
  Engine rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const OperatorXcd m = random_hermitian<double>(4, rng) * 0.3;
    const double t = 0.7;
    // Truncated series of exp(-i M t); ||M t|| is small enough for 40 terms.
    OperatorXcd term = OperatorXcd::Identity(4, 4), sum = term;
    for (int k = 1; k < 40; ++k) {
      term = term * (C(0, -t) * m) / static_cast<double>(k);
      sum += term;
    }
    EXPECT_LT((expm_i(m, t) - sum).norm(), 1e-12);
  }
}

TEST(AvgGateFidelity, Examples) {
  Engine rng(37);
  const OperatorXcd u = haar_random_unitary<double>(4, rng);
  EXPECT_NEAR(avg_gate_fidelity(u, u), 1, 1e-14);
  EXPECT_NEAR(avg_gate_fidelity(u, OperatorXcd(std::polar(1.0, 0.9) * u)), 1, 1e-14);
  // Tr(X^dag Z) = 0 on one qubit.
  EXPECT_NEAR(avg_gate_fidelity(oracle::pauli_2x2('X'), oracle::pauli_2x2('Z')), 1.0 / 3.0, 1e-15);
}

TEST(AvgGateFidelity, PropertyMonteCarloAgreement) {
  Engine rng(41);
  for (int trial = 0; trial < 3; ++trial) {
    const OperatorXcd u = haar_random_unitary<double>(4, rng);
    const OperatorXcd v = haar_random_unitary<double>(4, rng);
    const int samples = 10000;
    double sum = 0, sum_sq = 0;
    for (int s = 0; s < samples; ++s) {
      const auto psi = haar_random_state<double>(4, rng);
      const double f = std::norm((u * psi).dot(v * psi));
      sum += f;
      sum_sq += f * f;
    }
    const double mean = sum / samples;
    const double se = std::sqrt((sum_sq / samples - mean * mean) / samples);
    EXPECT_LT(std::abs(mean - avg_gate_fidelity(u, v)), 3 * se);
  }
}

TEST(MinPhaseDistance, Examples) {
  Engine rng(43);
  const OperatorXcd a = haar_random_unitary<double>(2, rng);
  EXPECT_NEAR(min_phase_hs_distance(a, a), 0, 1e-7);
  EXPECT_NEAR(min_phase_hs_distance(a, OperatorXcd(-a)), 0, 1e-7);
  EXPECT_NEAR(min_phase_hs_distance(oracle::pauli_2x2('X'), oracle::pauli_2x2('Z')), 2, 1e-14);
}

TEST(MinPhaseDistance, PropertyBelowPlainDistanceAndMatchesScan) {
  Engine rng(47);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = dimension_for(1 + trial % 3);
    const OperatorXcd a = haar_random_unitary<double>(d, rng);
    const OperatorXcd b = haar_random_unitary<double>(d, rng);
    const double md = min_phase_hs_distance(a, b);
    EXPECT_LE(md, (a - b).norm() + 1e-12);
    if (trial < 10) {
      double best = 1e300;
      for (int k = 0; k < 20000; ++k) best = std::min(best, (a - std::polar(1.0, 2 * kPi * k / 20000) * b).norm());
      EXPECT_NEAR(md, best, 1e-3);
    }
  }
}

TEST(PartialTrace, Examples) {
  const int keep0[] = {0};
  OperatorXcd zero = OperatorXcd::Zero(4, 4);
  zero(0, 0) = 1;
  OperatorXcd expect0 = OperatorXcd::Zero(2, 2);
  expect0(0, 0) = 1;
  EXPECT_LT((partial_trace(zero, keep0) - expect0).norm(), 1e-15);

  StateVectorXcd bell = StateVectorXcd::Zero(4);
  bell(0) = bell(3) = 1 / std::sqrt(2.0);
  const OperatorXcd rho = bell * bell.adjoint();
  EXPECT_LT((partial_trace(rho, keep0) - OperatorXcd::Identity(2, 2) / 2.0).norm(), 1e-15);

  Engine rng(53);
  const auto p1 = haar_random_state<double>(2, rng);
  const auto p2 = haar_random_state<double>(2, rng);
  const OperatorXcd r1 = p1 * p1.adjoint(), r2 = 0.5 * (p2 * p2.adjoint());
  // Qubit 0 is the least significant factor.
  const OperatorXcd prod = oracle::kron(r2, r1);
  EXPECT_LT((partial_trace(prod, keep0) - r1 * r2.trace()).norm(), 1e-14);
  const int both[] = {1, 0};
  EXPECT_LT((partial_trace(prod, both) - prod).norm(), 1e-15);
  const int bad[] = {2};
  EXPECT_THROW(partial_trace(prod, bad), std::out_of_range);
}

TEST(UnitaryDistanceBounds, PropertyLinearTimeEvolution) {
  Engine rng(59);
  std::uniform_real_distribution<double> tdist(1e-3, 5.0);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = dimension_for(1 + trial % 3);
    const OperatorXcd a = random_hermitian<double>(d, rng);
    const OperatorXcd b = a + 0.1 * random_hermitian<double>(d, rng);
    const double t = tdist(rng);
    // exp(itA) = expm_i(A, -t)
    const double lhs = (expm_i(a, -t) - expm_i(b, -t)).norm();
    EXPECT_LE(lhs, t * (a - b).norm() + 1e-9);
  }
}

TEST(UnitaryDistanceBounds, PropertyPowerBound) {
  Engine rng(61);
  for (int trial = 0; trial < 100; ++trial) {
    const auto d = dimension_for(1 + trial % 3);
    const OperatorXcd u = haar_random_unitary<double>(d, rng);
    const OperatorXcd v = expm_i(random_hermitian<double>(d, rng), 0.05) * u;
    OperatorXcd un = u, vn = v;
    for (int n = 2; n <= 10; ++n) {
      un = un * u;
      vn = vn * v;
      EXPECT_LE((un - vn).norm(), n * (u - v).norm() + 1e-9);
    }
  }
}

TEST(HaarRandom, UnitaryAndNormalized) {
  Engine rng(67);
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_TRUE(is_unitary(haar_random_unitary<double>(8, rng)));
    EXPECT_NEAR(haar_random_state<double>(8, rng).norm(), 1, 1e-14);
  }
}

TEST(Dimensions, PowerOfTwo) {
  EXPECT_EQ(qubits_for(8), 3);
  EXPECT_THROW(qubits_for(6), DimensionError);
  EXPECT_THROW(require_same_shape(OperatorXcd(OperatorXcd::Identity(2, 2)),
                                  OperatorXcd(OperatorXcd::Identity(4, 4)), "x"),
               DimensionError);
}

}  // namespace
}  // namespace vhd
