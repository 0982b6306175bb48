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
#include <cstring>
#include <numbers>

#include "oracles.hpp"
#include "vhd/cost.hpp"
#include "vhd/random.hpp"
#include "vhd/sampling.hpp"

namespace vhd {
namespace {

constexpr double kPi = std::numbers::pi;

PauliSum single(const char* word, double c = 1.0) {
  return PauliSum(static_cast<int>(std::strlen(word)), {{c, PauliString::from_word(word)}});
}

DiagonalPauliSum z_budget(int n, Vec gammas) {
  return DiagonalPauliSum(n, DiagonalPauliSum::weight_one_strings(n), std::move(gammas));
}

Vec vec(std::initializer_list<double> v) {
  Vec out(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double x : v) out(i++) = x;
  return out;
}

// Dense c-term Tr(sigma W Z^k W^dag) / d from Kronecker-built matrices.
double dense_c_term(const std::string& sigma, const LayeredAnsatz& a, const Vec& theta, Bits k) {
  const OperatorXcd w = oracle::ansatz_matrix(a, theta);
  std::string zk(static_cast<std::size_t>(a.num_qubits()), 'I');
  for (int q = 0; q < a.num_qubits(); ++q)
    if (k >> q & 1) zk[static_cast<std::size_t>(q)] = 'Z';
  const auto tr = (oracle::word_matrix(sigma) * w * oracle::word_matrix(zk) * w.adjoint()).trace();
  return tr.real() / static_cast<double>(a.dim());
}

// Parameters of the Euler circuit with W Z W^dag = X.
const Vec kZtoX = vec({0, kPi / 2, kPi / 2});

TEST(CTerm, IdentityCircuit) {
  const auto a = build_layered_ansatz(2, 1);
  const Vec zero = Vec::Zero(a.num_params());
  EXPECT_NEAR(c_term_exact(PauliString(2, 0, 0b11), a, zero, 0b11), 1, 1e-15);
  EXPECT_NEAR(c_term_exact(PauliString(2, 0, 0b01), a, zero, 0b01), 1, 1e-15);
  EXPECT_NEAR(c_term_exact(PauliString(2, 0b01, 0), a, zero, 0b01), 0, 1e-15);
}

TEST(CTerm, RotatedSingleQubitMatchesDense) {
  const LayeredAnsatz a(1, 0, {{GateKind::RX, {0, 0}, 0}});
  const Vec theta = vec({kPi / 2});
  const double c = c_term_exact(PauliString::from_word("Y"), a, theta, 1);
  EXPECT_NEAR(std::abs(c), 1, 1e-14);
  EXPECT_NEAR(c, dense_c_term("Y", a, theta, 1), 1e-14);
  EXPECT_NEAR(c, -1, 1e-14);
}

TEST(CTerm, PropertyTableMatchesDense) {
  Engine rng(101);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const auto a = small_ansatz(n, 1);
    const auto h = random_pauli_sum(n, 5, rng);
    const auto diag = z_budget(n, random_uniform(n, -1, 1, rng));
    const Vec theta = random_angles(a.num_params(), rng);
    const auto table = c_term_table(h, diag, ansatz_unitary(a, theta));
    ASSERT_EQ(table.rows(), static_cast<Eigen::Index>(h.size()));
    ASSERT_EQ(table.cols(), static_cast<Eigen::Index>(diag.size()));
    for (std::size_t s = 0; s < h.size(); ++s) {
      for (std::size_t k = 0; k < diag.size(); ++k) {
        const double ref = dense_c_term(h.terms()[s].string.word(), a, theta, diag.strings()[k]);
        EXPECT_NEAR(table(static_cast<Eigen::Index>(s), static_cast<Eigen::Index>(k)), ref, 1e-12);
        EXPECT_NEAR(c_term_exact(h.terms()[s].string, a, theta, diag.strings()[k]), ref, 1e-12);
      }
    }
  }
}

TEST(ShotSampling, CertainOutcome) {
  const ShotConfig cfg{ShotMode::Sampled, 1000, 5};
  for (std::uint64_t s = 0; s < 10; ++s) EXPECT_EQ(c_term_sampled(1.0, cfg, s, s), 1.0);
  EXPECT_EQ(c_term_sampled(-1.0, cfg), -1.0);
}

TEST(ShotSampling, ZeroTermConcentration) {
  int inside = 0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const ShotConfig cfg{ShotMode::Sampled, 1000000, seed};
    if (std::abs(c_term_sampled(0.0, cfg)) < 5e-3) ++inside;
  }
  EXPECT_GE(inside, 95);
}

TEST(ShotSampling, Deterministic) {
  const ShotConfig cfg{ShotMode::Sampled, 4096, 77};
  EXPECT_EQ(c_term_sampled(0.3, cfg, 2, 9), c_term_sampled(0.3, cfg, 2, 9));
  EXPECT_NE(c_term_sampled(0.3, cfg, 2, 9), c_term_sampled(0.3, cfg, 3, 9));
  const auto a = build_layered_ansatz(2, 1);
  Engine rng(5);
  const Vec theta = random_angles(a.num_params(), rng);
  const auto h = xy_hamiltonian(2);
  const auto diag = z_budget(2, vec({0.4, -0.7}));
  const auto r1 = cost_vhd(h, diag, a, theta, cfg);
  const auto r2 = cost_vhd(h, diag, a, theta, cfg);
  EXPECT_EQ(r1.c_vhd, r2.c_vhd);
  EXPECT_EQ(grad_theta(h, diag, a, theta, cfg), grad_theta(h, diag, a, theta, cfg));
}

TEST(ShotSampling, PropertyUnbiased) {
  Engine rng(103);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = small_ansatz(2, 1);
    const Vec theta = random_angles(a.num_params(), rng);
    const auto sigma = random_pauli_string(2, rng);
    const double exact = c_term_exact(sigma, a, theta, 0b10);
    const std::uint64_t shots = 2000;
    double sum = 0;
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      sum += c_term_sampled(sigma, a, theta, 0b10, {ShotMode::Sampled, shots, seed});
    }
    EXPECT_LT(std::abs(sum / 200 - exact), 3 / std::sqrt(double(shots)));
  }
}

TEST(ShotSampling, Errors) {
  EXPECT_THROW((ShotConfig{ShotMode::Sampled, 0, 0}.validate()), std::invalid_argument);
  const auto a = LayeredAnsatz::single_qubit_euler();
  EXPECT_THROW(c_term_sampled(PauliString::from_word("X"), a, Vec(Vec::Zero(3)), 1, ShotConfig{}),
               std::invalid_argument);
  EXPECT_EQ(parse_shot_mode("sampled"), ShotMode::Sampled);
  EXPECT_THROW(parse_shot_mode("noisy"), std::invalid_argument);
}

TEST(CostVhd, Examples) {
  const auto a = LayeredAnsatz::single_qubit_euler();
  const Vec zero = Vec::Zero(3);
  EXPECT_NEAR(cost_vhd(single("Z"), z_budget(1, vec({1})), a, zero).c_vhd, 0, 1e-15);
  EXPECT_NEAR(cost_vhd(single("X"), z_budget(1, vec({1})), a, zero).c_vhd, 2, 1e-15);
  const auto solved = cost_vhd(single("X"), z_budget(1, vec({1})), a, kZtoX);
  EXPECT_NEAR(solved.c_vhd, 0, 1e-14);
  EXPECT_NEAR(cost_vhd_dense(single("X"), z_budget(1, vec({1})), a, kZtoX), 0, 1e-14);
}

TEST(CostVhd, PropertyExpansionMatchesDense) {
  Engine rng(107);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 4;
    const auto a = small_ansatz(n, 1);
    const auto h = random_pauli_sum(n, 6, rng);
    const auto diag = z_budget(n, random_uniform(n, -2, 2, rng));
    const Vec theta = random_angles(a.num_params(), rng);
    const double expansion = cost_vhd(h, diag, a, theta).c_vhd;
    // Independent dense evaluation from Kronecker products.
    const OperatorXcd w = oracle::ansatz_matrix(a, theta);
    const OperatorXcd dmat = oracle::sum_matrix(diag.to_pauli_sum());
    const double dense = (oracle::sum_matrix(h) - w * dmat * w.adjoint()).squaredNorm() / double(a.dim());
    EXPECT_NEAR(expansion, dense, 1e-9 * std::max(1.0, dense));
    EXPECT_NEAR(cost_vhd_dense(h, diag, a, theta), dense, 1e-9 * std::max(1.0, dense));
  }
}

TEST(CostVhd, PropertyFaithfulNonNegativeAndNormalized) {
  Engine rng(109);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    const auto a = small_ansatz(n, 1);
    const auto h = random_pauli_sum(n, 5, rng);
    const auto diag = z_budget(n, random_uniform(n, -2, 2, rng));
    const auto r = cost_vhd(h, diag, a, random_angles(a.num_params(), rng));
    EXPECT_GE(r.c_vhd, -1e-12);
    EXPECT_GE(r.c_vhd_normalized, -1e-12);
    EXPECT_LE(r.c_vhd_normalized, 1 + 1e-12);
    EXPECT_EQ(r.num_c_terms(), h.size() * diag.size());
  }
  // Zero exactly when the dense operators coincide.
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 3;
    const auto a = small_ansatz(n, 1);
    const Vec theta = random_angles(a.num_params(), rng);
    const auto diag = z_budget(n, random_uniform(n, -2, 2, rng));
    const OperatorXcd w = ansatz_unitary(a, theta);
    const auto h = pauli_decompose(w * to_matrix(diag.to_pauli_sum()) * w.adjoint());
    const double c = cost_vhd(h, diag, a, theta).c_vhd;
    EXPECT_LT(std::abs(c), 1e-12);
    EXPECT_GT(cost_vhd(h, diag, a, shifted_params(theta, a.num_params() - 1, 0.3)).c_vhd, 1e-6);
  }
}

TEST(GradTheta, StationaryAtGlobalMinimum) {
  const auto a = LayeredAnsatz::single_qubit_euler();
  const auto diag = z_budget(1, vec({1}));
  EXPECT_LT(grad_theta(single("X"), diag, a, kZtoX).norm(), 1e-8);
  EXPECT_LT(grad_gamma(single("X"), diag, a, kZtoX).norm(), 1e-8);
}

TEST(GradTheta, ZeroGammaGivesZeroGradient) {
  Engine rng(113);
  const auto a = build_layered_ansatz(2, 1);
  const Vec g = grad_theta(xy_hamiltonian(2), z_budget(2, Vec::Zero(2)), a, random_angles(a.num_params(), rng));
  EXPECT_EQ(g.norm(), 0.0);
}

TEST(GradGamma, Examples) {
  const auto a = build_layered_ansatz(2, 1);
  Engine rng(127);
  const Vec theta = random_angles(a.num_params(), rng);
  const Vec g = grad_gamma(PauliSum(2), z_budget(2, Vec::Ones(2)), a, theta);
  EXPECT_NEAR(g(0), 2, 1e-15);
  EXPECT_NEAR(g(1), 2, 1e-15);
}

TEST(Gradients, PropertyMatchFiniteDifferences) {
  Engine rng(131);
  const double h = 1e-5;
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 1 + trial % 3;
    const auto a = small_ansatz(n, 1);
    const auto ham = random_pauli_sum(n, 5, rng);
    const auto diag = z_budget(n, random_uniform(n, -1, 1, rng));
    const Vec theta = random_angles(a.num_params(), rng);
    const auto eval = evaluate_vhd(ham, diag, a, theta);
    EXPECT_EQ(eval.grad_theta, grad_theta(ham, diag, a, theta));
    for (int p = 0; p < a.num_params(); ++p) {
      const double fd = (cost_vhd(ham, diag, a, shifted_params(theta, p, h)).c_vhd -
                         cost_vhd(ham, diag, a, shifted_params(theta, p, -h)).c_vhd) / (2 * h);
      EXPECT_LE(std::abs(eval.grad_theta(p) - fd), 1e-6 * std::max(1.0, std::abs(fd)));
    }
    for (Eigen::Index k = 0; k < diag.gammas().size(); ++k) {
      const Vec up = shifted_params(diag.gammas(), static_cast<int>(k), h);
      const Vec dn = shifted_params(diag.gammas(), static_cast<int>(k), -h);
      const double fd = (cost_vhd(ham, diag.with_gammas(up), a, theta).c_vhd -
                         cost_vhd(ham, diag.with_gammas(dn), a, theta).c_vhd) / (2 * h);
      EXPECT_NEAR(eval.grad_gamma(k), fd, 1e-8);
    }
  }
}

TEST(Beta, Examples) {
  const auto a = LayeredAnsatz::single_qubit_euler();
  const Vec zero = Vec::Zero(3);
  const auto diag = z_budget(1, vec({0.2}));
  EXPECT_NEAR(beta_coefficients(single("Z"), diag, a, zero)(0), 1, 1e-15);
  EXPECT_NEAR(beta_coefficients(single("X"), diag, a, zero)(0), 0, 1e-15);
  // beta minimizes the cost over gamma at fixed theta.
  Engine rng(137);
  const auto b = build_layered_ansatz(3, 1);
  const Vec theta = random_angles(b.num_params(), rng);
  const auto h = xy_hamiltonian(3);
  const Vec beta = beta_coefficients(h, z_budget(3, Vec::Zero(3)), b, theta);
  const auto best = z_budget(3, beta);
  EXPECT_LT(grad_gamma(h, best, b, theta).norm(), 1e-12);
}

TEST(CostVhd, Mismatch) {
  EXPECT_THROW(cost_vhd(xy_hamiltonian(3), z_budget(2, Vec::Zero(2)), build_layered_ansatz(2, 1),
                        Vec(Vec::Zero(13))),
               DimensionError);
}

}  // namespace
}  // namespace vhd
