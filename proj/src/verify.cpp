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

#include "vhd/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "vhd/cost.hpp"
#include "vhd/fast_forward.hpp"
#include "vhd/optimizer.hpp"
#include "vhd/random.hpp"
#include "vhd/sampling.hpp"
#include "vhd/variance_scan.hpp"
#include "vhd/vff.hpp"

namespace vhd {

namespace {

class Checker {
 public:
  Checker(SuiteResult& out, double scale) : out_(out), scale_(scale) {}

  // Passes when err <= tol (scaled).
  void within(double err, double tol, const std::string& what) { record(err <= tol * scale_, what, err); }
  // Passes when lhs <= rhs + slack (scaled).
  void at_most(double lhs, double rhs, double slack, const std::string& what) {
    record(lhs <= rhs + slack * scale_, what, lhs - rhs);
  }
  void require(bool ok, const std::string& what) { record(ok, what, std::nan("")); }
  double scale() const { return scale_; }

 private:
  void record(bool ok, const std::string& what, double value) {
    ++out_.checks;
    if (ok) return;
    if (out_.failures++ == 0) {
      std::ostringstream os;
      os << what;
      if (!std::isnan(value)) os << " (value " << value << ")";
      out_.first_violation = os.str();
    }
  }
  SuiteResult& out_;
  double scale_;
};

using SuiteFn = std::function<void(Checker&, Engine&)>;

int pick(Engine& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
double pick_real(Engine& rng, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }

DiagonalPauliSum random_diagonal(int n, Engine& rng) {
  return DiagonalPauliSum::weight_one(n).with_gammas(random_uniform(n, -1.5, 1.5, rng));
}

// Hamiltonian exactly diagonalized by (a, theta, diag) plus a small random
// perturbation of size eps.
PauliSum nearly_diagonal(const LayeredAnsatz& a, const Vec& theta, const DiagonalPauliSum& diag, double eps,
                         Engine& rng) {
  const OperatorXcd w = ansatz_unitary(a, theta);
  const OperatorXcd m = w * diag.diagonal().cast<Complex<double>>().asDiagonal() * w.adjoint();
  PauliSum h = pauli_decompose(m);
  if (eps > 0) h = h + random_pauli_sum(a.num_qubits(), 4, rng).scaled(eps);
  return h;
}

void suite_pauli_orthogonality(Checker& c, Engine& rng) {
  for (int i = 0; i < 200; ++i) {
    const int n = pick(rng, 1, 5);
    const PauliString a = random_pauli_string(n, rng);
    const PauliString b = i % 4 == 0 ? a : random_pauli_string(n, rng);
    const double d = static_cast<double>(dimension_for(n));
    const Complex<double> t = (to_matrix(a) * to_matrix(b)).trace() / d;
    const double expected = a == b ? 1.0 : 0.0;
    c.within(std::abs(t - expected), 1e-12, "Tr(AB)/d is 1 for equal strings and 0 otherwise");
    c.require(a.is_identity() || std::abs(to_matrix(a).trace()) <= 1e-12 * c.scale(), "non-identity string is traceless");
  }
}

void suite_hs_norm(Checker& c, Engine& rng) {
  for (int i = 0; i < 50; ++i) {
    const PauliSum h = random_pauli_sum(pick(rng, 1, 5), 10, rng);
    const OperatorXcd m = to_matrix(h);
    const double dense = (m.adjoint() * m).trace().real();
    c.within(std::abs(hs_norm_sq(h) - dense) / std::max(dense, 1e-300), 1e-10, "hs_norm_sq matches Tr(M^dag M)");
  }
}

void suite_sum_linearity(Checker& c, Engine& rng) {
  for (int i = 0; i < 50; ++i) {
    const int n = pick(rng, 1, 4);
    const PauliSum h1 = random_pauli_sum(n, 6, rng), h2 = random_pauli_sum(n, 6, rng);
    const double a = pick_real(rng, -2, 2), b = pick_real(rng, -2, 2);
    const OperatorXcd lhs = to_matrix(h1.scaled(a) + h2.scaled(b));
    const OperatorXcd rhs = a * to_matrix(h1) + b * to_matrix(h2);
    c.within((lhs - rhs).cwiseAbs().maxCoeff(), 1e-12, "sum_to_matrix is linear");
  }
}

void suite_eigh(Checker& c, Engine& rng) {
  for (int i = 0; i < 50; ++i) {
    const OperatorXcd m = random_hermitian<double>(dimension_for(pick(rng, 1, 5)), rng);
    const auto e = eigh(m);
    const OperatorXcd back = e.eigenvectors * e.eigenvalues.cast<Complex<double>>().asDiagonal() * e.eigenvectors.adjoint();
    c.within((back - m).norm() / m.norm(), 1e-9, "eigendecomposition reconstructs the input");
    c.require(std::is_sorted(e.eigenvalues.begin(), e.eigenvalues.end()), "eigenvalues ascend");
  }
}

void suite_time_evolution_bound(Checker& c, Engine& rng) {
  for (int i = 0; i < 100; ++i) {
    const std::int64_t d = dimension_for(pick(rng, 1, 3));
    const OperatorXcd a = random_hermitian<double>(d, rng), b = random_hermitian<double>(d, rng);
    const double t = pick_real(rng, 1e-3, 5.0);
    const double lhs = (expm_i(a, -t) - expm_i(b, -t)).norm();
    c.at_most(lhs, t * (a - b).norm(), 1e-9, "||e^{itA} - e^{itB}|| <= t ||A - B||");
  }
}

void suite_power_bound(Checker& c, Engine& rng) {
  for (int i = 0; i < 100; ++i) {
    const std::int64_t d = dimension_for(pick(rng, 1, 3));
    const OperatorXcd u = haar_random_unitary<double>(d, rng), v = haar_random_unitary<double>(d, rng);
    const double base = (u - v).norm();
    OperatorXcd un = u, vn = v;
    for (int n = 2; n <= 10; ++n) {
      un = un * u;
      vn = vn * v;
      c.at_most((un - vn).norm(), n * base, 1e-9, "||U^N - V^N|| <= N ||U - V||");
    }
  }
}

void suite_min_phase(Checker& c, Engine& rng) {
  for (int i = 0; i < 100; ++i) {
    const std::int64_t d = dimension_for(pick(rng, 1, 3));
    const OperatorXcd u = haar_random_unitary<double>(d, rng), v = haar_random_unitary<double>(d, rng);
    const double dmin = min_phase_hs_distance(u, v);
    c.at_most(dmin, (u - v).norm(), 1e-12, "phase-minimised distance <= plain distance");
    // Distance through the average fidelity.
    const double f = avg_gate_fidelity(u, v);
    const double dd = static_cast<double>(d);
    const double r = std::max(0.0, 1.0 - (dd + 1) / dd * (1.0 - f));
    const double via_f = std::sqrt(2 * dd) * std::sqrt(std::max(0.0, 1.0 - std::sqrt(r)));
    c.within(std::abs(dmin - via_f), 1e-9, "distance equals its average-fidelity form");
  }
}

void suite_avg_fidelity_mc(Checker& c, Engine& rng) {
  for (int n : {1, 2}) {
    const std::int64_t d = dimension_for(n);
    const OperatorXcd u = haar_random_unitary<double>(d, rng), v = haar_random_unitary<double>(d, rng);
    const OperatorXcd m = v.adjoint() * u;
    constexpr int kStates = 10000;
    double sum = 0, sum_sq = 0;
    for (int s = 0; s < kStates; ++s) {
      const StateVectorXcd psi = haar_random_state<double>(d, rng);
      const double f = std::norm(psi.dot(m * psi));
      sum += f;
      sum_sq += f * f;
    }
    const double mean = sum / kStates;
    const double se = std::sqrt((sum_sq / kStates - mean * mean) / (kStates - 1));
    c.within(std::abs(mean - avg_gate_fidelity(u, v)), 3 * se, "Monte-Carlo average fidelity within 3 SE of closed form");
  }
}

void suite_ansatz_unitarity(Checker& c, Engine& rng) {
  for (int i = 0; i < 100; ++i) {
    const int n = pick(rng, 2, 5);
    const LayeredAnsatz a = LayeredAnsatz::build(n, pick(rng, 1, 3));
    const OperatorXcd w = ansatz_unitary(a, random_angles(a.num_params(), rng));
    c.within((w.adjoint() * w - identity<double>(w.rows())).norm(), 1e-9, "ansatz unitary");
  }
}

void suite_exp_diagonal(Checker& c, Engine& rng) {
  for (int i = 0; i < 50; ++i) {
    const int n = pick(rng, 1, 4);
    std::vector<Bits> strings;
    for (Bits k = 1; k < (Bits{1} << n) && strings.size() < DiagonalPauliSum::term_budget(n); ++k) {
      if (pick(rng, 0, 1)) strings.push_back(k);
    }
    if (strings.empty()) strings.push_back(1);
    const DiagonalPauliSum diag(n, strings, random_uniform(static_cast<Eigen::Index>(strings.size()), -2, 2, rng));
    const double t = pick_real(rng, -5, 5);
    const OperatorXcd dense = expm_i(to_matrix(diag.to_pauli_sum()), t);
    c.within((exp_diagonal(diag, t) - dense).cwiseAbs().maxCoeff(), 1e-10, "exp_diagonal matches dense exponential");
  }
}

void suite_statevector(Checker& c, Engine& rng) {
  for (int i = 0; i < 50; ++i) {
    const LayeredAnsatz a = LayeredAnsatz::build(pick(rng, 2, 4), pick(rng, 1, 2));
    const Vec theta = random_angles(a.num_params(), rng);
    const StateVectorXcd psi = haar_random_state<double>(a.dim(), rng);
    const StateVectorXcd full = ansatz_unitary(a, theta) * psi;
    c.within((apply_ansatz(a, theta, psi) - full).cwiseAbs().maxCoeff(), 1e-10,
             "gate-by-gate statevector matches the full matrix");
  }
}

void suite_cost_expansion(Checker& c, Engine& rng) {
  for (int i = 0; i < 50; ++i) {
    const int n = pick(rng, 1, 4);
    const LayeredAnsatz a = small_ansatz(n);
    const PauliSum h = random_pauli_sum(n, 8, rng);
    const DiagonalPauliSum diag = random_diagonal(n, rng);
    const Vec theta = random_angles(a.num_params(), rng);
    const double dense = cost_vhd_dense(h, diag, a, theta);
    const double expanded = cost_vhd(h, diag, a, theta).c_vhd;
    c.within(std::abs(dense - expanded) / std::max(dense, 1e-300), 1e-9, "expanded cost equals dense cost");
  }
}

void suite_cost_faithful(Checker& c, Engine& rng) {
  for (int i = 0; i < 40; ++i) {
    const int n = pick(rng, 1, 3);
    const LayeredAnsatz a = small_ansatz(n);
    const DiagonalPauliSum diag = random_diagonal(n, rng);
    const Vec theta = random_angles(a.num_params(), rng);
    const bool exact = i % 2 == 0;
    const PauliSum h = exact ? nearly_diagonal(a, theta, diag, 0.0, rng) : random_pauli_sum(n, 6, rng);
    const double cost = cost_vhd(h, diag, a, theta).c_vhd;
    const OperatorXcd w = ansatz_unitary(a, theta);
    const double dist =
        (to_matrix(h) - w * diag.diagonal().cast<Complex<double>>().asDiagonal() * w.adjoint()).norm();
    c.at_most(0.0, cost, 1e-12, "cost is non-negative");
    c.require((cost <= 1e-12 * std::max(c.scale(), 1e-300)) == (dist < 1e-6), "cost vanishes exactly when H = W D W^dag");
  }
}

void suite_normalized_range(Checker& c, Engine& rng) {
  for (int i = 0; i < 200; ++i) {
    const int n = pick(rng, 1, 3);
    const LayeredAnsatz a = small_ansatz(n);
    const CostReport r = cost_vhd(random_pauli_sum(n, 6, rng), random_diagonal(n, rng), a,
                                  random_angles(a.num_params(), rng));
    c.at_most(-r.c_vhd_normalized, 0.0, 1e-12, "normalized cost >= 0");
    c.at_most(r.c_vhd_normalized, 1.0, 1e-12, "normalized cost <= 1");
    c.at_most(r.c_terms.cwiseAbs().maxCoeff(), 1.0, 1e-12, "c-terms lie in [-1, 1]");
    c.require(r.num_c_terms() == static_cast<std::size_t>(r.c_terms.rows()) * static_cast<std::size_t>(n),
              "one c-term per (Hamiltonian string, budget string) pair");
  }
}

void suite_gradients(Checker& c, Engine& rng) {
  const double h = 1e-5;
  for (int i = 0; i < 50; ++i) {
    const int n = pick(rng, 1, 3);
    const LayeredAnsatz a = small_ansatz(n);
    const PauliSum ham = random_pauli_sum(n, 6, rng);
    const DiagonalPauliSum diag = random_diagonal(n, rng);
    const Vec theta = random_angles(a.num_params(), rng);
    const Vec gt = grad_theta(ham, diag, a, theta);
    Vec fd(gt.size());
    for (Eigen::Index k = 0; k < gt.size(); ++k) {
      fd(k) = (cost_vhd(ham, diag, a, shifted_params(theta, static_cast<int>(k), h)).c_vhd -
               cost_vhd(ham, diag, a, shifted_params(theta, static_cast<int>(k), -h)).c_vhd) /
              (2 * h);
    }
    c.within((gt - fd).norm() / std::max(gt.norm(), 1e-3), 1e-6, "parameter-shift theta gradient matches finite differences");

    const Vec gg = grad_gamma(ham, diag, a, theta);
    Vec fdg(gg.size());
    for (Eigen::Index k = 0; k < gg.size(); ++k) {
      Vec up = diag.gammas(), down = diag.gammas();
      up(k) += h;
      down(k) -= h;
      fdg(k) = (cost_vhd(ham, diag.with_gammas(up), a, theta).c_vhd -
                cost_vhd(ham, diag.with_gammas(down), a, theta).c_vhd) /
               (2 * h);
    }
    c.within((gg - fdg).cwiseAbs().maxCoeff(), 1e-8, "closed-form gamma gradient matches finite differences");
  }
}

void suite_shots(Checker& c, Engine& rng) {
  ShotConfig cfg{ShotMode::Sampled, 1000000, 0};
  int inside = 0;
  for (int t = 0; t < 100; ++t) {
    cfg.seed = static_cast<std::uint64_t>(t);
    if (std::abs(c_term_sampled(0.0, cfg)) < 5e-3) ++inside;
  }
  c.require(inside >= 95, "zero c-term estimate within 5e-3 in >= 95 of 100 trials");

  cfg.shots = 10000;
  for (int i = 0; i < 10; ++i) {
    const double exact = pick_real(rng, -1, 1);
    double sum = 0;
    for (int s = 0; s < 200; ++s) {
      cfg.seed = static_cast<std::uint64_t>(1000 * i + s);
      sum += c_term_sampled(exact, cfg);
    }
    c.within(std::abs(sum / 200 - exact), 3.0 / std::sqrt(static_cast<double>(cfg.shots)),
             "sampled c-term mean within 3/sqrt(shots) of the exact value");
  }
  cfg.seed = 7;
  c.require(c_term_sampled(0.3, cfg) == c_term_sampled(0.3, cfg), "sampling is deterministic for a fixed seed");
  c.require(c_term_sampled(1.0, cfg) == 1.0, "c = 1 always samples to 1");
}

void suite_lhst(Checker& c, Engine& rng) {
  for (int i = 0; i < 100; ++i) {
    const std::int64_t d = dimension_for(pick(rng, 1, 3));
    const OperatorXcd u = haar_random_unitary<double>(d, rng), v = haar_random_unitary<double>(d, rng);
    c.within(lhst_cost(u, u), 1e-12, "LHST cost of identical unitaries is 0");
    const double phase = pick_real(rng, 0, 6.28);
    c.within(lhst_cost(u, std::polar(1.0, phase) * u), 1e-12, "LHST cost ignores a global phase");
    const double x = lhst_cost(u, v);
    c.require(x >= 0 && x <= 1, "LHST cost within [0, 1]");
  }
}

void suite_trotter(Checker& c, Engine& rng) {
  int done = 0;
  while (done < 20) {
    const int n = pick(rng, 1, 3);
    const PauliSum h = random_two_local(n, 4, rng);
    const OperatorXcd m = to_matrix(h);
    const double dt = 0.01;
    const double e1 = (expm_i(m, dt) - trotter_first_order(h, dt).unitary).norm();
    const double e2 = (expm_i(m, dt / 2) - trotter_first_order(h, dt / 2).unitary).norm();
    if (e1 < 1e-9) continue;  // commuting terms: no splitting error to compare
    ++done;
    c.within(std::abs(e1 / e2 - 4.0), 0.5, "halving dt divides the Trotter error by about 4");
    const OperatorXcd u = trotter_first_order(h, dt).unitary;
    c.within((u.adjoint() * u - identity<double>(u.rows())).norm(), 1e-9, "Trotter step unitary");
  }
}

void suite_transfer(Checker& c, Engine& rng) {
  for (int i = 0; i < 30; ++i) {
    const int n = pick(rng, 1, 3);
    const LayeredAnsatz a = small_ansatz(n);
    const PauliSum h = random_pauli_sum(n, 6, rng);
    const DiagonalPauliSum budget = DiagonalPauliSum::weight_one(n);
    const Vec theta = random_angles(a.num_params(), rng);
    const double dt = pick_real(rng, 0.1, 1.0);
    const Vec gamma = random_uniform(n, -20, 20, rng);
    const TransferResult t1 = transfer_parameters(gamma, theta, h, budget, a, dt);
    const TransferResult t2 = transfer_parameters(t1.gamma, theta, h, budget, a, dt);
    const double resid = ((t1.beta - t1.gamma) * dt / std::numbers::pi).cwiseAbs().maxCoeff();
    c.require(resid >= 0.5 || t2.alpha.isZero(), "transfer is idempotent");

    // The transferred gamma is the closest lattice point to beta.
    const double best = (t1.gamma - t1.beta).squaredNorm();
    const int combos = static_cast<int>(std::pow(5, n));
    for (int code = 0; code < combos; ++code) {
      Vec candidate = t1.gamma;
      int rest = code;
      for (int k = 0; k < n; ++k, rest /= 5) candidate(k) += (rest % 5 - 2) * std::numbers::pi / dt;
      c.at_most(best, (candidate - t1.beta).squaredNorm(), 1e-12, "transferred gamma minimises the lattice distance");
    }
  }
}

void suite_termination(Checker& c, Engine& rng) {
  for (int i = 0; i < 100; ++i) {
    const double d = static_cast<double>(dimension_for(pick(rng, 1, 6)));
    const double lo = 1 - d / (d + 1);
    const double f = pick_real(rng, lo + 1e-6, 1.0);
    const double t = pick_real(rng, 0.1, 1000);
    const double back = fidelity_lower_bound(termination_cost(f, t, d), t, d);
    c.within(std::abs(back - f), 1e-12, "fidelity bound inverts the termination cost");
    const double cost = pick_real(rng, 0, 1e-3);
    c.at_most(fidelity_lower_bound(2 * cost, t, d), fidelity_lower_bound(cost, t, d), 0, "bound non-increasing in C");
    c.at_most(fidelity_lower_bound(cost, 2 * t, d), fidelity_lower_bound(cost, t, d), 0, "bound non-increasing in T");
  }
}

void suite_fidelity_bound(Checker& c, Engine& rng) {
  for (int i = 0; i < 100; ++i) {
    const int n = 1 + i % 3;
    const LayeredAnsatz a = small_ansatz(n);
    const DiagonalPauliSum diag = random_diagonal(n, rng);
    const Vec theta = random_angles(a.num_params(), rng);
    // Alternate generic and nearly diagonalised instances so the bound is
    // exercised both loosely and tightly.
    const PauliSum h = i % 2 ? random_pauli_sum(n, 6, rng)
                             : nearly_diagonal(a, theta, diag, pick_real(rng, 1e-4, 1e-2), rng);
    const double t = pick_real(rng, 0.1, 10);
    const double cost = cost_vhd(h, diag, a, theta).c_vhd;
    const double d = static_cast<double>(a.dim());
    const double f = avg_gate_fidelity(exact_evolution(h, t), fast_forward_unitary(a, theta, diag, t));
    const double r = std::max(0.0, 1.0 - (d + 1) / d * (1.0 - f));
    const double lhs = 2.0 / (t * t) * (1.0 - std::sqrt(r));
    c.at_most(lhs, cost, 1e-9, "fidelity bound holds");
  }
}

void suite_fast_forward(Checker& c, Engine& rng) {
  for (int i = 0; i < 20; ++i) {
    const int n = pick(rng, 1, 3);
    const LayeredAnsatz a = small_ansatz(n);
    const DiagonalPauliSum diag = random_diagonal(n, rng);
    const Vec theta = random_angles(a.num_params(), rng);
    const PauliSum h = nearly_diagonal(a, theta, diag, 1e-3, rng);
    const double cost = cost_vhd(h, diag, a, theta).c_vhd;
    const double d = static_cast<double>(a.dim());
    const SweepResult s = infidelity_sweep(h, a, theta, diag, log_grid(0.1, 1000, 50));
    for (std::size_t k = 0; k < s.times.size(); ++k) {
      const double x = cost * s.times[k] * s.times[k] / 2;
      if (x > 1) continue;
      const double envelope = d / (d + 1) * (1 - (1 - x) * (1 - x));
      c.at_most(s.infidelities[k], envelope, 1e-9, "sweep infidelity within the fidelity-bound envelope");
    }
    const double t1 = pick_real(rng, 0, 10), t2 = pick_real(rng, 0, 10);
    const OperatorXcd prod = fast_forward_unitary(a, theta, diag, t1) * fast_forward_unitary(a, theta, diag, t2);
    c.within((prod - fast_forward_unitary(a, theta, diag, t1 + t2)).norm(), 1e-9, "V(T1) V(T2) = V(T1 + T2)");
    const OperatorXcd u = exact_evolution(h, t1) * exact_evolution(h, t2);
    c.within((u - exact_evolution(h, t1 + t2)).norm(), 1e-10, "U(T1) U(T2) = U(T1 + T2)");
  }
}

void suite_variance_mean(Checker& c, Engine& rng) {
  const VarianceReport r = scan_gradient_variance(xy_hamiltonian, {2, 3}, 100, log_depth_ansatz, unit_gamma_rule,
                                                  rng(), 1);
  for (const auto& row : r.rows) {
    c.within(std::abs(row.mean), 4 * row.stderr_mean, "mean partial derivative within 4 standard errors of 0");
    c.require(row.variance >= 0, "variance non-negative");
  }
}

struct Suite {
  const char* name;
  SuiteFn fn;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"pauli_orthogonality", suite_pauli_orthogonality},
      {"hs_norm", suite_hs_norm},
      {"sum_linearity", suite_sum_linearity},
      {"eigh_reconstruction", suite_eigh},
      {"time_evolution_bound", suite_time_evolution_bound},
      {"power_bound", suite_power_bound},
      {"min_phase_distance", suite_min_phase},
      {"avg_fidelity_monte_carlo", suite_avg_fidelity_mc},
      {"ansatz_unitarity", suite_ansatz_unitarity},
      {"exp_diagonal", suite_exp_diagonal},
      {"statevector_composition", suite_statevector},
      {"cost_expansion", suite_cost_expansion},
      {"cost_faithfulness", suite_cost_faithful},
      {"normalized_cost_range", suite_normalized_range},
      {"gradients", suite_gradients},
      {"shot_estimator", suite_shots},
      {"lhst_cost", suite_lhst},
      {"trotter_order", suite_trotter},
      {"parameter_transfer", suite_transfer},
      {"termination_cost", suite_termination},
      {"fidelity_bound", suite_fidelity_bound},
      {"fast_forward", suite_fast_forward},
      {"variance_zero_mean", suite_variance_mean},
  };
  return all;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  std::vector<std::string> out;
  for (const auto& s : suites()) out.emplace_back(s.name);
  return out;
}

std::vector<SuiteResult> run_verify(const VerifyOptions& opt) {
  const auto& all = suites();
  for (const auto& name : opt.suites) {
    if (std::none_of(all.begin(), all.end(), [&](const Suite& s) { return name == s.name; })) {
      throw std::invalid_argument("unknown verify suite '" + name + "'");
    }
  }
  std::vector<SuiteResult> out;
  for (std::size_t i = 0; i < all.size(); ++i) {
    const auto& s = all[i];
    if (!opt.suites.empty() && std::find(opt.suites.begin(), opt.suites.end(), s.name) == opt.suites.end()) continue;
    SuiteResult r;
    r.name = s.name;
    Checker checker(r, opt.tolerance_scale);
    Engine rng = make_engine({opt.seed, static_cast<std::uint64_t>(i)});
    s.fn(checker, rng);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace vhd
