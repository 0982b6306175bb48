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

#include "vhd/vff.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace vhd {

namespace {

constexpr double kShift = std::numbers::pi / 2;

StateVectorXcd conj_phases(const DiagonalPauliSum& diag, double dt) {
  return exp_diagonal_phases<double>(diag, dt).conjugate();
}

}  // namespace

TrotterStep trotter_first_order(const PauliSum& h, double dt) {
  if (!(dt > 0)) throw std::invalid_argument("trotter_first_order: dt must be positive");
  TrotterStep step;
  step.dt = dt;
  const std::int64_t d = dimension_for(h.num_qubits());
  step.unitary = identity<double>(d);
  for (const auto& term : h.terms()) {
    // sigma^2 = 1, so exp(-i a sigma) = cos(a) - i sin(a) sigma exactly.
    const double angle = term.coefficient * dt;
    const OperatorXcd factor = std::cos(angle) * identity<double>(d) -
                               Complex<double>(0, std::sin(angle)) * to_matrix(term.string);
    step.unitary = step.unitary * factor;
    step.ordering.push_back(term.string);
  }
  return step;
}

double entanglement_fidelity(const OperatorXcd& m, int j) {
  if (m.rows() != m.cols()) throw DimensionError("entanglement_fidelity: operator is not square");
  const int n = qubits_for(m.rows());
  if (j < 0 || j >= n) throw std::out_of_range("entanglement_fidelity: qubit index out of range");
  const Eigen::Index bit = Eigen::Index{1} << j;
  const Eigen::Index d = m.rows();
  double acc = 0;
  for (Eigen::Index c = 0; c < d; ++c) {
    if (c & bit) continue;
    for (Eigen::Index r = 0; r < d; ++r) {
      if (r & bit) continue;
      acc += std::norm(m(r, c) + m(r | bit, c | bit));
    }
  }
  return acc / (2.0 * static_cast<double>(d));
}

double entanglement_fidelity(const OperatorXcd& u, const OperatorXcd& v, int j) {
  require_same_shape(u, v, "entanglement_fidelity");
  return entanglement_fidelity(OperatorXcd(u * v.adjoint()), j);
}

double lhst_cost_of_product(const OperatorXcd& m) {
  const int n = qubits_for(m.rows());
  double total = 0;
  for (int j = 0; j < n; ++j) total += entanglement_fidelity(m, j);
  return std::clamp(1.0 - total / n, 0.0, 1.0);
}

double lhst_cost(const OperatorXcd& u, const OperatorXcd& v) {
  require_same_shape(u, v, "lhst_cost");
  return lhst_cost_of_product(u * v.adjoint());
}

OperatorXcd vff_unitary(const LayeredAnsatz& a, const Vec& theta, const DiagonalPauliSum& diag, double dt) {
  if (diag.num_qubits() != a.num_qubits()) throw DimensionError("vff_unitary: qubit count mismatch");
  const OperatorXcd w = ansatz_unitary(a, theta);
  return w * exp_diagonal_phases<double>(diag, dt).asDiagonal() * w.adjoint();
}

Eigen::VectorXi branch_offsets(const Vec& beta, const Vec& gamma, double dt) {
  if (beta.size() != gamma.size()) throw DimensionError("branch_offsets: size mismatch");
  if (!(dt > 0)) throw std::invalid_argument("branch_offsets: dt must be positive");
  Eigen::VectorXi alpha(beta.size());
  for (Eigen::Index k = 0; k < beta.size(); ++k) {
    alpha(k) = static_cast<int>(std::round((beta(k) - gamma(k)) * dt / std::numbers::pi));
  }
  return alpha;
}

TransferResult transfer_parameters(const Vec& gamma_vff, const Vec& theta_vff, const PauliSum& h,
                                   const DiagonalPauliSum& budget, const LayeredAnsatz& a, double dt) {
  if (static_cast<std::size_t>(gamma_vff.size()) != budget.size()) {
    throw DimensionError("transfer_parameters: one gamma per budget string required");
  }
  TransferResult out;
  out.theta = theta_vff;
  out.beta = beta_coefficients(h, budget, a, theta_vff);
  out.alpha = branch_offsets(out.beta, gamma_vff, dt);
  out.gamma = gamma_vff + (std::numbers::pi / dt) * out.alpha.cast<double>();
  return out;
}

VffGradient vff_gradient(const OperatorXcd& target, const LayeredAnsatz& a, const Vec& theta,
                         const DiagonalPauliSum& diag, double dt) {
  if (target.rows() != a.dim()) throw DimensionError("vff_gradient: target has the wrong dimension");
  const AnsatzPrefixes<double> prefixes(a, theta);
  const OperatorXcd& w = prefixes.unitary();
  const StateVectorXcd g_conj = conj_phases(diag, dt);
  const OperatorXcd uw = target * w;
  const OperatorXcd left = uw * g_conj.asDiagonal();     // U W G^dag
  const OperatorXcd right = g_conj.asDiagonal() * w.adjoint();  // G^dag W^dag

  VffGradient out;
  out.cost = lhst_cost_of_product(left * w.adjoint());
  out.grad_theta = Vec::Zero(a.num_params());
  for (int i = 0; i < a.num_params(); ++i) {
    double acc = 0;
    for (const double s : {kShift, -kShift}) {
      const OperatorXcd ws = prefixes.shifted(i, s);
      // Shift in the W factor of V, then in the W^dag factor.
      const double occurrences =
          lhst_cost_of_product(left * ws.adjoint()) + lhst_cost_of_product(target * ws * right);
      acc += (s > 0 ? 0.5 : -0.5) * occurrences;
    }
    out.grad_theta(a.gates()[static_cast<std::size_t>(i)].param_index) = acc;
  }

  out.grad_gamma = Vec::Zero(static_cast<Eigen::Index>(diag.size()));
  for (Eigen::Index k = 0; k < out.grad_gamma.size(); ++k) {
    const auto at = [&](double delta) {
      Vec gam = diag.gammas();
      gam(k) += delta;
      const StateVectorXcd phases = conj_phases(diag.with_gammas(gam), dt);
      return lhst_cost_of_product(uw * phases.asDiagonal() * w.adjoint());
    };
    out.grad_gamma(k) = (at(kVffGammaStep) - at(-kVffGammaStep)) / (2 * kVffGammaStep);
  }
  return out;
}

VffResult vff_optimize(const PauliSum& h, double dt, const LayeredAnsatz& a, const DiagonalPauliSum& start,
                       const Vec& theta0, const VffOptions& opt) {
  if (opt.iterations < 1) throw std::invalid_argument("vff_optimize: iterations must be >= 1");
  require_compatible(h, start, a);
  require_param_count(a, theta0);
  const OperatorXcd target = trotter_first_order(h, dt).unitary;
  const Eigen::Index np = a.num_params();
  const Eigen::Index ng = static_cast<Eigen::Index>(start.size());

  Vec x(np + ng);
  x << theta0, start.gammas();
  Stepper stepper(opt.step, x.size());
  VffResult out;
  out.cost = std::numeric_limits<double>::infinity();

  for (int it = 1; it <= opt.iterations; ++it) {
    const Vec theta = x.head(np);
    const DiagonalPauliSum diag = start.with_gammas(x.tail(ng));
    const VffGradient g = vff_gradient(target, a, theta, diag, dt);

    TraceRecord rec;
    rec.iteration = it;
    rec.phase = Phase::Vff;
    rec.c_vff = g.cost;
    rec.grad_norm_theta = g.grad_theta.norm();
    rec.grad_norm_gamma = g.grad_gamma.norm();
    if (opt.record_vhd_cost) {
      const TransferResult t = transfer_parameters(diag.gammas(), theta, h, start, a, dt);
      const CostReport r = cost_vhd(h, start.with_gammas(t.gamma), a, theta);
      rec.c_vhd = r.c_vhd;
      rec.c_vhd_normalized = r.c_vhd_normalized;
    } else {
      rec.c_vhd = rec.c_vhd_normalized = std::numeric_limits<double>::quiet_NaN();
    }
    if (g.cost < out.cost) {
      out.cost = g.cost;
      out.theta = theta;
      out.gamma = diag.gammas();
    }
    rec.best_cost = out.cost;
    out.trace.records.push_back(rec);
    if (is_checkpoint(it, opt.iterations, opt.checkpoint_interval)) {
      out.trace.checkpoints.push_back({it, Phase::Vff, theta, diag.gammas()});
    }
    out.trace.iterations = it;
    if (it == opt.iterations) break;
    Vec grad(x.size());
    grad << g.grad_theta, g.grad_gamma;
    stepper.step(x, grad);
  }
  return out;
}

}  // namespace vhd
