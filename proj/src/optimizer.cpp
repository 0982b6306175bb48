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

#include "vhd/optimizer.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace vhd {

void OptConfig::validate() const {
  if (max_iterations < 1) throw std::invalid_argument("max_iterations must be >= 1");
  if (restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (!(learning_rate > 0) || !(vff_learning_rate > 0)) throw std::invalid_argument("learning rates must be positive");
  if (!(f_term > 0) || f_term > 1) throw std::invalid_argument("f_term must lie in (0, 1]");
  if (!(t_target > 0)) throw std::invalid_argument("t_target must be positive");
  shots.validate();
}

double termination_cost(double f_term, double t, double d) {
  if (!(t > 0)) throw std::invalid_argument("termination_cost: T must be positive");
  if (!(d >= 1)) throw std::invalid_argument("termination_cost: dimension must be >= 1");
  const double radicand = 1.0 - ((d + 1) / d) * (1.0 - f_term);
  if (f_term > 1 || radicand < 0) {
    throw std::domain_error("termination_cost: F_term outside (1 - d / (d + 1), 1]");
  }
  return (2.0 / (t * t)) * (1.0 - std::sqrt(radicand));
}

double fidelity_lower_bound(double cost, double t, double d) {
  if (cost < 0) throw std::invalid_argument("fidelity_lower_bound: cost must be non-negative");
  const double x = cost * t * t / 2.0;
  if (x > 1) return 0.0;
  const double r = 1.0 - x;
  return std::max(0.0, 1.0 - (d / (d + 1)) * (1.0 - r * r));
}

Start random_start(const PauliSum& h, const DiagonalPauliSum& budget, const LayeredAnsatz& a, Engine& rng) {
  std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  const double scale = h.max_abs_coefficient();
  Start s;
  s.theta.resize(a.num_params());
  for (Eigen::Index i = 0; i < s.theta.size(); ++i) s.theta(i) = angle(rng);
  s.gamma.resize(static_cast<Eigen::Index>(budget.size()));
  for (Eigen::Index k = 0; k < s.gamma.size(); ++k) s.gamma(k) = unit(rng) * scale;
  return s;
}

VhdResult vhd_optimize(const PauliSum& h, const DiagonalPauliSum& budget, const LayeredAnsatz& a,
                       const Start& start, const OptConfig& opt, std::uint64_t stream) {
  opt.validate();
  require_compatible(h, budget, a);
  require_param_count(a, start.theta);
  if (static_cast<std::size_t>(start.gamma.size()) != budget.size()) {
    throw DimensionError("vhd_optimize: one gamma per budget string required");
  }
  const double threshold = termination_cost(opt.f_term, opt.t_target, static_cast<double>(a.dim()));
  const Eigen::Index np = a.num_params();
  const Eigen::Index ng = start.gamma.size();

  Vec x(np + ng);
  x << start.theta, start.gamma;
  Stepper stepper(opt.vhd_step(), x.size());
  VhdResult out;
  double best = std::numeric_limits<double>::infinity();

  for (int it = 1; it <= opt.max_iterations; ++it) {
    ShotConfig cfg = opt.shots;
    cfg.seed = derive_seed({opt.shots.seed, opt.seed, stream, static_cast<std::uint64_t>(it)});
    const Vec theta = x.head(np);
    if (opt.nested_gamma) {
      const CostReport pre = cost_vhd(h, budget.with_gammas(x.tail(ng)), a, theta, cfg);
      x.tail(ng) = beta_coefficients(h, pre.c_terms);
    }
    const DiagonalPauliSum diag = budget.with_gammas(x.tail(ng));
    CostEvaluation e = evaluate_vhd(h, diag, a, theta, cfg);

    TraceRecord rec;
    rec.iteration = it;
    rec.phase = Phase::Vhd;
    rec.c_vhd = e.report.c_vhd;
    rec.c_vhd_normalized = e.report.c_vhd_normalized;
    rec.grad_norm_theta = e.grad_theta.norm();
    rec.grad_norm_gamma = opt.nested_gamma ? 0.0 : e.grad_gamma.norm();
    rec.shots = cfg.mode == ShotMode::Sampled ? cfg.shots : 0;
    rec.seed = cfg.mode == ShotMode::Sampled ? cfg.seed : 0;
    if (e.report.c_vhd < best) {
      best = e.report.c_vhd;
      out.theta = theta;
      out.gamma = diag.gammas();
      out.best = e.report;
    }
    rec.best_cost = best;
    out.trace.records.push_back(rec);
    out.trace.iterations = it;
    const bool stop = e.report.c_vhd <= threshold;
    if (is_checkpoint(it, opt.max_iterations, opt.checkpoint_interval) || stop) {
      out.trace.checkpoints.push_back({it, Phase::Vhd, theta, diag.gammas()});
    }
    if (stop) {
      out.trace.terminated = true;
      break;
    }
    if (it == opt.max_iterations) break;
    Vec grad(x.size());
    grad << e.grad_theta, (opt.nested_gamma ? Vec::Zero(ng) : e.grad_gamma);
    stepper.step(x, grad);
  }
  return out;
}

}  // namespace vhd
