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

#include "vhd/descent.hpp"

#include <stdexcept>

namespace vhd {

std::string_view update_rule_name(UpdateRule rule) {
  return rule == UpdateRule::Adam ? "adam" : "gd";
}

UpdateRule parse_update_rule(std::string_view name) {
  if (name == "gd") return UpdateRule::GradientDescent;
  if (name == "adam") return UpdateRule::Adam;
  throw std::invalid_argument("unknown update rule '" + std::string(name) + "'");
}

std::string_view phase_name(Phase phase) { return phase == Phase::Vff ? "vff" : "vhd"; }

Stepper::Stepper(const StepConfig& cfg, Eigen::Index size)
    : cfg_(cfg), m_(Vec::Zero(size)), v_(Vec::Zero(size)) {
  if (!(cfg.learning_rate > 0)) throw std::invalid_argument("learning rate must be positive");
}

void Stepper::step(Vec& x, const Vec& grad) {
  if (grad.size() != x.size() || x.size() != m_.size()) throw DimensionError("Stepper: size mismatch");
  if (cfg_.rule == UpdateRule::GradientDescent) {
    x -= cfg_.learning_rate * grad;
    return;
  }
  ++t_;
  m_ = cfg_.beta1 * m_ + (1 - cfg_.beta1) * grad;
  v_ = cfg_.beta2 * v_ + (1 - cfg_.beta2) * grad.cwiseAbs2();
  const double c1 = 1 - std::pow(cfg_.beta1, t_);
  const double c2 = 1 - std::pow(cfg_.beta2, t_);
  x.array() -= cfg_.learning_rate * (m_.array() / c1) / ((v_.array() / c2).sqrt() + cfg_.epsilon);
}

void OptTrace::append(const OptTrace& other) {
  const int offset = records.empty() ? 0 : records.back().iteration;
  for (auto r : other.records) {
    r.iteration += offset;
    records.push_back(r);
  }
  for (auto c : other.checkpoints) {
    c.iteration += offset;
    checkpoints.push_back(std::move(c));
  }
  terminated = other.terminated;
  iterations += other.iterations;
}

}  // namespace vhd
