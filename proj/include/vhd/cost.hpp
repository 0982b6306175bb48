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
#include <string>

#include "vhd/ansatz.hpp"
#include "vhd/linalg.hpp"
#include "vhd/pauli.hpp"

namespace vhd {

enum class ShotMode { Exact, Sampled };

std::string_view shot_mode_name(ShotMode mode);
ShotMode parse_shot_mode(std::string_view name);

struct ShotConfig {
  ShotMode mode = ShotMode::Exact;
  std::uint64_t shots = 1;
  std::uint64_t seed = 0;

  // Throws std::invalid_argument when mode is Sampled and shots is 0.
  void validate() const;
};

// c[s][k] = Tr(sigma_s W Z^k W^dag) / d for every Hamiltonian string s (rows)
// and every budget string k (columns). N_h * N_gamma entries.
using CTermTable = Eigen::MatrixXd;

CTermTable c_term_table(const PauliSum& h, const DiagonalPauliSum& diag, const OperatorXcd& w);

double c_term_exact(const PauliString& sigma, const LayeredAnsatz& a, const Vec& theta, Bits k);

// Hadamard-test estimate of one term: P(0) = (1 + c) / 2, `shots` Bernoulli
// draws summarised by a binomial count, estimate 2 * successes / shots - 1.
// The RNG stream is derived from (cfg.seed, stream, term).
double c_term_sampled(double exact, const ShotConfig& cfg, std::uint64_t stream = 0,
                      std::uint64_t term = 0);
double c_term_sampled(const PauliString& sigma, const LayeredAnsatz& a, const Vec& theta, Bits k,
                      const ShotConfig& cfg);

// Applies c_term_sampled to every entry in fixed row-major order, term index
// = row * cols + col. Exact tables pass straight through.
CTermTable realize_c_terms(const CTermTable& exact, const ShotConfig& cfg, std::uint64_t stream);

struct CostReport {
  double c_vhd = 0;
  double c_vhd_normalized = 0;
  double normalization = 0;  // sum h^2 + sum gamma^2
  CTermTable c_terms;

  std::size_t num_c_terms() const { return static_cast<std::size_t>(c_terms.size()); }
};

// sum_s h_s sum_k gamma_k c[s][k]
double weighted_overlap(const PauliSum& h, const Vec& gammas, const CTermTable& c);

CostReport cost_from_terms(const PauliSum& h, const DiagonalPauliSum& diag, CTermTable c);

CostReport cost_vhd(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
                    const Vec& theta, const ShotConfig& cfg = {});

// ||M_H - W D W^dag||_HS^2 / d built from dense matrices.
double cost_vhd_dense(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
                      const Vec& theta);

Vec grad_theta(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
               const Vec& theta, const ShotConfig& cfg = {});
Vec grad_gamma(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
               const Vec& theta, const ShotConfig& cfg = {});
// Closed form 2 gamma - 2 beta from an existing table.
Vec grad_gamma_from_terms(const PauliSum& h, const Vec& gammas, const CTermTable& c);

struct CostEvaluation {
  CostReport report;
  Vec grad_theta;
  Vec grad_gamma;
};

// Cost and both gradients sharing one unshifted c-term table.
CostEvaluation evaluate_vhd(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
                            const Vec& theta, const ShotConfig& cfg = {});

// beta_k = sum_s h_s c[s][k]
Vec beta_coefficients(const PauliSum& h, const CTermTable& c);
Vec beta_coefficients(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
                      const Vec& theta);

void require_compatible(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a);

}  // namespace vhd
