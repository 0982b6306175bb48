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

#include "vhd/cost.hpp"

#include <numbers>
#include <stdexcept>

#include "vhd/random.hpp"

namespace vhd {

namespace {

constexpr double kShift = std::numbers::pi / 2;

// e[b] = <w_b| sigma |w_b> for every column w_b of W.
Vec column_expectations(const PauliString& s, const OperatorXcd& w) {
  const Eigen::Index d = w.rows();
  Vec out(w.cols());
  for (Eigen::Index b = 0; b < w.cols(); ++b) {
    Complex<double> acc{};
    for (Eigen::Index r = 0; r < d; ++r) {
      const auto flipped = static_cast<Eigen::Index>(static_cast<Bits>(r) ^ s.x());
      acc += std::conj(w(flipped, b)) * s.amplitude<double>(static_cast<Bits>(r)) * w(r, b);
    }
    out(b) = acc.real();
  }
  return out;
}

// z[b][k] = (-1)^{k.b} / d
Eigen::MatrixXd sign_matrix(const DiagonalPauliSum& diag) {
  const std::int64_t d = dimension_for(diag.num_qubits());
  Eigen::MatrixXd out(d, static_cast<Eigen::Index>(diag.size()));
  for (std::int64_t b = 0; b < d; ++b) {
    for (std::size_t k = 0; k < diag.size(); ++k) {
      out(b, static_cast<Eigen::Index>(k)) = z_sign(diag.strings()[k], static_cast<Bits>(b));
    }
  }
  return out / static_cast<double>(d);
}

Vec coefficients(const PauliSum& h) {
  Vec out(static_cast<Eigen::Index>(h.size()));
  for (std::size_t i = 0; i < h.size(); ++i) out(static_cast<Eigen::Index>(i)) = h.terms()[i].coefficient;
  return out;
}

CTermTable table_with_signs(const PauliSum& h, const Eigen::MatrixXd& signs, const OperatorXcd& w) {
  Eigen::MatrixXd e(static_cast<Eigen::Index>(h.size()), w.cols());
  for (std::size_t i = 0; i < h.size(); ++i) {
    e.row(static_cast<Eigen::Index>(i)) = column_expectations(h.terms()[i].string, w).transpose();
  }
  return e * signs;
}

std::uint64_t stream_for_shift(int gate, bool plus) {
  return 1 + 2 * static_cast<std::uint64_t>(gate) + (plus ? 0 : 1);
}

}  // namespace

std::string_view shot_mode_name(ShotMode mode) { return mode == ShotMode::Exact ? "exact" : "sampled"; }

ShotMode parse_shot_mode(std::string_view name) {
  if (name == "exact") return ShotMode::Exact;
  if (name == "sampled") return ShotMode::Sampled;
  throw std::invalid_argument("unknown shot mode '" + std::string(name) + "'");
}

void ShotConfig::validate() const {
  if (mode == ShotMode::Sampled && shots == 0) throw std::invalid_argument("sampled mode needs shots >= 1");
}

void require_compatible(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a) {
  if (h.num_qubits() != diag.num_qubits() || h.num_qubits() != a.num_qubits()) {
    throw DimensionError("Hamiltonian, diagonal and ansatz act on different qubit counts");
  }
}

CTermTable c_term_table(const PauliSum& h, const DiagonalPauliSum& diag, const OperatorXcd& w) {
  if (h.num_qubits() != diag.num_qubits() || w.rows() != dimension_for(h.num_qubits())) {
    throw DimensionError("c_term_table: inconsistent dimensions");
  }
  return table_with_signs(h, sign_matrix(diag), w);
}

double c_term_exact(const PauliString& sigma, const LayeredAnsatz& a, const Vec& theta, Bits k) {
  if (sigma.num_qubits() != a.num_qubits()) throw DimensionError("c_term_exact: qubit count mismatch");
  const OperatorXcd w = ansatz_unitary(a, theta);
  const Eigen::Index d = w.rows();
  Complex<double> acc{};
  for (Eigen::Index b = 0; b < d; ++b) {
    Complex<double> e{};
    for (Eigen::Index r = 0; r < d; ++r) {
      const auto flipped = static_cast<Eigen::Index>(static_cast<Bits>(r) ^ sigma.x());
      e += std::conj(w(flipped, b)) * sigma.amplitude<double>(static_cast<Bits>(r)) * w(r, b);
    }
    acc += double(z_sign(k, static_cast<Bits>(b))) * e;
  }
  acc /= static_cast<double>(d);
  if (std::abs(acc.imag()) > kDefaultTolerances.imaginary_residue) {
    throw std::logic_error("c_term_exact: trace has a non-negligible imaginary part");
  }
  return acc.real();
}

double c_term_sampled(double exact, const ShotConfig& cfg, std::uint64_t stream, std::uint64_t term) {
  if (cfg.shots == 0) throw std::invalid_argument("c_term_sampled: shots must be >= 1");
  const double p0 = std::clamp((1.0 + exact) / 2.0, 0.0, 1.0);
  Engine rng = make_engine({cfg.seed, stream, term});
  std::binomial_distribution<std::uint64_t> draw(cfg.shots, p0);
  const double successes = static_cast<double>(draw(rng));
  return 2.0 * successes / static_cast<double>(cfg.shots) - 1.0;
}

double c_term_sampled(const PauliString& sigma, const LayeredAnsatz& a, const Vec& theta, Bits k,
                      const ShotConfig& cfg) {
  if (cfg.mode != ShotMode::Sampled) throw std::invalid_argument("c_term_sampled: mode must be sampled");
  return c_term_sampled(c_term_exact(sigma, a, theta, k), cfg);
}

CTermTable realize_c_terms(const CTermTable& exact, const ShotConfig& cfg, std::uint64_t stream) {
  cfg.validate();
  if (cfg.mode == ShotMode::Exact) return exact;
  CTermTable out(exact.rows(), exact.cols());
  for (Eigen::Index r = 0; r < exact.rows(); ++r) {
    for (Eigen::Index c = 0; c < exact.cols(); ++c) {
      out(r, c) = c_term_sampled(exact(r, c), cfg, stream, static_cast<std::uint64_t>(r * exact.cols() + c));
    }
  }
  return out;
}

double weighted_overlap(const PauliSum& h, const Vec& gammas, const CTermTable& c) {
  return coefficients(h).dot(c * gammas);
}

CostReport cost_from_terms(const PauliSum& h, const DiagonalPauliSum& diag, CTermTable c) {
  CostReport r;
  r.normalization = h.coefficient_norm_sq() + diag.gammas().squaredNorm();
  r.c_vhd = r.normalization - 2.0 * weighted_overlap(h, diag.gammas(), c);
  r.c_vhd_normalized = r.normalization > 0 ? r.c_vhd / (2.0 * r.normalization) : 0.0;
  r.c_terms = std::move(c);
  return r;
}

CostReport cost_vhd(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
                    const Vec& theta, const ShotConfig& cfg) {
  require_compatible(h, diag, a);
  cfg.validate();
  return cost_from_terms(h, diag, realize_c_terms(c_term_table(h, diag, ansatz_unitary(a, theta)), cfg, 0));
}

double cost_vhd_dense(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
                      const Vec& theta) {
  require_compatible(h, diag, a);
  const OperatorXcd w = ansatz_unitary(a, theta);
  const OperatorXcd rotated = w * diag.diagonal().cast<Complex<double>>().asDiagonal() * w.adjoint();
  return (to_matrix(h) - rotated).squaredNorm() / static_cast<double>(w.rows());
}

Vec grad_gamma_from_terms(const PauliSum& h, const Vec& gammas, const CTermTable& c) {
  return 2.0 * gammas - 2.0 * beta_coefficients(h, c);
}

Vec grad_gamma(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
               const Vec& theta, const ShotConfig& cfg) {
  return grad_gamma_from_terms(h, diag.gammas(), cost_vhd(h, diag, a, theta, cfg).c_terms);
}

namespace {

Vec grad_theta_impl(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
                    const Vec& theta, const ShotConfig& cfg) {
  Vec grad = Vec::Zero(a.num_params());
  if (diag.gammas().isZero(0.0)) return grad;
  const AnsatzPrefixes<double> prefixes(a, theta);
  const Eigen::MatrixXd signs = sign_matrix(diag);
  for (int i = 0; i < a.num_params(); ++i) {
    const auto terms = [&](bool plus) {
      const OperatorXcd w = prefixes.shifted(i, plus ? kShift : -kShift);
      return realize_c_terms(table_with_signs(h, signs, w), cfg, stream_for_shift(i, plus));
    };
    const double up = weighted_overlap(h, diag.gammas(), terms(true));
    const double down = weighted_overlap(h, diag.gammas(), terms(false));
    // d/dtheta of -2 sum h gamma c, with dc = (c(+) - c(-)) / 2
    grad(a.gates()[static_cast<std::size_t>(i)].param_index) = -(up - down);
  }
  return grad;
}

}  // namespace

Vec grad_theta(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
               const Vec& theta, const ShotConfig& cfg) {
  require_compatible(h, diag, a);
  require_param_count(a, theta);
  cfg.validate();
  return grad_theta_impl(h, diag, a, theta, cfg);
}

CostEvaluation evaluate_vhd(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
                            const Vec& theta, const ShotConfig& cfg) {
  CostEvaluation out;
  out.report = cost_vhd(h, diag, a, theta, cfg);
  out.grad_gamma = grad_gamma_from_terms(h, diag.gammas(), out.report.c_terms);
  out.grad_theta = grad_theta_impl(h, diag, a, theta, cfg);
  return out;
}

Vec beta_coefficients(const PauliSum& h, const CTermTable& c) {
  if (static_cast<std::size_t>(c.rows()) != h.size()) throw DimensionError("beta_coefficients: table mismatch");
  return c.transpose() * coefficients(h);
}

Vec beta_coefficients(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
                      const Vec& theta) {
  require_compatible(h, diag, a);
  return beta_coefficients(h, c_term_table(h, diag, ansatz_unitary(a, theta)));
}

}  // namespace vhd
