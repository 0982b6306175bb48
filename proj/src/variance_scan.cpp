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

#include "vhd/variance_scan.hpp"

#include <atomic>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <thread>

#include "vhd/cost.hpp"
#include "vhd/optimizer.hpp"
#include "vhd/random.hpp"

namespace vhd {

int log_depth_layers(int num_qubits) {
  if (num_qubits < 1) throw std::invalid_argument("log_depth_layers: qubit count must be >= 1");
  int m = 0;
  while ((1 << m) < num_qubits) ++m;
  return m + 1;
}

LayeredAnsatz log_depth_ansatz(int num_qubits) {
  return LayeredAnsatz::build(num_qubits, log_depth_layers(num_qubits));
}

DiagonalPauliSum unit_gamma_rule(int num_qubits) {
  return DiagonalPauliSum::weight_one(num_qubits).with_gammas(Vec::Ones(num_qubits));
}

DiagonalPauliSum zero_gamma_rule(int num_qubits) { return DiagonalPauliSum::weight_one(num_qubits); }

int probe_parameter(const LayeredAnsatz& a) {
  if (a.num_layers() < 1) throw std::invalid_argument("probe_parameter: ansatz has no internal layer");
  const int target = (a.num_qubits() + 1) / 2 - 1;
  const int begin = a.internal_layer_begin(0);
  const int end = a.num_layers() > 1 ? a.internal_layer_begin(1) : a.num_params() - 2 * a.num_qubits();
  for (int i = begin; i < end; ++i) {
    const auto& g = a.gates()[static_cast<std::size_t>(i)];
    for (int k = 0; k < g.arity(); ++k) {
      if (g.qubits[k] == target) return g.param_index;
    }
  }
  throw std::logic_error("probe_parameter: no internal-layer gate touches the middle qubit");
}

double partial_derivative(const PauliSum& h, const DiagonalPauliSum& diag, const LayeredAnsatz& a,
                          const Vec& theta, int mu) {
  require_compatible(h, diag, a);
  const auto overlap = [&](double s) {
    const OperatorXcd w = ansatz_unitary(a, shifted_params(theta, mu, s));
    return weighted_overlap(h, diag.gammas(), c_term_table(h, diag, w));
  };
  return -(overlap(std::numbers::pi / 2) - overlap(-std::numbers::pi / 2));
}

VarianceReport scan_gradient_variance(const HamiltonianBuilder& family, const std::vector<int>& ns, int samples,
                                      const AnsatzBuilder& ansatz, const GammaRule& gammas, std::uint64_t seed,
                                      int threads) {
  if (ns.empty()) throw std::invalid_argument("scan_gradient_variance: empty qubit range");
  if (samples < 2) throw std::invalid_argument("scan_gradient_variance: need at least 2 samples");
  VarianceReport report;
  report.seed = seed;
  for (int n : ns) {
    const PauliSum h = family(n);
    const LayeredAnsatz a = ansatz(n);
    const DiagonalPauliSum diag = gammas(n);
    const int mu = probe_parameter(a);

    std::vector<double> values(static_cast<std::size_t>(samples));
    std::atomic<int> next{0};
    const auto worker = [&] {
      for (int s = next++; s < samples; s = next++) {
        Engine rng = make_engine({seed, static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(s)});
        std::uniform_real_distribution<double> angle(0.0, 2 * std::numbers::pi);
        Vec theta(a.num_params());
        for (Eigen::Index i = 0; i < theta.size(); ++i) theta(i) = angle(rng);
        values[static_cast<std::size_t>(s)] = partial_derivative(h, diag, a, theta, mu);
      }
    };
    const int workers = worker_threads(threads, samples);
    if (workers == 1) {
      worker();
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
      for (auto& t : pool) t.join();
    }

    const Eigen::Map<const Vec> v(values.data(), samples);
    const double mean = v.mean();
    const Vec centered = v.array() - mean;
    const double m2 = centered.squaredNorm() / samples;
    const double m4 = centered.array().pow(4).sum() / samples;
    VarianceRow row;
    row.n = n;
    row.samples = samples;
    row.mu = mu;
    row.mean = mean;
    row.variance = centered.squaredNorm() / (samples - 1);
    row.stderr_mean = std::sqrt(row.variance / samples);
    const double var_of_var = (m4 - m2 * m2 * (samples - 3.0) / (samples - 1.0)) / samples;
    row.stderr_variance = std::sqrt(std::max(0.0, var_of_var));
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace vhd
