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

// Brute-force reference implementations built from textbook definitions,
// independent of the library's bit-level kernels.

#include <algorithm>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vhd/ansatz.hpp"
#include "vhd/linalg.hpp"
#include "vhd/pauli.hpp"

namespace oracle {

using vhd::OperatorXcd;
using C = std::complex<double>;

inline OperatorXcd pauli_2x2(char c) {
  OperatorXcd m(2, 2);
  switch (c) {
    case 'I': m << 1, 0, 0, 1; break;
    case 'X': m << 0, 1, 1, 0; break;
    case 'Y': m << 0, C(0, -1), C(0, 1), 0; break;
    case 'Z': m << 1, 0, 0, -1; break;
    default: throw std::invalid_argument("pauli_2x2");
  }
  return m;
}

inline OperatorXcd kron(const OperatorXcd& a, const OperatorXcd& b) {
  OperatorXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Character q of the word acts on qubit q, the least significant factor.
inline OperatorXcd word_matrix(const std::string& word) {
  OperatorXcd m = OperatorXcd::Identity(1, 1);
  for (char c : word) m = kron(pauli_2x2(c), m);
  return m;
}

// One-qubit operator g placed on qubit q of n.
inline OperatorXcd embed(const OperatorXcd& g, int q, int n) {
  OperatorXcd m = OperatorXcd::Identity(1, 1);
  for (int k = 0; k < n; ++k) m = kron(k == q ? g : OperatorXcd::Identity(2, 2), m);
  return m;
}

inline OperatorXcd sum_matrix(const vhd::PauliSum& h) {
  const auto d = vhd::dimension_for(h.num_qubits());
  OperatorXcd m = OperatorXcd::Zero(d, d);
  for (const auto& t : h.terms()) m += t.coefficient * word_matrix(t.string.word());
  return m;
}

// exp(-i t G / 2) for an involutory G.
inline OperatorXcd rotation(const OperatorXcd& g, double t) {
  const auto d = g.rows();
  return std::cos(t / 2) * OperatorXcd::Identity(d, d) - C(0, std::sin(t / 2)) * g;
}

inline OperatorXcd ansatz_matrix(const vhd::LayeredAnsatz& a, const vhd::Vec& theta) {
  const int n = a.num_qubits();
  OperatorXcd w = OperatorXcd::Identity(a.dim(), a.dim());
  for (const auto& g : a.gates()) {
    OperatorXcd gen;
    switch (g.kind) {
      case vhd::GateKind::RX: gen = embed(pauli_2x2('X'), g.qubits[0], n); break;
      case vhd::GateKind::RZ: gen = embed(pauli_2x2('Z'), g.qubits[0], n); break;
      case vhd::GateKind::ZZ:
        gen = embed(pauli_2x2('Z'), g.qubits[0], n) * embed(pauli_2x2('Z'), g.qubits[1], n);
        break;
    }
    w = rotation(gen, theta(g.param_index)) * w;
  }
  return w;
}

// Cyclic Jacobi eigenvalue iteration on a real symmetric matrix in long double.
inline std::vector<long double> jacobi_eigenvalues(std::vector<std::vector<long double>> a) {
  const std::size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    long double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-36L) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (std::fabs(a[p][q]) < 1e-300L) continue;
        const long double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        const long double t = (theta >= 0 ? 1 : -1) / (std::fabs(theta) + std::sqrt(theta * theta + 1));
        const long double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const long double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const long double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<long double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

// Real symmetric embedding [[Re, -Im], [Im, Re]] of a Hermitian matrix; its
// spectrum is that of h with every eigenvalue doubled.
inline std::vector<long double> hermitian_eigenvalues(const OperatorXcd& h) {
  const std::size_t d = static_cast<std::size_t>(h.rows());
  std::vector<std::vector<long double>> a(2 * d, std::vector<long double>(2 * d));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const C z = h(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
      a[i][j] = z.real();
      a[i + d][j + d] = z.real();
      a[i][j + d] = -z.imag();
      a[i + d][j] = z.imag();
    }
  }
  auto doubled = jacobi_eigenvalues(std::move(a));
  std::vector<long double> ev;
  for (std::size_t i = 0; i < doubled.size(); i += 2) ev.push_back(doubled[i]);
  return ev;
}

// Many-body spectrum of the open XY chain sum X_j X_{j+1} + Y_j Y_{j+1}:
// free fermions with hopping 2, modes eps_k = 4 cos(k pi / (n + 1)).
inline std::vector<double> xy_spectrum(int n) {
  std::vector<double> eps;
  for (int k = 1; k <= n; ++k) eps.push_back(4 * std::cos(k * M_PI / (n + 1)));
  std::vector<double> out;
  for (unsigned occ = 0; occ < (1u << n); ++occ) {
    double e = 0;
    for (int k = 0; k < n; ++k)
      if (occ >> k & 1) e += eps[static_cast<std::size_t>(k)];
    out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Bell-pair overlap of the qubit-j channel rho -> Tr_rest[M (rho (x) 1/(d/2)) M^dag],
// evaluated by pushing the four matrix units |a><b| through the channel.
inline double channel_entanglement_fidelity(const OperatorXcd& m, int j) {
  const double rest = static_cast<double>(m.rows()) / 2;
  double f = 0;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      OperatorXcd unit = OperatorXcd::Zero(2, 2);
      unit(a, b) = 1;
      // Input rho (x) identity on the other qubits, then conjugate by M.
      OperatorXcd lift = OperatorXcd::Zero(m.rows(), m.rows());
      for (Eigen::Index r = 0; r < m.rows(); ++r)
        for (Eigen::Index c = 0; c < m.rows(); ++c) {
          const bool same_rest = (r & ~(Eigen::Index{1} << j)) == (c & ~(Eigen::Index{1} << j));
          if (same_rest) lift(r, c) = unit((r >> j) & 1, (c >> j) & 1);
        }
      const OperatorXcd in = m * lift * m.adjoint() / rest;
      const int keep[] = {j};
      const OperatorXcd out = vhd::partial_trace(in, std::span<const int>(keep, 1));
      // <Phi+| (E (x) 1)(|a><b| (x) |a><b|) |Phi+> / 2 summed over a, b.
      f += out(a, b).real() / 2;
    }
  }
  return f / 2;
}

}  // namespace oracle
