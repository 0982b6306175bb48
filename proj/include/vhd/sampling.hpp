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

#include <numbers>
#include <random>
#include <vector>

#include "vhd/ansatz.hpp"
#include "vhd/pauli.hpp"

namespace vhd {

template <typename Rng>
PauliString random_pauli_string(int num_qubits, Rng& rng) {
  const Bits mask = (Bits{1} << num_qubits) - 1;
  std::uniform_int_distribution<Bits> bits(0, mask);
  return PauliString(num_qubits, bits(rng), bits(rng));
}

template <typename Rng>
PauliSum random_pauli_sum(int num_qubits, int max_terms, Rng& rng) {
  std::uniform_int_distribution<int> count(1, max_terms);
  std::normal_distribution<double> coeff;
  std::vector<PauliTerm> terms;
  const int k = count(rng);
  for (int i = 0; i < k; ++i) terms.push_back({coeff(rng), random_pauli_string(num_qubits, rng)});
  return PauliSum(num_qubits, std::move(terms));
}

// Random single-qubit and nearest-neighbour two-qubit Pauli terms.
template <typename Rng>
PauliSum random_two_local(int num_qubits, int terms, Rng& rng) {
  std::uniform_int_distribution<int> site(0, std::max(0, num_qubits - 2));
  std::uniform_int_distribution<int> local(1, 15);
  std::normal_distribution<double> coeff;
  std::vector<PauliTerm> out;
  for (int i = 0; i < terms; ++i) {
    const int j = num_qubits == 1 ? 0 : site(rng);
    const int span = num_qubits == 1 ? 1 : 2;
    Bits x = 0, z = 0;
    int code = local(rng);
    if (span == 1) code &= 3;
    if (code == 0) code = 1;
    for (int q = 0; q < span; ++q) {
      const int c = (code >> (2 * q)) & 3;
      if (c & 1) x |= Bits{1} << (j + q);
      if (c & 2) z |= Bits{1} << (j + q);
    }
    out.push_back({coeff(rng), PauliString(num_qubits, x, z)});
  }
  return PauliSum(num_qubits, std::move(out));
}

template <typename Rng>
Vec random_angles(Eigen::Index count, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 2 * std::numbers::pi);
  Vec out(count);
  for (Eigen::Index i = 0; i < count; ++i) out(i) = u(rng);
  return out;
}

template <typename Rng>
Vec random_uniform(Eigen::Index count, double lo, double hi, Rng& rng) {
  std::uniform_real_distribution<double> u(lo, hi);
  Vec out(count);
  for (Eigen::Index i = 0; i < count; ++i) out(i) = u(rng);
  return out;
}

// Circuit for random instances: the Euler circuit on one qubit, a layered
// circuit otherwise.
inline LayeredAnsatz small_ansatz(int num_qubits, int layers = 1) {
  return num_qubits == 1 ? LayeredAnsatz::single_qubit_euler() : LayeredAnsatz::build(num_qubits, layers);
}

}  // namespace vhd
