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

#include <array>
#include <cmath>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vhd/linalg.hpp"
#include "vhd/pauli.hpp"

namespace vhd {

// RX(t) = exp(-i t X / 2), RZ(t) = exp(-i t Z / 2), ZZ(t) = exp(-i t Z(x)Z / 2).
enum class GateKind { RX, RZ, ZZ };

std::string_view gate_name(GateKind kind);
GateKind parse_gate_kind(std::string_view name);

struct GateSpec {
  GateKind kind = GateKind::RX;
  std::array<int, 2> qubits{0, 0};  // second entry used only by ZZ
  int param_index = 0;

  int arity() const { return kind == GateKind::ZZ ? 2 : 1; }
  // Hermitian generator G with exp(-i t G / 2) the gate; G^2 = 1.
  PauliString generator(int num_qubits) const;
  friend bool operator==(const GateSpec&, const GateSpec&) = default;
};

// Layered hardware-efficient circuit. Gates are listed in application order:
//   initial layer     RZ, RX on every qubit
//   internal layer    ZZ on bonds (0,1), (2,3), ... then (1,2), (3,4), ...;
//                     each ZZ followed by RX, RZ on both of its qubits
//   final layer       RX, RZ on every qubit
// Every gate owns exactly one parameter. A gate list that does not follow the
// layered structure is accepted as a plain circuit with num_layers() == 0.
class LayeredAnsatz {
 public:
  LayeredAnsatz(int num_qubits, int num_layers, std::vector<GateSpec> gates);

  static LayeredAnsatz build(int num_qubits, int num_layers);
  // RZ RX RZ on one qubit: covers SU(2) for single-qubit problems.
  static LayeredAnsatz single_qubit_euler();

  int num_qubits() const { return n_; }
  int num_layers() const { return m_; }
  int num_params() const { return static_cast<int>(gates_.size()); }
  std::int64_t dim() const { return dimension_for(n_); }
  std::span<const GateSpec> gates() const { return gates_; }
  // Index of the first gate of internal layer `layer` (0-based).
  int internal_layer_begin(int layer) const;

  // "<kind> <q0> [<q1>] <param_index>" per gate after a small preamble.
  std::string to_text() const;
  static LayeredAnsatz from_text(std::string_view text);

  friend bool operator==(const LayeredAnsatz&, const LayeredAnsatz&) = default;

 private:
  int n_;
  int m_;
  std::vector<GateSpec> gates_;
  std::vector<int> layer_begin_;
};

inline LayeredAnsatz build_layered_ansatz(int num_qubits, int num_layers) {
  return LayeredAnsatz::build(num_qubits, num_layers);
}

// Left-multiplies every column of `target` (d rows) by the gate.
template <typename Derived>
void apply_gate(const GateSpec& gate, typename Derived::Scalar::value_type angle,
                Eigen::MatrixBase<Derived>& target) {
  using C = typename Derived::Scalar;
  using R = typename C::value_type;
  const R c = std::cos(angle / 2);
  const R s = std::sin(angle / 2);
  const Eigen::Index d = target.rows();
  switch (gate.kind) {
    case GateKind::RX: {
      const Eigen::Index bit = Eigen::Index{1} << gate.qubits[0];
      const C mis{0, -s};
      for (Eigen::Index col = 0; col < target.cols(); ++col) {
        for (Eigen::Index b = 0; b < d; ++b) {
          if (b & bit) continue;
          const C a0 = target(b, col);
          const C a1 = target(b | bit, col);
          target(b, col) = c * a0 + mis * a1;
          target(b | bit, col) = mis * a0 + c * a1;
        }
      }
      break;
    }
    case GateKind::RZ:
    case GateKind::ZZ: {
      Bits mask = Bits{1} << gate.qubits[0];
      if (gate.kind == GateKind::ZZ) mask |= Bits{1} << gate.qubits[1];
      const C minus{c, -s};  // e^{-i t/2} on +1 eigenstates
      const C plus{c, s};
      for (Eigen::Index col = 0; col < target.cols(); ++col) {
        for (Eigen::Index b = 0; b < d; ++b) {
          target(b, col) *= parity(mask & static_cast<Bits>(b)) ? plus : minus;
        }
      }
      break;
    }
  }
}

template <typename Scalar>
void require_param_count(const LayeredAnsatz& a, const RealVector<Scalar>& theta) {
  if (theta.size() != a.num_params()) {
    throw DimensionError("ansatz expects " + std::to_string(a.num_params()) + " parameters, got " +
                         std::to_string(theta.size()));
  }
}

// W(theta) = G_last ... G_first.
template <typename Scalar>
Operator<Scalar> ansatz_unitary(const LayeredAnsatz& a, const RealVector<Scalar>& theta) {
  require_param_count(a, theta);
  Operator<Scalar> w = identity<Scalar>(a.dim());
  for (const auto& g : a.gates()) apply_gate(g, theta(g.param_index), w);
  return w;
}

template <typename Scalar>
StateVector<Scalar> apply_ansatz(const LayeredAnsatz& a, const RealVector<Scalar>& theta,
                                 StateVector<Scalar> psi) {
  require_param_count(a, theta);
  if (psi.size() != a.dim()) throw DimensionError("apply_ansatz: state has the wrong dimension");
  for (const auto& g : a.gates()) apply_gate(g, theta(g.param_index), psi);
  return psi;
}

// Phases exp(-i T d_b) of exp(-i D T) on each basis state.
template <typename Scalar = double>
StateVector<Scalar> exp_diagonal_phases(const DiagonalPauliSum& diag, Scalar t) {
  const Vec values = diag.diagonal();
  StateVector<Scalar> out(values.size());
  for (Eigen::Index b = 0; b < values.size(); ++b) out(b) = std::polar(Scalar(1), -t * Scalar(values(b)));
  return out;
}

template <typename Scalar = double>
Operator<Scalar> exp_diagonal(const DiagonalPauliSum& diag, Scalar t) {
  return exp_diagonal_phases<Scalar>(diag, t).asDiagonal();
}

template <typename Scalar>
RealVector<Scalar> shifted_params(const RealVector<Scalar>& theta, int index, Scalar shift) {
  if (index < 0 || index >= theta.size()) {
    throw std::out_of_range("shifted_params: index " + std::to_string(index) + " out of range");
  }
  RealVector<Scalar> out = theta;
  out(index) += shift;
  return out;
}

// Prefix products of the circuit; prefix(i) is the product of the first i
// gates, so prefix(num_params) = W. Parameter-shifted unitaries are formed as
// suffix * G_i(theta_i + s) * prefix(i) without rebuilding the whole circuit.
template <typename Scalar>
class AnsatzPrefixes {
 public:
  AnsatzPrefixes(const LayeredAnsatz& a, const RealVector<Scalar>& theta) : ansatz_(&a), theta_(theta) {
    require_param_count(a, theta);
    prefix_.reserve(a.gates().size() + 1);
    prefix_.push_back(identity<Scalar>(a.dim()));
    for (const auto& g : a.gates()) {
      Operator<Scalar> next = prefix_.back();
      apply_gate(g, theta(g.param_index), next);
      prefix_.push_back(std::move(next));
    }
    // suffix_[i] = G_last ... G_{i+1}
    suffix_.resize(a.gates().size());
    Operator<Scalar> acc = identity<Scalar>(a.dim());
    for (std::size_t i = a.gates().size(); i-- > 0;) {
      suffix_[i] = acc;
      const auto& g = a.gates()[i];
      // acc <- acc * G_i, i.e. right-multiplication: transpose trick (G_i symmetric)
      Operator<Scalar> t = acc.transpose();
      apply_gate(g, theta(g.param_index), t);
      acc = t.transpose();
    }
  }

  const Operator<Scalar>& unitary() const { return prefix_.back(); }

  // W with gate `gate_index` rotated by an extra `shift`.
  Operator<Scalar> shifted(int gate_index, Scalar shift) const {
    const auto& g = ansatz_->gates()[static_cast<std::size_t>(gate_index)];
    Operator<Scalar> mid = prefix_[static_cast<std::size_t>(gate_index)];
    apply_gate(g, theta_(g.param_index) + shift, mid);
    return suffix_[static_cast<std::size_t>(gate_index)] * mid;
  }

 private:
  const LayeredAnsatz* ansatz_;
  RealVector<Scalar> theta_;
  std::vector<Operator<Scalar>> prefix_;
  std::vector<Operator<Scalar>> suffix_;
};

// Gate index owning each parameter (one-to-one for LayeredAnsatz).
std::vector<int> gate_for_param(const LayeredAnsatz& a);

}  // namespace vhd
