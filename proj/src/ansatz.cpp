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

#include "vhd/ansatz.hpp"

#include <sstream>
#include <stdexcept>

namespace vhd {

std::string_view gate_name(GateKind kind) {
  switch (kind) {
    case GateKind::RX: return "RX";
    case GateKind::RZ: return "RZ";
    case GateKind::ZZ: return "ZZ";
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view name) {
  if (name == "RX") return GateKind::RX;
  if (name == "RZ") return GateKind::RZ;
  if (name == "ZZ") return GateKind::ZZ;
  throw std::invalid_argument("unknown gate kind '" + std::string(name) + "'");
}

PauliString GateSpec::generator(int num_qubits) const {
  const Bits q0 = Bits{1} << qubits[0];
  switch (kind) {
    case GateKind::RX: return PauliString(num_qubits, q0, 0);
    case GateKind::RZ: return PauliString(num_qubits, 0, q0);
    case GateKind::ZZ: return PauliString(num_qubits, 0, q0 | (Bits{1} << qubits[1]));
  }
  throw std::logic_error("unreachable");
}

LayeredAnsatz::LayeredAnsatz(int num_qubits, int num_layers, std::vector<GateSpec> gates)
    : n_(num_qubits), m_(num_layers), gates_(std::move(gates)) {
  if (num_qubits < 1 || num_qubits > 20) throw DimensionError("LayeredAnsatz: invalid qubit count");
  if (num_layers < 0) throw std::invalid_argument("LayeredAnsatz: negative layer count");
  std::vector<int> used(gates_.size(), 0);
  for (const auto& g : gates_) {
    for (int k = 0; k < g.arity(); ++k) {
      if (g.qubits[k] < 0 || g.qubits[k] >= n_) throw std::out_of_range("LayeredAnsatz: gate qubit out of range");
    }
    if (g.kind == GateKind::ZZ && std::abs(g.qubits[0] - g.qubits[1]) != 1) {
      throw std::invalid_argument("LayeredAnsatz: ZZ must act on adjacent qubits");
    }
    if (g.param_index < 0 || g.param_index >= static_cast<int>(gates_.size())) {
      throw std::out_of_range("LayeredAnsatz: parameter index out of range");
    }
    if (used[static_cast<std::size_t>(g.param_index)]++) {
      throw std::invalid_argument("LayeredAnsatz: parameter index used twice");
    }
  }
  // Initial layer of 2n gates, then 5(n-1) gates per internal layer and a
  // final layer of 2n. Custom gate lists carry no layer boundaries.
  const std::size_t per_layer = 5 * static_cast<std::size_t>(n_ - 1);
  if (gates_.size() != 4 * static_cast<std::size_t>(n_) + per_layer * static_cast<std::size_t>(m_)) {
    m_ = 0;
    return;
  }
  int pos = 2 * n_;
  for (int layer = 0; layer < m_; ++layer) {
    layer_begin_.push_back(pos);
    pos += static_cast<int>(per_layer);
  }
  layer_begin_.push_back(pos);
}

LayeredAnsatz LayeredAnsatz::build(int num_qubits, int num_layers) {
  if (num_qubits < 2) throw std::invalid_argument("build_layered_ansatz: need at least 2 qubits");
  if (num_layers < 1) throw std::invalid_argument("build_layered_ansatz: need at least 1 internal layer");
  std::vector<GateSpec> gates;
  auto add = [&gates](GateKind kind, int q0, int q1 = 0) {
    gates.push_back({kind, {q0, q1}, static_cast<int>(gates.size())});
  };
  for (int q = 0; q < num_qubits; ++q) {
    add(GateKind::RZ, q);
    add(GateKind::RX, q);
  }
  for (int layer = 0; layer < num_layers; ++layer) {
    for (int start : {0, 1}) {
      for (int j = start; j + 1 < num_qubits; j += 2) {
        add(GateKind::ZZ, j, j + 1);
        for (int q : {j, j + 1}) {
          add(GateKind::RX, q);
          add(GateKind::RZ, q);
        }
      }
    }
  }
  for (int q = 0; q < num_qubits; ++q) {
    add(GateKind::RX, q);
    add(GateKind::RZ, q);
  }
  return LayeredAnsatz(num_qubits, num_layers, std::move(gates));
}

LayeredAnsatz LayeredAnsatz::single_qubit_euler() {
  return LayeredAnsatz(1, 0, {{GateKind::RZ, {0, 0}, 0}, {GateKind::RX, {0, 0}, 1}, {GateKind::RZ, {0, 0}, 2}});
}

int LayeredAnsatz::internal_layer_begin(int layer) const {
  if (layer < 0 || layer >= m_) throw std::out_of_range("internal_layer_begin: layer out of range");
  return layer_begin_[static_cast<std::size_t>(layer)];
}

std::string LayeredAnsatz::to_text() const {
  std::ostringstream os;
  os << "qubits " << n_ << "\n";
  os << "layers " << m_ << "\n";
  os << "gates " << gates_.size() << "\n";
  for (const auto& g : gates_) {
    os << gate_name(g.kind) << ' ' << g.qubits[0];
    if (g.arity() == 2) os << ' ' << g.qubits[1];
    os << ' ' << g.param_index << '\n';
  }
  return os.str();
}

LayeredAnsatz LayeredAnsatz::from_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  int n = -1, m = -1;
  long expected = -1;
  std::vector<GateSpec> gates;
  auto fail = [&](const std::string& msg) {
    throw std::invalid_argument("ansatz line " + std::to_string(line_no) + ": " + msg);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string key;
    ls >> key;
    if (key.empty()) continue;
    if (key == "qubits") {
      if (!(ls >> n)) fail("bad qubit count");
    } else if (key == "layers") {
      if (!(ls >> m)) fail("bad layer count");
    } else if (key == "gates") {
      if (!(ls >> expected)) fail("bad gate count");
    } else {
      GateSpec g;
      try {
        g.kind = parse_gate_kind(key);
      } catch (const std::exception& e) {
        fail(e.what());
      }
      if (!(ls >> g.qubits[0])) fail("missing qubit");
      if (g.arity() == 2 && !(ls >> g.qubits[1])) fail("missing second qubit");
      if (!(ls >> g.param_index)) fail("missing parameter index");
      std::string extra;
      if (ls >> extra) fail("trailing token '" + extra + "'");
      gates.push_back(g);
    }
  }
  if (n < 0 || m < 0) throw std::invalid_argument("ansatz text: missing qubits/layers preamble");
  if (expected >= 0 && expected != static_cast<long>(gates.size())) {
    throw std::invalid_argument("ansatz text: gate count does not match preamble");
  }
  return LayeredAnsatz(n, m, std::move(gates));
}

std::vector<int> gate_for_param(const LayeredAnsatz& a) {
  std::vector<int> out(static_cast<std::size_t>(a.num_params()), -1);
  int i = 0;
  for (const auto& g : a.gates()) out[static_cast<std::size_t>(g.param_index)] = i++;
  return out;
}

}  // namespace vhd
