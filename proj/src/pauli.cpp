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

#include "vhd/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace vhd {

namespace {

Bits mask_for(int n) { return n >= 64 ? ~Bits{0} : (Bits{1} << n) - 1; }

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

PauliString::PauliString(int num_qubits, Bits x, Bits z) : n_(num_qubits), x_(x), z_(z) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw DimensionError("PauliString: qubit count must be in [1, 63]");
  }
  if ((x | z) & ~mask_for(num_qubits)) {
    throw std::invalid_argument("PauliString: bits set beyond the qubit count");
  }
}

PauliString PauliString::from_word(std::string_view word) {
  const int n = static_cast<int>(word.size());
  if (n < 1 || n > kMaxQubits) throw std::invalid_argument("PauliString: empty or oversized word");
  Bits x = 0, z = 0;
  for (int q = 0; q < n; ++q) {
    const Bits bit = Bits{1} << q;
    switch (word[q]) {
      case 'I': break;
      case 'X': x |= bit; break;
      case 'Z': z |= bit; break;
      case 'Y': x |= bit; z |= bit; break;
      default:
        throw std::invalid_argument("PauliString: invalid character '" + std::string(1, word[q]) +
                                    "' in word");
    }
  }
  return PauliString(n, x, z);
}

std::string PauliString::word() const {
  std::string out(n_, 'I');
  for (int q = 0; q < n_; ++q) {
    const bool xb = (x_ >> q) & 1, zb = (z_ >> q) & 1;
    out[q] = xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const PauliString& s) { return os << s.word(); }

void PauliSum::validate_qubits(int n) {
  if (n < 1 || n > PauliString::kMaxQubits) throw DimensionError("PauliSum: invalid qubit count");
}

PauliSum::PauliSum(int num_qubits, std::vector<PauliTerm> terms, double cutoff) : n_(num_qubits) {
  validate_qubits(num_qubits);
  std::map<PauliString, double> merged;
  for (const auto& t : terms) {
    if (t.string.num_qubits() != num_qubits) {
      throw DimensionError("PauliSum: term " + t.string.word() + " has the wrong qubit count");
    }
    if (!std::isfinite(t.coefficient)) throw std::invalid_argument("PauliSum: non-finite coefficient");
    merged[t.string] += t.coefficient;
  }
  for (const auto& [s, c] : merged) {
    if (std::abs(c) >= cutoff) terms_.push_back({c, s});
  }
}

double PauliSum::coefficient_norm_sq() const {
  double acc = 0;
  for (const auto& t : terms_) acc += t.coefficient * t.coefficient;
  return acc;
}

double PauliSum::max_abs_coefficient() const {
  double m = 0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coefficient));
  return m;
}

double PauliSum::identity_coefficient() const {
  for (const auto& t : terms_) {
    if (t.string.is_identity()) return t.coefficient;
  }
  return 0.0;
}

PauliSum PauliSum::scaled(double factor) const {
  std::vector<PauliTerm> out(terms_.begin(), terms_.end());
  for (auto& t : out) t.coefficient *= factor;
  return PauliSum(n_, std::move(out));
}

PauliSum operator+(const PauliSum& a, const PauliSum& b) {
  if (a.n_ != b.n_) throw DimensionError("PauliSum: adding sums on different qubit counts");
  std::vector<PauliTerm> all(a.terms_.begin(), a.terms_.end());
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return PauliSum(a.n_, std::move(all));
}

std::string PauliSum::to_text() const {
  std::string out;
  char buf[64];
  for (const auto& t : terms_) {
    std::snprintf(buf, sizeof buf, "%.17g ", t.coefficient);
    out += buf;
    out += t.string.word();
    out += '\n';
  }
  return out;
}

PauliSum PauliSum::from_text(std::string_view text) {
  std::vector<PauliTerm> terms;
  int n = -1;
  int line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = trim(text.substr(0, eol));
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto sep = line.find_first_of(" \t");
    if (sep == std::string_view::npos) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": expected '<coeff> <word>'");
    }
    const std::string coeff_text(trim(line.substr(0, sep)));
    const std::string_view word = trim(line.substr(sep));
    double coeff = 0;
    try {
      std::size_t used = 0;
      coeff = std::stod(coeff_text, &used);
      if (used != coeff_text.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": bad coefficient '" +
                                  coeff_text + "'");
    }
    PauliString s;
    try {
      s = PauliString::from_word(word);
    } catch (const std::exception& e) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (n == -1) n = s.num_qubits();
    if (s.num_qubits() != n) {
      throw std::invalid_argument("line " + std::to_string(line_no) + ": inconsistent word length");
    }
    terms.push_back({coeff, s});
  }
  if (n == -1) throw std::invalid_argument("PauliSum text contains no terms");
  return PauliSum(n, std::move(terms));
}

DiagonalPauliSum::DiagonalPauliSum(int num_qubits, std::vector<Bits> z_strings, Vec gammas)
    : n_(num_qubits), strings_(std::move(z_strings)), gammas_(std::move(gammas)) {
  if (num_qubits < 1 || num_qubits > PauliString::kMaxQubits) {
    throw DimensionError("DiagonalPauliSum: invalid qubit count");
  }
  if (static_cast<std::size_t>(gammas_.size()) != strings_.size()) {
    throw DimensionError("DiagonalPauliSum: one coefficient per Z-string required");
  }
  if (strings_.size() > term_budget(num_qubits)) {
    throw std::invalid_argument("DiagonalPauliSum: term count exceeds the n^2 budget");
  }
  std::vector<Bits> sorted = strings_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw std::invalid_argument("DiagonalPauliSum: duplicate Z-string");
  }
  for (Bits k : strings_) {
    if (k & ~mask_for(num_qubits)) throw std::invalid_argument("DiagonalPauliSum: string out of range");
  }
}

DiagonalPauliSum::DiagonalPauliSum(int num_qubits, std::vector<Bits> z_strings)
    : DiagonalPauliSum(num_qubits, z_strings, Vec::Zero(static_cast<Eigen::Index>(z_strings.size()))) {}

std::vector<Bits> DiagonalPauliSum::weight_one_strings(int num_qubits) {
  std::vector<Bits> out;
  for (int q = 0; q < num_qubits; ++q) out.push_back(Bits{1} << q);
  return out;
}

DiagonalPauliSum DiagonalPauliSum::weight_one(int num_qubits) {
  return DiagonalPauliSum(num_qubits, weight_one_strings(num_qubits));
}

DiagonalPauliSum DiagonalPauliSum::with_gammas(Vec gammas) const {
  return DiagonalPauliSum(n_, strings_, std::move(gammas));
}

Vec DiagonalPauliSum::diagonal() const {
  const std::int64_t d = dimension_for(n_);
  Vec out = Vec::Zero(d);
  for (std::size_t k = 0; k < strings_.size(); ++k) {
    const double g = gammas_(static_cast<Eigen::Index>(k));
    for (std::int64_t b = 0; b < d; ++b) out(b) += g * z_sign(strings_[k], static_cast<Bits>(b));
  }
  return out;
}

PauliSum DiagonalPauliSum::to_pauli_sum() const {
  std::vector<PauliTerm> terms;
  for (std::size_t k = 0; k < strings_.size(); ++k) {
    terms.push_back({gammas_(static_cast<Eigen::Index>(k)), PauliString(n_, 0, strings_[k])});
  }
  return PauliSum(n_, std::move(terms), 0.0);
}

PauliSum pauli_decompose(const OperatorXcd& m, const Tolerances& tol) {
  if (m.rows() != m.cols()) throw DimensionError("pauli_decompose: operator is not square");
  const int n = qubits_for(m.rows());
  if (n < 1 || n > std::min(tol.max_qubits, 8)) throw DimensionError("pauli_decompose: unsupported qubit count");
  const Bits count = Bits{1} << n;
  const double d = static_cast<double>(m.rows());
  std::vector<PauliTerm> terms;
  for (Bits z = 0; z < count; ++z) {
    for (Bits x = 0; x < count; ++x) {
      const PauliString s(n, x, z);
      terms.push_back({pauli_trace(s, m).real() / d, s});
    }
  }
  return PauliSum(n, std::move(terms), tol.coefficient_cutoff);
}

PauliSum xy_hamiltonian(int num_qubits) {
  if (num_qubits < 2) throw std::invalid_argument("xy_hamiltonian: need at least 2 qubits");
  std::vector<PauliTerm> terms;
  for (int j = 0; j + 1 < num_qubits; ++j) {
    const Bits pair = (Bits{1} << j) | (Bits{1} << (j + 1));
    terms.push_back({1.0, PauliString(num_qubits, pair, 0)});
    // Y_j Y_{j+1} = i^2 X X Z Z, and i^{x.z} = i^2 supplies that phase.
    terms.push_back({1.0, PauliString(num_qubits, pair, pair)});
  }
  return PauliSum(num_qubits, std::move(terms));
}

}  // namespace vhd
