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

#include <bit>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vhd/linalg.hpp"

namespace vhd {

using Bits = std::uint64_t;

inline int parity(Bits b) { return std::popcount(b) & 1; }

// (-1)^{k.b}: eigenvalue of Z^k on basis state b.
inline int z_sign(Bits k, Bits b) { return parity(k & b) ? -1 : 1; }

// Signed Pauli operator i^{x.z} X^x Z^z on n qubits. Bit q of x (z) selects
// X (Z) on qubit q. With that phase the operator is Hermitian, e.g. x = z = 1
// is Pauli Y.
class PauliString {
 public:
  static constexpr int kMaxQubits = 63;

  PauliString() = default;
  PauliString(int num_qubits, Bits x, Bits z);

  // Word over {I,X,Y,Z}; character i acts on qubit i.
  static PauliString from_word(std::string_view word);
  std::string word() const;

  int num_qubits() const { return n_; }
  Bits x() const { return x_; }
  Bits z() const { return z_; }
  bool is_identity() const { return x_ == 0 && z_ == 0; }
  bool is_diagonal() const { return x_ == 0; }
  int weight() const { return std::popcount(x_ | z_); }

  // Exponent e of the global factor i^e.
  int phase_exponent() const { return std::popcount(x_ & z_) & 3; }

  // sigma |b> = amplitude(b) |b ^ x>.
  template <typename Scalar>
  Complex<Scalar> amplitude(Bits b) const {
    static constexpr int kRe[4] = {1, 0, -1, 0};
    static constexpr int kIm[4] = {0, 1, 0, -1};
    const int e = phase_exponent();
    const Scalar s = Scalar(z_sign(z_, b));
    return {s * Scalar(kRe[e]), s * Scalar(kIm[e])};
  }

  // Canonical order: by Z-part, then X-part.
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.z_ <=> b.z_; c != 0) return c;
    return a.x_ <=> b.x_;
  }
  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  int n_ = 1;
  Bits x_ = 0;
  Bits z_ = 0;
};

struct PauliTerm {
  double coefficient = 0.0;
  PauliString string;
};

// Real-weighted sum of Pauli strings on a fixed qubit count. Duplicated
// strings are merged, near-zero coefficients dropped, and terms kept in
// canonical order.
class PauliSum {
 public:
  explicit PauliSum(int num_qubits = 1) : n_(num_qubits) { validate_qubits(num_qubits); }
  PauliSum(int num_qubits, std::vector<PauliTerm> terms,
           double cutoff = kDefaultTolerances.coefficient_cutoff);

  int num_qubits() const { return n_; }
  std::span<const PauliTerm> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  // sum_k h_k^2
  double coefficient_norm_sq() const;
  double max_abs_coefficient() const;
  // Coefficient of the identity string (0 if absent).
  double identity_coefficient() const;

  PauliSum scaled(double factor) const;
  friend PauliSum operator+(const PauliSum& a, const PauliSum& b);

  // One "<coeff> <word>" line per term, coefficients printed with 17
  // significant digits so parsing recovers them exactly.
  std::string to_text() const;
  static PauliSum from_text(std::string_view text);

 private:
  static void validate_qubits(int n);
  int n_;
  std::vector<PauliTerm> terms_;
};

// Pure Z-strings with real weights: D(gamma) = sum_k gamma_k Z^{k}.
class DiagonalPauliSum {
 public:
  DiagonalPauliSum(int num_qubits, std::vector<Bits> z_strings, Vec gammas);
  DiagonalPauliSum(int num_qubits, std::vector<Bits> z_strings);

  // The n weight-one strings Z_0 ... Z_{n-1}.
  static std::vector<Bits> weight_one_strings(int num_qubits);
  static DiagonalPauliSum weight_one(int num_qubits);

  // Upper bound on the term count: n^2 strings.
  static std::size_t term_budget(int num_qubits) {
    return static_cast<std::size_t>(num_qubits) * static_cast<std::size_t>(num_qubits);
  }

  int num_qubits() const { return n_; }
  std::span<const Bits> strings() const { return strings_; }
  const Vec& gammas() const { return gammas_; }
  std::size_t size() const { return strings_.size(); }

  DiagonalPauliSum with_gammas(Vec gammas) const;

  // Diagonal entries sum_k gamma_k (-1)^{k.b} for every basis state b.
  Vec diagonal() const;
  PauliSum to_pauli_sum() const;

 private:
  int n_;
  std::vector<Bits> strings_;
  Vec gammas_;
};

// Column b of sigma holds a single entry at row b ^ x; built directly from
// the basis action rather than through Kronecker products.
template <typename Scalar = double>
Operator<Scalar> to_matrix(const PauliString& s, const Tolerances& tol = kDefaultTolerances) {
  if (s.num_qubits() > tol.max_qubits) {
    throw DimensionError("to_matrix: " + std::to_string(s.num_qubits()) +
                         " qubits exceeds the configured maximum");
  }
  const std::int64_t d = dimension_for(s.num_qubits());
  Operator<Scalar> m = Operator<Scalar>::Zero(d, d);
  for (std::int64_t b = 0; b < d; ++b) {
    m(static_cast<std::int64_t>(static_cast<Bits>(b) ^ s.x()), b) = s.amplitude<Scalar>(b);
  }
  return m;
}

template <typename Scalar = double>
Operator<Scalar> to_matrix(const PauliSum& h, const Tolerances& tol = kDefaultTolerances) {
  if (h.num_qubits() > tol.max_qubits) {
    throw DimensionError("to_matrix: " + std::to_string(h.num_qubits()) +
                         " qubits exceeds the configured maximum");
  }
  const std::int64_t d = dimension_for(h.num_qubits());
  Operator<Scalar> m = Operator<Scalar>::Zero(d, d);
  for (const auto& term : h.terms()) {
    const Scalar c = Scalar(term.coefficient);
    for (std::int64_t b = 0; b < d; ++b) {
      m(static_cast<std::int64_t>(static_cast<Bits>(b) ^ term.string.x()), b) +=
          c * term.string.amplitude<Scalar>(b);
    }
  }
  return m;
}

// Tr(sigma A) in O(d).
template <typename Derived>
auto pauli_trace(const PauliString& s, const Eigen::MatrixBase<Derived>& a) {
  using C = typename Derived::Scalar;
  using R = typename C::value_type;
  C acc{};
  for (Eigen::Index b = 0; b < a.rows(); ++b) {
    const auto row = static_cast<Eigen::Index>(static_cast<Bits>(b) ^ s.x());
    // (sigma A)_{bb} = sum_r sigma_{b r} A_{r b}, sigma_{b, b^x} = amplitude(b^x)
    acc += s.amplitude<R>(static_cast<Bits>(row)) * a(row, b);
  }
  return acc;
}

// d * sum h^2, the squared Hilbert-Schmidt norm of the dense matrix.
inline double hs_norm_sq(const PauliSum& h) {
  return static_cast<double>(dimension_for(h.num_qubits())) * h.coefficient_norm_sq();
}

// Expansion of a dense operator over all 4^n strings, coefficients
// Re Tr(sigma M) / d; exact for Hermitian M.
PauliSum pauli_decompose(const OperatorXcd& m, const Tolerances& tol = kDefaultTolerances);

// sum_{j} X_j X_{j+1} + Y_j Y_{j+1} on an open chain.
PauliSum xy_hamiltonian(int num_qubits);

std::ostream& operator<<(std::ostream& os, const PauliString& s);

}  // namespace vhd
