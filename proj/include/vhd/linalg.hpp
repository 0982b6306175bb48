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

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "vhd/tolerances.hpp"

namespace vhd {

template <typename Scalar>
using Complex = std::complex<Scalar>;

// Dense d x d complex operator with d = 2^n. Basis index bit (q) is qubit q,
// so qubit 0 is the least significant bit of a basis label.
template <typename Scalar>
using Operator = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;

template <typename Scalar>
using StateVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;

template <typename Scalar>
using RealVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using OperatorXcd = Operator<double>;
using StateVectorXcd = StateVector<double>;
using Vec = RealVector<double>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NotHermitianError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

inline std::int64_t dimension_for(int num_qubits) {
  return std::int64_t{1} << num_qubits;
}

// Qubit count of a power-of-two dimension; throws if dim is not 2^n.
inline int qubits_for(std::int64_t dim) {
  if (dim < 1 || (dim & (dim - 1)) != 0) {
    throw DimensionError("dimension " + std::to_string(dim) + " is not a power of two");
  }
  int n = 0;
  while ((std::int64_t{1} << n) < dim) ++n;
  return n;
}

template <typename Scalar>
Operator<Scalar> identity(std::int64_t dim) {
  return Operator<Scalar>::Identity(dim, dim);
}

template <typename Derived>
auto hs_norm(const Eigen::MatrixBase<Derived>& a) {
  return a.norm();
}

template <typename Scalar>
void require_same_shape(const Operator<Scalar>& a, const Operator<Scalar>& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw DimensionError(std::string(what) + ": operators must be square with equal dimensions");
  }
}

template <typename Scalar>
bool is_unitary(const Operator<Scalar>& u, Scalar tol = Scalar(kDefaultTolerances.unitarity)) {
  if (u.rows() != u.cols()) return false;
  return (u.adjoint() * u - identity<Scalar>(u.rows())).norm() < tol;
}

template <typename Scalar>
bool is_hermitian(const Operator<Scalar>& m, Scalar rel_tol = Scalar(kDefaultTolerances.hermiticity)) {
  if (m.rows() != m.cols()) return false;
  const Scalar scale = std::max(m.norm(), Scalar(1e-300));
  return (m - m.adjoint()).norm() <= rel_tol * scale;
}

template <typename Scalar>
struct HermitianEigen {
  RealVector<Scalar> eigenvalues;  // ascending
  Operator<Scalar> eigenvectors;   // columns
};

template <typename Scalar>
HermitianEigen<Scalar> eigh(const Operator<Scalar>& m,
                            Scalar rel_tol = Scalar(kDefaultTolerances.hermiticity)) {
  if (m.rows() != m.cols()) throw DimensionError("eigh: matrix is not square");
  if (!is_hermitian(m, rel_tol)) throw NotHermitianError("eigh: matrix is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Operator<Scalar>> solver(m);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigh: eigensolver did not converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

// V diag(exp(-i lambda t)) V^dag for a precomputed spectral decomposition.
template <typename Scalar>
Operator<Scalar> expm_i(const HermitianEigen<Scalar>& eig, Scalar t) {
  const auto phases = (eig.eigenvalues.array() * (-t))
                          .unaryExpr([](Scalar x) { return std::polar(Scalar(1), x); })
                          .matrix();
  return eig.eigenvectors * phases.asDiagonal() * eig.eigenvectors.adjoint();
}

// exp(-i M t) for Hermitian M.
template <typename Scalar>
Operator<Scalar> expm_i(const Operator<Scalar>& m, Scalar t) {
  return expm_i(eigh(m), t);
}

// Haar-averaged state fidelity between two unitaries, closed form.
template <typename Scalar>
Scalar avg_gate_fidelity(const Operator<Scalar>& u, const Operator<Scalar>& v) {
  require_same_shape(u, v, "avg_gate_fidelity");
  const Scalar d = Scalar(u.rows());
  const Scalar overlap = std::norm((u.adjoint() * v).trace());
  return std::clamp((d + overlap) / (d * d + d), Scalar(0), Scalar(1));
}

// min over phi of ||A - e^{i phi} B||_HS.
template <typename Scalar>
Scalar min_phase_hs_distance(const Operator<Scalar>& a, const Operator<Scalar>& b) {
  require_same_shape(a, b, "min_phase_hs_distance");
  const Scalar d = Scalar(a.rows());
  const Scalar overlap = std::abs((a * b.adjoint()).trace());
  return std::sqrt(std::max(Scalar(0), 2 * d - 2 * overlap));
}

// Reduced operator on the qubits listed in `keep` (0-based). Kept qubits are
// relabelled in ascending order, the lowest becoming bit 0 of the result.
template <typename Scalar>
Operator<Scalar> partial_trace(const Operator<Scalar>& rho, std::span<const int> keep) {
  if (rho.rows() != rho.cols()) throw DimensionError("partial_trace: operator is not square");
  const int n = qubits_for(rho.rows());
  std::vector<int> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end());
  if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
    throw std::out_of_range("partial_trace: repeated qubit index");
  }
  for (int q : kept) {
    if (q < 0 || q >= n) throw std::out_of_range("partial_trace: qubit index out of range");
  }
  std::vector<int> traced;
  for (int q = 0; q < n; ++q) {
    if (!std::binary_search(kept.begin(), kept.end(), q)) traced.push_back(q);
  }
  const auto scatter = [](std::int64_t bits, const std::vector<int>& positions) {
    std::int64_t out = 0;
    for (std::size_t i = 0; i < positions.size(); ++i) {
      if ((bits >> i) & 1) out |= std::int64_t{1} << positions[i];
    }
    return out;
  };
  const std::int64_t dk = std::int64_t{1} << kept.size();
  const std::int64_t dt = std::int64_t{1} << traced.size();
  std::vector<std::int64_t> kept_index(dk), traced_index(dt);
  for (std::int64_t i = 0; i < dk; ++i) kept_index[i] = scatter(i, kept);
  for (std::int64_t i = 0; i < dt; ++i) traced_index[i] = scatter(i, traced);

  Operator<Scalar> out = Operator<Scalar>::Zero(dk, dk);
  for (std::int64_t r = 0; r < dk; ++r) {
    for (std::int64_t c = 0; c < dk; ++c) {
      Complex<Scalar> acc{};
      for (std::int64_t e : traced_index) acc += rho(kept_index[r] | e, kept_index[c] | e);
      out(r, c) = acc;
    }
  }
  return out;
}

template <typename Scalar>
Operator<Scalar> partial_trace(const Operator<Scalar>& rho, std::initializer_list<int> keep) {
  return partial_trace(rho, std::span<const int>(keep.begin(), keep.size()));
}

// Normalized complex-Gaussian vector, exactly Haar distributed.
template <typename Scalar, typename Rng>
StateVector<Scalar> haar_random_state(std::int64_t dim, Rng& rng) {
  std::normal_distribution<Scalar> normal;
  StateVector<Scalar> psi(dim);
  for (std::int64_t i = 0; i < dim; ++i) psi(i) = {normal(rng), normal(rng)};
  return psi / psi.norm();
}

// QR of a Ginibre matrix with the R-diagonal phases divided out.
template <typename Scalar, typename Rng>
Operator<Scalar> haar_random_unitary(std::int64_t dim, Rng& rng) {
  std::normal_distribution<Scalar> normal;
  Operator<Scalar> z(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t j = 0; j < dim; ++j) z(i, j) = {normal(rng), normal(rng)};
  }
  Eigen::HouseholderQR<Operator<Scalar>> qr(z);
  Operator<Scalar> q = qr.householderQ();
  const Operator<Scalar> r = qr.matrixQR().template triangularView<Eigen::Upper>();
  for (std::int64_t j = 0; j < dim; ++j) {
    const Complex<Scalar> rjj = r(j, j);
    const Scalar mag = std::abs(rjj);
    if (mag > 0) q.col(j) *= rjj / mag;
  }
  return q;
}

// GUE-style Hermitian matrix, entries of order one.
template <typename Scalar, typename Rng>
Operator<Scalar> random_hermitian(std::int64_t dim, Rng& rng) {
  std::normal_distribution<Scalar> normal;
  Operator<Scalar> a(dim, dim);
  for (std::int64_t i = 0; i < dim; ++i) {
    for (std::int64_t j = 0; j < dim; ++j) a(i, j) = {normal(rng), normal(rng)};
  }
  return (a + a.adjoint()) / Scalar(2);
}

}  // namespace vhd
