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

namespace vhd {

// Numerical thresholds shared by every module. Property suites scale these
// through a single record instead of hunting for literals.
struct Tolerances {
  // Largest qubit count for which dense operators are materialized.
  int max_qubits = 12;
  // Coefficients with smaller magnitude are dropped when a PauliSum is built.
  double coefficient_cutoff = 1e-12;
  // ||U^dag U - 1||_HS bound for unitarity checks.
  double unitarity = 1e-9;
  // ||M - M^dag||_HS <= hermiticity * ||M||_HS for Hermitian inputs.
  double hermiticity = 1e-9;
  // Allowed imaginary part of traces that are real by construction.
  double imaginary_residue = 1e-10;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace vhd
