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

#include <cstdint>
#include <string>
#include <vector>

namespace vhd {

struct VerifyOptions {
  // Multiplies every tolerance; 0 demands exact agreement.
  double tolerance_scale = 1.0;
  // Empty runs every suite.
  std::vector<std::string> suites;
  std::uint64_t seed = 2024;
};

struct SuiteResult {
  std::string name;
  int checks = 0;
  int failures = 0;
  std::string first_violation;

  bool passed() const { return failures == 0; }
};

std::vector<std::string> verify_suite_names();

// Throws std::invalid_argument for unknown suite names.
std::vector<SuiteResult> run_verify(const VerifyOptions& opt);

}  // namespace vhd
