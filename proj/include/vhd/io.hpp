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
#include <filesystem>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vhd/descent.hpp"
#include "vhd/fast_forward.hpp"
#include "vhd/pauli.hpp"
#include "vhd/variance_scan.hpp"

namespace vhd {

inline constexpr std::string_view kCodeVersion = "1.0.0";

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::uint64_t fnv1a64(std::string_view data);

std::string read_file(const std::filesystem::path& path);
// Writes to a sibling temporary and renames it over `path`, so readers never
// observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

// Flat "key = value" text; '#' starts a comment, blank lines ignored.
class KeyValueConfig {
 public:
  static KeyValueConfig parse(std::string_view text, const std::string& origin = "config");
  static KeyValueConfig load(const std::filesystem::path& path);

  void set(const std::string& key, const std::string& value) { values_[key] = value; }
  // Accepts "key=value"; throws std::invalid_argument otherwise.
  void set_assignment(std::string_view assignment);
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, std::string>& values() const { return values_; }

  std::string get_string(const std::string& key, const std::string& fallback) const;
  double get_double(const std::string& key, double fallback) const;
  long long get_int(const std::string& key, long long fallback) const;
  bool get_bool(const std::string& key, bool fallback) const;
  std::vector<double> get_doubles(const std::string& key, const std::vector<double>& fallback) const;

  // Sorted "key=value" lines; the basis of the config hash.
  std::string canonical_text() const;
  std::uint64_t hash() const { return fnv1a64(canonical_text()); }

 private:
  std::map<std::string, std::string> values_;
};

struct OutputMeta {
  std::uint64_t config_hash = 0;
  std::uint64_t seed = 0;
};

// "# config_hash=...", "# seed=...", "# code_version=..." lines.
std::string metadata_header(const OutputMeta& meta, const std::vector<std::string>& extra = {});

std::string trace_csv_header();
std::string trace_csv_rows(const OptTrace& trace, int restart);

std::string sweep_csv(const SweepResult& sweep, const OutputMeta& meta);
std::string variance_csv(const VarianceReport& report, const OutputMeta& meta,
                         const std::vector<std::string>& extra = {});

// Trained parameters: qubit count, Z-strings with their gammas, and theta.
struct ParamsFile {
  int num_qubits = 0;
  std::vector<Bits> strings;
  Vec gamma;
  Vec theta;

  std::string to_text() const;
  static ParamsFile from_text(std::string_view text, const std::string& origin = "params");
};

std::string format_double(double v);

}  // namespace vhd
