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

#include "vhd/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <unistd.h>

namespace vhd {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

double parse_double(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected a number, got '" + text + "'");
  }
}

long long parse_int(const std::string& text, const std::string& what) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(text, &used);
    if (used != text.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw std::invalid_argument(what + ": expected an integer, got '" + text + "'");
  }
}

std::string na_or(double v) { return std::isnan(v) ? std::string() : format_double(v); }

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v == 0 ? 0.0 : v);
  return buf;
}

std::uint64_t fnv1a64(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write '" + tmp.string() + "'");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw IoError("short write to '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw IoError("cannot rename onto '" + path.string() + "'");
  }
}

KeyValueConfig KeyValueConfig::parse(std::string_view text, const std::string& origin) {
  KeyValueConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    const std::string body = trim(std::string_view(line).substr(0, hash));
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument(origin + ":" + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    if (key.empty()) throw std::invalid_argument(origin + ":" + std::to_string(line_no) + ": empty key");
    cfg.values_[key] = trim(std::string_view(body).substr(eq + 1));
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::filesystem::path& path) {
  return parse(read_file(path), path.string());
}

void KeyValueConfig::set_assignment(std::string_view assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string_view::npos) {
    throw std::invalid_argument("override '" + std::string(assignment) + "' is not key=value");
  }
  const std::string key = trim(assignment.substr(0, eq));
  if (key.empty()) throw std::invalid_argument("override has an empty key");
  values_[key] = trim(assignment.substr(eq + 1));
}

std::string KeyValueConfig::get_string(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : parse_double(it->second, key);
}

long long KeyValueConfig::get_int(const std::string& key, long long fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : parse_int(it->second, key);
}

bool KeyValueConfig::get_bool(const std::string& key, bool fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const std::string& v = it->second;
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw std::invalid_argument(key + ": expected a boolean, got '" + v + "'");
}

std::vector<double> KeyValueConfig::get_doubles(const std::string& key, const std::vector<double>& fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  std::vector<double> out;
  std::string item;
  std::istringstream in(it->second);
  while (std::getline(in, item, ',')) {
    const std::string t = trim(item);
    if (!t.empty()) out.push_back(parse_double(t, key));
  }
  return out;
}

std::string KeyValueConfig::canonical_text() const {
  std::string out;
  for (const auto& [k, v] : values_) out += k + "=" + v + "\n";
  return out;
}

std::string metadata_header(const OutputMeta& meta, const std::vector<std::string>& extra) {
  char hash[32];
  std::snprintf(hash, sizeof hash, "%016llx", static_cast<unsigned long long>(meta.config_hash));
  std::string out = "# config_hash=" + std::string(hash) + "\n";
  out += "# seed=" + std::to_string(meta.seed) + "\n";
  out += "# code_version=" + std::string(kCodeVersion) + "\n";
  for (const auto& e : extra) out += "# " + e + "\n";
  return out;
}

std::string trace_csv_header() {
  return "iteration,c_vhd,c_vhd_normalized,grad_norm_theta,grad_norm_gamma,shots,seed,phase,c_vff,restart,"
         "best_cost\n";
}

std::string trace_csv_rows(const OptTrace& trace, int restart) {
  std::string out;
  for (const auto& r : trace.records) {
    out += std::to_string(r.iteration) + ',' + na_or(r.c_vhd) + ',' + na_or(r.c_vhd_normalized) + ',' +
           format_double(r.grad_norm_theta) + ',' + format_double(r.grad_norm_gamma) + ',' + std::to_string(r.shots) +
           ',' + std::to_string(r.seed) + ',' + std::string(phase_name(r.phase)) + ',' + na_or(r.c_vff) + ',' +
           std::to_string(restart) + ',' + format_double(r.best_cost) + '\n';
  }
  return out;
}

std::string sweep_csv(const SweepResult& sweep, const OutputMeta& meta) {
  std::string out = metadata_header(meta) + "T,infidelity,source\n";
  for (std::size_t i = 0; i < sweep.times.size(); ++i) {
    out += format_double(sweep.times[i]) + ',' + format_double(sweep.infidelities[i]) + ',' +
           std::string(sweep_source_name(sweep.source)) + '\n';
  }
  return out;
}

std::string variance_csv(const VarianceReport& report, const OutputMeta& meta, const std::vector<std::string>& extra) {
  std::string out = metadata_header(meta, extra) + "n,samples,mean,variance,stderr,mu,variance_stderr\n";
  for (const auto& r : report.rows) {
    out += std::to_string(r.n) + ',' + std::to_string(r.samples) + ',' + format_double(r.mean) + ',' +
           format_double(r.variance) + ',' + format_double(r.stderr_mean) + ',' + std::to_string(r.mu) + ',' +
           format_double(r.stderr_variance) + '\n';
  }
  return out;
}

std::string ParamsFile::to_text() const {
  std::string out = "qubits " + std::to_string(num_qubits) + "\n";
  out += "gamma " + std::to_string(strings.size()) + "\n";
  for (std::size_t k = 0; k < strings.size(); ++k) {
    std::string word(static_cast<std::size_t>(num_qubits), 'I');
    for (int q = 0; q < num_qubits; ++q) {
      if ((strings[k] >> q) & 1) word[static_cast<std::size_t>(q)] = 'Z';
    }
    out += word + ' ' + format_double(gamma(static_cast<Eigen::Index>(k))) + '\n';
  }
  out += "theta " + std::to_string(theta.size()) + "\n";
  for (Eigen::Index i = 0; i < theta.size(); ++i) out += format_double(theta(i)) + '\n';
  return out;
}

ParamsFile ParamsFile::from_text(std::string_view text, const std::string& origin) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  const auto fail = [&](const std::string& msg) {
    throw std::invalid_argument(origin + ":" + std::to_string(line_no) + ": " + msg);
  };
  // Next non-comment line, or fail at end of input.
  const auto next = [&](const char* expecting) {
    while (std::getline(in, line)) {
      ++line_no;
      const std::string t = trim(line);
      if (!t.empty() && t[0] != '#') return t;
    }
    fail(std::string("unexpected end of file, expected ") + expecting);
    return std::string();
  };
  const auto header = [&](const std::string& key) {
    std::istringstream ls(next(key.c_str()));
    std::string k;
    long long count = -1;
    std::string extra;
    if (!(ls >> k) || k != key || !(ls >> count) || count < 0 || (ls >> extra)) {
      fail("expected '" + key + " <count>'");
    }
    return count;
  };

  ParamsFile p;
  p.num_qubits = static_cast<int>(header("qubits"));
  if (p.num_qubits < 1 || p.num_qubits > PauliString::kMaxQubits) fail("qubit count out of range");
  const long long ng = header("gamma");
  p.gamma.resize(ng);
  for (long long k = 0; k < ng; ++k) {
    std::istringstream ls(next("a Z-string line"));
    std::string word, value, extra;
    if (!(ls >> word >> value) || (ls >> extra)) fail("expected '<Z-word> <gamma>'");
    if (static_cast<int>(word.size()) != p.num_qubits) fail("Z-word '" + word + "' has the wrong length");
    Bits bits = 0;
    for (int q = 0; q < p.num_qubits; ++q) {
      const char c = word[static_cast<std::size_t>(q)];
      if (c == 'Z') bits |= Bits{1} << q;
      else if (c != 'I') fail("Z-word may only contain I and Z");
    }
    try {
      p.gamma(k) = parse_double(value, "gamma");
    } catch (const std::exception& e) {
      fail(e.what());
    }
    p.strings.push_back(bits);
  }
  const long long nt = header("theta");
  p.theta.resize(nt);
  for (long long i = 0; i < nt; ++i) {
    const std::string t = next("a theta value");
    try {
      p.theta(i) = parse_double(t, "theta");
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (!t.empty() && t[0] != '#') fail("trailing content '" + t + "'");
  }
  return p;
}

}  // namespace vhd
