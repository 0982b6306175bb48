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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "vhd/io.hpp"

namespace vhd {
namespace {

namespace fs = std::filesystem;

TEST(KeyValueConfig, ParseAndTypes) {
  const auto kv = KeyValueConfig::parse(
      "# comment\nqubits = 4\n\ndt=0.125  # trailing\nmodel = xy\nflag = true\ntimes = 0.1, 1,10\n");
  EXPECT_EQ(kv.get_int("qubits", 0), 4);
  EXPECT_DOUBLE_EQ(kv.get_double("dt", 0), 0.125);
  EXPECT_EQ(kv.get_string("model", ""), "xy");
  EXPECT_TRUE(kv.get_bool("flag", false));
  EXPECT_EQ(kv.get_doubles("times", {}), (std::vector<double>{0.1, 1, 10}));
  EXPECT_EQ(kv.get_int("missing", 7), 7);
  EXPECT_THROW(kv.get_int("dt", 0), std::invalid_argument);
  EXPECT_THROW(kv.get_bool("model", false), std::invalid_argument);
  EXPECT_THROW(KeyValueConfig::parse("novalue\n"), std::invalid_argument);
  EXPECT_THROW(KeyValueConfig::parse(" = 3\n"), std::invalid_argument);
}

TEST(KeyValueConfig, OverridesAndHash) {
  auto a = KeyValueConfig::parse("b = 2\na = 1\n");
  auto b = KeyValueConfig::parse("a=1\nb=2\n");
  EXPECT_EQ(a.hash(), b.hash());
  EXPECT_EQ(a.canonical_text(), "a=1\nb=2\n");
  b.set_assignment("b=3");
  EXPECT_EQ(b.get_int("b", 0), 3);
  EXPECT_NE(a.hash(), b.hash());
  EXPECT_THROW(b.set_assignment("nosign"), std::invalid_argument);
  EXPECT_THROW(b.set_assignment("=1"), std::invalid_argument);
}

TEST(Files, AtomicWriteAndMissingRead) {
  const fs::path dir = fs::temp_directory_path() / "vhd_io_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  write_file_atomic(dir / "x.txt", "hello\n");
  EXPECT_EQ(read_file(dir / "x.txt"), "hello\n");
  write_file_atomic(dir / "x.txt", "again\n");
  EXPECT_EQ(read_file(dir / "x.txt"), "again\n");
  std::size_t count = 0;
  for (const auto& e : fs::directory_iterator(dir)) {
    (void)e;
    ++count;
  }
  EXPECT_EQ(count, 1u);
  EXPECT_THROW(read_file(dir / "nope.txt"), IoError);
  EXPECT_THROW(write_file_atomic(dir / "no" / "such" / "dir.txt", "x"), IoError);
  fs::remove_all(dir);
}

TEST(Metadata, HeaderLines) {
  const auto h = metadata_header({0xabcULL, 42}, {"note=1"});
  EXPECT_EQ(h, "# config_hash=0000000000000abc\n# seed=42\n# code_version=1.0.0\n# note=1\n");
}

TEST(Csv, SweepAndVariance) {
  SweepResult s{{0.5, 2}, {0.125, 0.25}, SweepSource::Vff};
  const auto csv = sweep_csv(s, {1, 2});
  EXPECT_NE(csv.find("T,infidelity,source\n0.5,0.125,vff\n2,0.25,vff\n"), std::string::npos);
  VarianceReport r;
  r.rows.push_back({2, 100, 4, 0.125, 0.5, 0.0625, 0.25});
  EXPECT_NE(variance_csv(r, {}).find("n,samples,mean,variance,stderr,mu,variance_stderr\n2,100,0.125,0.5,0.0625,4,0.25\n"),
            std::string::npos);
}

TEST(Csv, TraceRows) {
  OptTrace t;
  TraceRecord vff;
  vff.iteration = 1;
  vff.phase = Phase::Vff;
  vff.c_vff = 0.5;
  vff.c_vhd = 2;
  vff.best_cost = 0.5;
  TraceRecord vhd;
  vhd.iteration = 1;
  vhd.c_vhd = 1;
  vhd.best_cost = 1;
  t.records = {vff};
  OptTrace second;
  second.records = {vhd};
  second.iterations = 1;
  t.iterations = 1;
  t.append(second);
  ASSERT_EQ(t.records.size(), 2u);
  EXPECT_EQ(t.records[1].iteration, 2);
  const auto rows = trace_csv_rows(t, 3);
  EXPECT_NE(rows.find("vhd,,3,1\n"), std::string::npos) << rows;
  EXPECT_NE(rows.find("vff,0.5,3,0.5\n"), std::string::npos) << rows;
}

TEST(ParamsFile, RoundTripAndDiagnostics) {
  ParamsFile p;
  p.num_qubits = 3;
  p.strings = {1, 2, 4};
  p.gamma = Vec::LinSpaced(3, -0.3, 1.0 / 3.0);
  p.theta = Vec::LinSpaced(5, 0.1, std::acos(-1.0));
  const auto back = ParamsFile::from_text(p.to_text());
  EXPECT_EQ(back.num_qubits, 3);
  EXPECT_EQ(back.strings, p.strings);
  EXPECT_EQ(back.gamma, p.gamma);
  EXPECT_EQ(back.theta, p.theta);
  const auto bad = [](const std::string& text) {
    try {
      ParamsFile::from_text(text, "p.txt");
    } catch (const std::invalid_argument& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_EQ(bad("qubits 1\ngamma 1\nZ 0.5\ntheta 1\nabc\n").rfind("p.txt:5:", 0), 0u);
  EXPECT_EQ(bad("qubits 2\ngamma 1\nZ 0.5\n").rfind("p.txt:3:", 0), 0u);
  EXPECT_EQ(bad("qubits 1\ngamma 1\nX 0.5\ntheta 0\n").rfind("p.txt:3:", 0), 0u);
  EXPECT_EQ(bad("qubits 1\ngamma 0\ntheta 0\nextra\n").rfind("p.txt:4:", 0), 0u);
  EXPECT_FALSE(bad("qubits 1\ngamma 1\nZ 0.5\ntheta 1\n").empty());
}

TEST(FormatDouble, RoundTrips) {
  for (double v : {0.1, 1.0 / 3.0, -2.5e-17, 1e300}) EXPECT_EQ(std::stod(format_double(v)), v);
}

}  // namespace
}  // namespace vhd
