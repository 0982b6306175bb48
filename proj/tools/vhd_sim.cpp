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

// Command-line driver: diagonalize, fastforward, variance-scan, verify.

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vhd/experiment.hpp"

namespace {

struct CommonArgs {
  std::string config;
  std::optional<long long> seed;
  std::string out;
  std::string mode;
  std::optional<long long> shots;
  std::vector<std::string> overrides;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config, "key = value configuration file");
  cmd->add_option("--seed", args.seed, "master RNG seed");
  cmd->add_option("--out", args.out, "output directory");
  cmd->add_option("--mode", args.mode, "cost evaluation mode")->check(CLI::IsMember({"exact", "sampled"}));
  cmd->add_option("--shots", args.shots, "shots per c-term in sampled mode");
  cmd->add_option("--set", args.overrides, "override a config key (key=value), repeatable");
}

vhd::ExperimentConfig resolve(const CommonArgs& args) {
  vhd::KeyValueConfig kv;
  if (!args.config.empty()) kv = vhd::KeyValueConfig::load(args.config);
  for (const auto& o : args.overrides) kv.set_assignment(o);
  // Dedicated flags win over both the file and --set.
  if (args.seed) kv.set("seed", std::to_string(*args.seed));
  if (!args.out.empty()) kv.set("out", args.out);
  if (!args.mode.empty()) kv.set("mode", args.mode);
  if (args.shots) kv.set("shots", std::to_string(*args.shots));
  return vhd::ExperimentConfig::from(kv);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational Hamiltonian diagonalization simulator"};
  app.require_subcommand(1);
  CommonArgs args;
  struct Command {
    const char* name;
    const char* help;
    int (*run)(const vhd::ExperimentConfig&, std::ostream&);
  };
  const Command commands[] = {
      {"diagonalize", "train W and D by VFF pre-training followed by VHD", vhd::cmd_diagonalize},
      {"fastforward", "infidelity-vs-time sweeps from trained parameters", vhd::cmd_fastforward},
      {"variance-scan", "gradient variance over random initializations", vhd::cmd_variance_scan},
      {"verify", "run the property suites", vhd::cmd_verify},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    subs.push_back(app.add_subcommand(c.name, c.help));
    add_common(subs.back(), args);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? vhd::kExitOk : vhd::kExitUsage;
  }

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (!subs[i]->parsed()) continue;
    try {
      return commands[i].run(resolve(args), std::cout);
    } catch (const vhd::IoError& e) {
      std::cerr << "error: " << e.what() << "\n";
      return vhd::kExitUsage;
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: " << e.what() << "\n";
      return vhd::kExitUsage;
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return vhd::kExitFailure;
    }
  }
  return vhd::kExitUsage;
}
