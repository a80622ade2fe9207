// Copyright 2026 The dyncool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// dyncool: emit cooling, work, noise and gate-count curves as CSV/JSON.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "dyncool/errors.hpp"

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitCapacity = 3;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream f(path, std::ios::binary);
  if (!f) throw dyncool::FormatError("cannot read " + path);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

}  // namespace

namespace {

std::string describe(const std::string& name) {
  static const std::map<std::string, std::string> help = {
      {"population-curves", "target population after optimal cooling vs x"},
      {"temperature-curves", "final vs initial temperature, with both scaling laws"},
      {"work-curves", "minimal work per qubit vs x"},
      {"work-temperature", "large-N work per qubit vs bath temperature"},
      {"noise-sweep", "Monte Carlo cooling under gate noise over a p grid"},
      {"suboptimal", "clustered cooling: analytic table, plus simulation when n^r <= 16"},
      {"synth", "MCX circuit for a permutation file ('-' reads stdin)"},
      {"gatecount-scaling", "MCX and CNOT counts of the mirror protocol vs N"},
  };
  const auto it = help.find(name);
  return it == help.end() ? std::string{} : it->second;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dyncool: dynamic cooling of thermal qubit ensembles"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path, profile, out_dir = "out";
  std::optional<std::uint64_t> seed, shots;
  std::vector<std::string> overrides;
  std::string permutation_file;

  app.add_option("--config", config_path, "INI config file")->check(CLI::ExistingFile);
  app.add_option("--profile", profile, "named preset")
      ->check(CLI::IsMember(dyncool::cli::profile_names()));
  app.add_option("--seed", seed, "master RNG seed");
  app.add_option("--shots", shots, "Monte Carlo shots");
  app.add_option("--out", out_dir, "output directory")->capture_default_str();
  app.add_option("--set", overrides, "override section.key=value (repeatable)");

  for (const auto& name : dyncool::cli::command_names()) {
    auto* sub = app.add_subcommand(name, describe(name));
    if (name == "synth") sub->add_option("permutation", permutation_file, "permutation text file, - for stdin")->required();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    dyncool::cli::Config cfg;
    if (!profile.empty()) cfg.apply_profile(profile);
    if (!config_path.empty()) cfg.load_ini(config_path);
    for (const auto& o : overrides) cfg.set_override(o);
    if (seed) cfg.set("run.seed", std::to_string(*seed));
    if (shots) cfg.set("run.shots", std::to_string(*shots));

    const std::string input = command == "synth" ? read_input(permutation_file) : std::string{};
    dyncool::cli::run_command(command, cfg, out_dir, input);
    if (command == "synth") {
      std::ifstream gates(std::filesystem::path(out_dir) / "gates.txt");
      std::cout << gates.rdbuf();
    }
    std::cerr << command << ": wrote " << out_dir << "/manifest.json\n";
  } catch (const dyncool::CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const dyncool::FormatError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dyncool::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const dyncool::DegenerateError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
