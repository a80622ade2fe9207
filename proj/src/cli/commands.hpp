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

#pragma once

#include <string>

#include "cli/config.hpp"
#include "cli/manifest.hpp"
#include "dyncool/noisy_sim.hpp"

namespace dyncool::cli {

// Noise locus, granularity and CNOT model from the noise.* and cnot.* keys; p is left at 0.
NoiseModel noise_model(const Config& cfg);

Table population_curves(const Config& cfg);
Table temperature_curves(const Config& cfg);
Table work_curves(const Config& cfg);
Table work_temperature(const Config& cfg);
Table noise_sweep_table(const Config& cfg);
Table suboptimal_sim_table(const Config& cfg);
Table suboptimal_analytic_table(const Config& cfg);
Table gatecount_scaling(const Config& cfg);

struct SynthOutput {
  std::string gate_text;
  Table counts;
};
SynthOutput synth(const Config& cfg, const std::string& permutation_text);

// Names accepted by run_command, in help order.
const std::vector<std::string>& command_names();

// Runs one command, writing tables, any extra text and manifest.json into
// out_dir. `input` is the permutation text for synth and ignored otherwise.
void run_command(const std::string& name, const Config& cfg, const std::string& out_dir, const std::string& input);

}  // namespace dyncool::cli
