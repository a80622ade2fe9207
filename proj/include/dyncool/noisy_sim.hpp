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

#include <cstdint>
#include <string>
#include <vector>

#include "dyncool/analytics.hpp"
#include "dyncool/circuit_synth.hpp"
#include "dyncool/protocols.hpp"
#include "dyncool/state_space.hpp"

namespace dyncool {

// Where the Pauli lands: one operand picked uniformly, or every operand
// independently with probability p.
enum class NoiseLocus { OneOperand, AllOperands };
// Mcx: one insertion chance per MCX. Elementary: as many as the modelled
// CNOT count of that MCX (relative-phase model).
enum class NoiseGranularity { Mcx, Elementary };

std::string to_string(NoiseLocus locus);
std::string to_string(NoiseGranularity granularity);
NoiseLocus parse_noise_locus(const std::string& name);
NoiseGranularity parse_noise_granularity(const std::string& name);

struct NoiseModel {
  double p = 0.0;
  NoiseLocus locus = NoiseLocus::OneOperand;
  NoiseGranularity granularity = NoiseGranularity::Mcx;
  CnotModel cnot_model{};

  void validate() const;
  int insertions_per_gate(int operand_count) const;
};

struct SimResult {
  std::uint64_t shots = 0;
  std::uint64_t excited_hits = 0;
  double p1_estimate = 0.0;
  double std_error = 0.0;  // sqrt(p(1-p)/shots)
  EffectiveTemperature temperature;
  double temperature_std_error_kelvin = 0.0;  // delta method, 0 when not finite
  std::uint64_t seed = 0;
};

// Stream seed for one shot; fixed so results do not depend on scheduling.
std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t shot_index);

// threads = 0 uses the hardware concurrency. The result is identical for
// any thread count.
SimResult run_cooling_sim(const GateList& gates, const ThermalEnsembleSpec& spec, const NoiseModel& noise,
                          std::uint64_t shots, std::uint64_t seed, unsigned threads = 0);

// Exact diagonal propagation through gates and noise. N <= 10.
ExplicitDistribution propagate_distribution_noisy(const GateList& gates, const ThermalEnsembleSpec& spec,
                                                  const NoiseModel& noise);

SimResult make_sim_result(std::uint64_t shots, std::uint64_t hits, std::uint64_t seed, double omega);

struct SweepRow {
  std::string protocol;
  int n_qubits = 0;
  double p = 0.0;
  SimResult result;
};

// One row per p for the protocol circuit at spec.n_qubits.
std::vector<SweepRow> noise_sweep(const ThermalEnsembleSpec& spec, ProtocolKind protocol,
                                  const std::vector<double>& p_grid, std::uint64_t shots, std::uint64_t seed,
                                  const NoiseModel& base_noise = {}, unsigned threads = 0);

}  // namespace dyncool
