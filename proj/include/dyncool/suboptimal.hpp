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
#include <vector>

#include "dyncool/analytics.hpp"
#include "dyncool/circuit_synth.hpp"
#include "dyncool/noisy_sim.hpp"
#include "dyncool/protocols.hpp"

namespace dyncool {

// f_n^k(p1): k-fold optimal cooling of n-qubit clusters.
double population_recursion(double p1, int n, int k);

struct SuboptimalTemperature {
  EffectiveTemperature exact;    // from the recursion
  double low_t_estimate_kelvin;  // N^{ln2/ln n - 1} T
  double low_t_exponent;         // ln2/ln n - 1
  double high_t_exponent;        // ln(pi/2)/ln n - 1/2
};

double low_t_suboptimal_exponent(int n);
double high_t_suboptimal_exponent(int n);

// Requires T > 0, n >= 3, r >= 1.
SuboptimalTemperature suboptimal_temperature(double kelvin, double omega, int n, int r);

// schedule[k][c] lists the qubits of cluster c at step k+1, cold qubit first.
// Step 1 groups consecutive qubits; later steps group the previous cold
// qubits in order. Qubit 0 ends up as the final target.
struct ClusterPlan {
  int n = 3;
  int r = 1;
  int total_qubits = 3;
  std::vector<std::vector<std::vector<int>>> schedule;

  std::size_t sub_circuit_count() const;
};

ClusterPlan make_cluster_plan(int n, int r);

// Sub-circuits of the chosen protocol embedded per cluster, steps 1..steps
// (all steps when steps < 0). PPA and min-work use the step's input population.
GateList build_suboptimal_circuit(const ClusterPlan& plan, ProtocolKind protocol, double x, int steps = -1);

struct CoolingReport {
  ClusterPlan plan;
  ProtocolKind protocol = ProtocolKind::Mirror;
  std::size_t mcx_count = 0;
  std::size_t sub_circuits = 0;
  double analytic_p1 = 0.0;   // f_n^r(x)
  double noiseless_p1 = 0.0;  // exact push of the full distribution
  SimResult sim;
};

inline constexpr int kMaxOrchestratedQubits = 16;

// spec.excited_population and spec.omega are used; spec.n_qubits is ignored
// in favour of n^r. Capacity error above 16 qubits.
CoolingReport orchestrate_suboptimal(const ThermalEnsembleSpec& spec, const ClusterPlan& plan, ProtocolKind protocol,
                                     const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed,
                                     unsigned threads = 0);

}  // namespace dyncool
