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

#include "dyncool/suboptimal.hpp"

#include <cmath>
#include <numbers>

#include "dyncool/errors.hpp"

namespace dyncool {

double population_recursion(double p1, int n, int k) {
  if (n < 1) throw DomainError("n must be >= 1");
  if (k < 0) throw DomainError("k must be >= 0");
  double y = p1;
  for (int i = 0; i < k; ++i) y = excited_population_after_cooling(y, n);
  return y;
}

double low_t_suboptimal_exponent(int n) { return std::log(2.0) / std::log(static_cast<double>(n)) - 1.0; }

double high_t_suboptimal_exponent(int n) {
  return std::log(std::numbers::pi / 2.0) / std::log(static_cast<double>(n)) - 0.5;
}

SuboptimalTemperature suboptimal_temperature(double kelvin, double omega, int n, int r) {
  if (n <= 2) throw DegenerateError("clusters of n <= 2 qubits cannot cool");
  if (r < 1) throw DomainError("r must be >= 1");
  if (!(kelvin > 0.0)) throw DomainError("temperature must be positive");
  const double x = population_from_temperature(kelvin, omega);
  SuboptimalTemperature out;
  out.exact = temperature_from_population(population_recursion(x, n, r), omega);
  out.low_t_exponent = low_t_suboptimal_exponent(n);
  out.high_t_exponent = high_t_suboptimal_exponent(n);
  out.low_t_estimate_kelvin = std::pow(std::pow(static_cast<double>(n), r), out.low_t_exponent) * kelvin;
  return out;
}

std::size_t ClusterPlan::sub_circuit_count() const {
  std::size_t total = 0;
  for (const auto& step : schedule) total += step.size();
  return total;
}

ClusterPlan make_cluster_plan(int n, int r) {
  if (n < 3) throw DegenerateError("clusters of n <= 2 qubits cannot cool");
  if (r < 1) throw DomainError("r must be >= 1");
  const double total = std::pow(static_cast<double>(n), r);
  if (total > 1 << 20) throw CapacityError("cluster plan larger than 2^20 qubits");
  ClusterPlan plan;
  plan.n = n;
  plan.r = r;
  plan.total_qubits = static_cast<int>(std::lround(total));
  std::vector<int> active(static_cast<std::size_t>(plan.total_qubits));
  for (int q = 0; q < plan.total_qubits; ++q) active[static_cast<std::size_t>(q)] = q;
  for (int k = 1; k <= r; ++k) {
    std::vector<std::vector<int>> clusters;
    std::vector<int> cold;
    for (std::size_t i = 0; i < active.size(); i += static_cast<std::size_t>(n)) {
      clusters.emplace_back(active.begin() + static_cast<std::ptrdiff_t>(i),
                            active.begin() + static_cast<std::ptrdiff_t>(i) + n);
      cold.push_back(active[i]);
    }
    plan.schedule.push_back(std::move(clusters));
    active = std::move(cold);
  }
  return plan;
}

GateList build_suboptimal_circuit(const ClusterPlan& plan, ProtocolKind protocol, double x, int steps) {
  if (steps < 0 || steps > plan.r) steps = plan.r;
  GateList out{plan.total_qubits, {}};
  double y = x;
  for (int k = 0; k < steps; ++k) {
    const GateList local = synthesize_permutation(protocol_permutation(protocol, plan.n, y));
    for (const auto& cluster : plan.schedule[static_cast<std::size_t>(k)]) {
      GateList e = embed(local, cluster, plan.total_qubits);
      out.gates.insert(out.gates.end(), e.gates.begin(), e.gates.end());
    }
    y = excited_population_after_cooling(y, plan.n);
  }
  return out;
}

CoolingReport orchestrate_suboptimal(const ThermalEnsembleSpec& spec, const ClusterPlan& plan, ProtocolKind protocol,
                                     const NoiseModel& noise, std::uint64_t shots, std::uint64_t seed,
                                     unsigned threads) {
  if (plan.total_qubits > kMaxOrchestratedQubits) throw CapacityError("orchestration supports n^r <= 16");
  ThermalEnsembleSpec full = spec;
  full.n_qubits = plan.total_qubits;
  full.validate();
  CoolingReport report;
  report.plan = plan;
  report.protocol = protocol;
  const GateList gates = build_suboptimal_circuit(plan, protocol, full.excited_population);
  report.mcx_count = gates.size();
  report.sub_circuits = plan.sub_circuit_count();
  report.analytic_p1 = population_recursion(full.excited_population, plan.n, plan.r);

  const auto compiled = compile(gates);
  const ExplicitDistribution init = thermal_distribution(full);
  std::vector<double> p(init.probabilities().begin(), init.probabilities().end());
  std::vector<double> q(p.size());
  for (const CompiledGate& g : compiled) {
    for (StateIndex s = 0; s < p.size(); ++s) q[apply_compiled(g, s)] = p[s];
    p.swap(q);
  }
  report.noiseless_p1 = target_excited_population(ExplicitDistribution(full.n_qubits, std::move(p)));
  report.sim = run_cooling_sim(gates, full, noise, shots, seed, threads);
  return report;
}

}  // namespace dyncool
