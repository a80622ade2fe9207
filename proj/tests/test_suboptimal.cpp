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

#include <doctest.h>

#include <cmath>

#include "dyncool/errors.hpp"
#include "dyncool/suboptimal.hpp"
#include "dyncool/work_cost.hpp"

using namespace dyncool;

TEST_CASE("population recursion") {
  CHECK(population_recursion(0.1, 3, 0) == 0.1);
  const double f1 = 3 * 0.01 - 2 * 0.001;
  CHECK(population_recursion(0.1, 3, 1) == doctest::Approx(f1));
  CHECK(population_recursion(0.1, 3, 2) == doctest::Approx(3 * f1 * f1 - 2 * f1 * f1 * f1).epsilon(1e-14));
  CHECK(population_recursion(0.1, 3, 2) == doctest::Approx(0.002308096).epsilon(1e-6));
  CHECK(population_recursion(0.1, 3, 2) > excited_population_after_cooling(0.1, 9));
  for (int r = 1; r <= 3; ++r) {
    const int n_total = static_cast<int>(std::pow(3, r));
    for (int i = 1; i < 50; ++i) CHECK(population_recursion(0.01 * i, 3, r) >= excited_population_after_cooling(0.01 * i, n_total) - 1e-15);
  }
}

TEST_CASE("suboptimal temperature") {
  const double unit = quantum_temperature(5e9);
  const double t = 0.05 * unit;
  const auto r1 = suboptimal_temperature(t, 5e9, 3, 1);
  CHECK(r1.exact.kelvin == doctest::Approx(minimal_final_temperature(t, 5e9, 3).kelvin).epsilon(1e-12));
  const auto r2 = suboptimal_temperature(t, 5e9, 3, 2);
  // odd clusters of n = 3 halve the temperature per step at low T
  CHECK(r2.exact.kelvin / t == doctest::Approx(0.25).epsilon(0.15));
  CHECK(r2.low_t_estimate_kelvin / t == doctest::Approx(4.0 / 9.0).epsilon(1e-12));
  CHECK(r2.low_t_exponent == doctest::Approx(std::log(2) / std::log(3) - 1));
  CHECK(r2.low_t_exponent == doctest::Approx(-0.3691).epsilon(1e-3));
  CHECK(high_t_suboptimal_exponent(3) == doctest::Approx(std::log(M_PI / 2) / std::log(3) - 0.5));
  CHECK_THROWS_AS(suboptimal_temperature(t, 5e9, 2, 2), DegenerateError);
}

TEST_CASE("cluster plan") {
  const auto plan = make_cluster_plan(3, 2);
  CHECK(plan.total_qubits == 9);
  REQUIRE(plan.schedule.size() == 2);
  CHECK(plan.schedule[0] == std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}, {6, 7, 8}});
  CHECK(plan.schedule[1] == std::vector<std::vector<int>>{{0, 3, 6}});
  for (int r = 1; r <= 5; ++r) {
    const auto p = make_cluster_plan(3, r);
    CHECK(p.sub_circuit_count() == static_cast<std::size_t>((std::pow(3, r) - 1) / 2));
    CHECK(p.sub_circuit_count() <= static_cast<std::size_t>(r * std::pow(3, r - 1)));
    for (int k = 0; k < r; ++k) {
      CHECK(p.schedule[k].size() == static_cast<std::size_t>(std::pow(3, r - k - 1)));
      for (const auto& c : p.schedule[k]) CHECK(c.size() == 3);  // dimension 2^n per step
    }
  }
  CHECK_THROWS_AS(make_cluster_plan(2, 2), DegenerateError);
}

TEST_CASE("suboptimal circuit") {
  const auto plan = make_cluster_plan(3, 2);
  const GateList g = build_suboptimal_circuit(plan, ProtocolKind::Mirror, 0.2);
  CHECK(g.size() == 20);
  CHECK(synthesize_permutation(mirror_permutation(9)).size() > 20);
  for (const auto& gate : g.gates) CHECK(gate.controls.size() == 2);
}

TEST_CASE("noiseless orchestration is exact") {
  ThermalEnsembleSpec spec;
  spec.excited_population = 0.2;
  for (auto kind : {ProtocolKind::Mirror, ProtocolKind::Ppa, ProtocolKind::MinWork}) {
    const auto rep = orchestrate_suboptimal(spec, make_cluster_plan(3, 2), kind, NoiseModel{}, 100000, 9);
    CHECK(rep.noiseless_p1 == doctest::Approx(population_recursion(0.2, 3, 2)).epsilon(1e-13));
    CHECK(std::abs(rep.sim.p1_estimate - rep.analytic_p1) < 4 * std::sqrt(rep.analytic_p1 * (1 - rep.analytic_p1) / 1e5));
    CHECK(rep.sub_circuits == 4);
  }
  CHECK_THROWS_AS(orchestrate_suboptimal(spec, make_cluster_plan(3, 3), ProtocolKind::Mirror, NoiseModel{}, 10, 1), CapacityError);
}

TEST_CASE("cold qubits after the first step carry f_n(x) and stay independent") {
  const auto plan = make_cluster_plan(3, 2);
  ThermalEnsembleSpec spec;
  spec.n_qubits = 9;
  spec.excited_population = 0.3;
  const GateList step1 = build_suboptimal_circuit(plan, ProtocolKind::Mirror, 0.3, 1);
  const auto compiled = compile(step1);
  const auto d = thermal_distribution(spec);
  std::vector<double> out(d.size());
  for (StateIndex s = 0; s < d.size(); ++s) {
    StateIndex t = s;
    for (const auto& g : compiled) t = apply_compiled(g, t);
    out[t] = d[s];
  }
  const ExplicitDistribution after(9, out);
  const double f = excited_population_after_cooling(0.3, 3);
  for (int q : {0, 3, 6}) CHECK(after.qubit_excited_population(q) == doctest::Approx(f).epsilon(1e-13));
  double joint = 0;
  const StateIndex m = qubit_mask(0, 9) | qubit_mask(3, 9) | qubit_mask(6, 9);
  for (StateIndex s = 0; s < after.size(); ++s)
    if ((s & m) == m) joint += after[s];
  CHECK(joint == doctest::Approx(f * f * f).epsilon(1e-12));
}
