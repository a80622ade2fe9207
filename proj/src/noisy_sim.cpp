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

#include "dyncool/noisy_sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <thread>

#include "dyncool/errors.hpp"

namespace dyncool {

namespace {

constexpr int kMaxPropagationQubits = 10;

// splitmix64 finalizer
std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct PreparedGate {
  CompiledGate gate;
  std::vector<StateIndex> operands;  // one mask per operand qubit
  int insertions = 1;
};

std::vector<PreparedGate> prepare(const GateList& gates, const NoiseModel& noise) {
  const auto compiled = compile(gates);
  std::vector<PreparedGate> out;
  out.reserve(compiled.size());
  for (std::size_t i = 0; i < compiled.size(); ++i) {
    PreparedGate pg;
    pg.gate = compiled[i];
    const McxGate& g = gates.gates[i];
    pg.operands.push_back(qubit_mask(g.target, gates.n_qubits));
    for (const Control& c : g.controls) pg.operands.push_back(qubit_mask(c.qubit, gates.n_qubits));
    pg.insertions = noise.insertions_per_gate(compiled[i].operand_count);
    out.push_back(std::move(pg));
  }
  return out;
}

std::uint64_t simulate_shots(const std::vector<PreparedGate>& gates, int n_qubits, double x, const NoiseModel& noise,
                             std::uint64_t seed, std::uint64_t first, std::uint64_t last) {
  const StateIndex target = qubit_mask(0, n_qubits);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uint64_t hits = 0;
  for (std::uint64_t shot = first; shot < last; ++shot) {
    std::mt19937_64 rng(derive_stream_seed(seed, shot));
    StateIndex s = 0;
    for (int q = 0; q < n_qubits; ++q) {
      if (unit(rng) < x) s |= qubit_mask(q, n_qubits);
    }
    for (const PreparedGate& pg : gates) {
      s = apply_compiled(pg.gate, s);
      if (noise.p <= 0.0) continue;
      const auto k = pg.operands.size();
      for (int rep = 0; rep < pg.insertions; ++rep) {
        if (noise.locus == NoiseLocus::OneOperand) {
          if (unit(rng) >= noise.p) continue;
          const auto pauli = std::uniform_int_distribution<int>(0, 2)(rng);
          const auto which = std::uniform_int_distribution<std::size_t>(0, k - 1)(rng);
          if (pauli != 2) s ^= pg.operands[which];  // X or Y flips, Z does not
        } else {
          for (StateIndex m : pg.operands) {
            if (unit(rng) >= noise.p) continue;
            if (std::uniform_int_distribution<int>(0, 2)(rng) != 2) s ^= m;
          }
        }
      }
    }
    hits += (s & target) ? 1 : 0;
  }
  return hits;
}

}  // namespace

std::string to_string(NoiseLocus locus) {
  return locus == NoiseLocus::OneOperand ? "one-operand" : "all-operands";
}

std::string to_string(NoiseGranularity granularity) {
  return granularity == NoiseGranularity::Mcx ? "mcx" : "elementary";
}

NoiseLocus parse_noise_locus(const std::string& name) {
  if (name == "one-operand" || name == "one") return NoiseLocus::OneOperand;
  if (name == "all-operands" || name == "all") return NoiseLocus::AllOperands;
  throw FormatError("unknown noise locus: " + name);
}

NoiseGranularity parse_noise_granularity(const std::string& name) {
  if (name == "mcx") return NoiseGranularity::Mcx;
  if (name == "elementary") return NoiseGranularity::Elementary;
  throw FormatError("unknown noise granularity: " + name);
}

void NoiseModel::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("noise probability must lie in [0, 1]");
}

int NoiseModel::insertions_per_gate(int operand_count) const {
  if (granularity == NoiseGranularity::Mcx) return 1;
  return static_cast<int>(std::max(1LL, cnot_model.per_gate(operand_count - 1, false)));
}

std::uint64_t derive_stream_seed(std::uint64_t master_seed, std::uint64_t shot_index) {
  return mix64(mix64(master_seed) ^ (shot_index + 0x9e3779b97f4a7c15ULL));
}

SimResult make_sim_result(std::uint64_t shots, std::uint64_t hits, std::uint64_t seed, double omega) {
  SimResult r;
  r.shots = shots;
  r.excited_hits = hits;
  r.seed = seed;
  r.p1_estimate = shots ? static_cast<double>(hits) / static_cast<double>(shots) : 0.0;
  r.std_error = shots ? std::sqrt(r.p1_estimate * (1.0 - r.p1_estimate) / static_cast<double>(shots)) : 0.0;
  r.temperature = temperature_from_population(r.p1_estimate, omega);
  if (r.temperature.is_finite()) {
    // T = c / ln(1/p - 1)  =>  |dT/dp| = c / (ln^2 * p (1-p))
    const double p = r.p1_estimate;
    const double l = std::log1p((1.0 - 2.0 * p) / p);
    const double c = quantum_temperature(omega);
    r.temperature_std_error_kelvin = c / (l * l * p * (1.0 - p)) * r.std_error;
  }
  return r;
}

SimResult run_cooling_sim(const GateList& gates, const ThermalEnsembleSpec& spec, const NoiseModel& noise,
                          std::uint64_t shots, std::uint64_t seed, unsigned threads) {
  spec.validate();
  noise.validate();
  if (shots < 1) throw DomainError("shots must be >= 1");
  if (gates.n_qubits != spec.n_qubits) throw DomainError("gate list width differs from N");
  const auto prepared = prepare(gates, noise);
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, shots));
  std::vector<std::uint64_t> partial(threads, 0);
  auto work = [&](unsigned t) {
    const std::uint64_t first = shots * t / threads;
    const std::uint64_t last = shots * (t + 1) / threads;
    partial[t] = simulate_shots(prepared, spec.n_qubits, spec.excited_population, noise, seed, first, last);
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    for (auto& th : pool) th.join();
  }
  std::uint64_t hits = 0;
  for (auto h : partial) hits += h;
  return make_sim_result(shots, hits, seed, spec.omega);
}

ExplicitDistribution propagate_distribution_noisy(const GateList& gates, const ThermalEnsembleSpec& spec,
                                                  const NoiseModel& noise) {
  noise.validate();
  if (spec.n_qubits > kMaxPropagationQubits) throw CapacityError("exact propagation supports N <= 10");
  if (gates.n_qubits != spec.n_qubits) throw DomainError("gate list width differs from N");
  const auto prepared = prepare(gates, noise);
  const ExplicitDistribution init = thermal_distribution(spec);
  std::vector<double> p(init.probabilities().begin(), init.probabilities().end());
  std::vector<double> q(p.size());
  const double flip = 2.0 * noise.p / 3.0;
  for (const PreparedGate& pg : prepared) {
    for (StateIndex s = 0; s < p.size(); ++s) q[apply_compiled(pg.gate, s)] = p[s];
    p.swap(q);
    if (noise.p <= 0.0) continue;
    for (int rep = 0; rep < pg.insertions; ++rep) {
      if (noise.locus == NoiseLocus::OneOperand) {
        const double share = flip / static_cast<double>(pg.operands.size());
        for (StateIndex s = 0; s < p.size(); ++s) {
          double v = (1.0 - flip) * p[s];
          for (StateIndex m : pg.operands) v += share * p[s ^ m];
          q[s] = v;
        }
        p.swap(q);
      } else {
        for (StateIndex m : pg.operands) {
          for (StateIndex s = 0; s < p.size(); ++s) q[s] = (1.0 - flip) * p[s] + flip * p[s ^ m];
          p.swap(q);
        }
      }
    }
  }
  return ExplicitDistribution(spec.n_qubits, std::move(p));
}

std::vector<SweepRow> noise_sweep(const ThermalEnsembleSpec& spec, ProtocolKind protocol,
                                  const std::vector<double>& p_grid, std::uint64_t shots, std::uint64_t seed,
                                  const NoiseModel& base_noise, unsigned threads) {
  const GateList gates =
      synthesize_permutation(protocol_permutation(protocol, spec.n_qubits, spec.excited_population));
  std::vector<SweepRow> rows;
  rows.reserve(p_grid.size());
  for (double p : p_grid) {
    NoiseModel noise = base_noise;
    noise.p = p;
    rows.push_back({to_string(protocol), spec.n_qubits, p, run_cooling_sim(gates, spec, noise, shots, seed, threads)});
  }
  return rows;
}

}  // namespace dyncool
