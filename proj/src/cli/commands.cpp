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

#include "cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dyncool/analytics.hpp"
#include "dyncool/circuit_synth.hpp"
#include "dyncool/errors.hpp"
#include "dyncool/noisy_sim.hpp"
#include "dyncool/protocols.hpp"
#include "dyncool/suboptimal.hpp"
#include "dyncool/work_cost.hpp"

namespace dyncool::cli {

namespace {

using nlohmann::json;

std::vector<double> linear_grid(double lo, double hi, long long points, const std::string& what) {
  if (points < 2 || !(hi > lo)) throw FormatError("invalid grid for " + what);
  std::vector<double> out;
  for (long long i = 0; i < points; ++i) out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(points - 1));
  out.back() = hi;
  return out;
}

std::vector<double> log_grid(double lo, double hi, long long points, const std::string& what) {
  if (points < 2 || !(lo > 0.0) || !(hi > lo)) throw FormatError("invalid grid for " + what);
  std::vector<double> out;
  const double a = std::log10(lo), b = std::log10(hi);
  for (long long i = 0; i < points; ++i) out.push_back(std::pow(10.0, a + (b - a) * static_cast<double>(i) / static_cast<double>(points - 1)));
  return out;
}

std::vector<int> positive_list(const Config& cfg, const std::string& key) {
  auto v = cfg.get_ints(key);
  if (v.empty()) throw FormatError(key + " is empty");
  for (int n : v) {
    if (n < 1) throw FormatError(key + " entries must be >= 1");
  }
  return v;
}

CnotModel cnot_model(const Config& cfg) {
  CnotModel m;
  m.alpha = cfg.get_double("cnot.alpha");
  m.beta = cfg.get_double("cnot.beta");
  m.q2 = cfg.get_double("cnot.q2");
  m.q1 = cfg.get_double("cnot.q1");
  m.q0 = cfg.get_double("cnot.q0");
  return m;
}

NoiseModel noise_model_impl(const Config& cfg) {
  NoiseModel m;
  m.locus = parse_noise_locus(cfg.get("noise.locus"));
  m.granularity = parse_noise_granularity(cfg.get("noise.granularity"));
  m.cnot_model = cnot_model(cfg);
  return m;
}

std::uint64_t shots_of(const Config& cfg) {
  const auto shots = cfg.get_u64("run.shots");
  if (shots < 1) throw FormatError("run.shots must be >= 1");
  return shots;
}

json temperature_mk(const EffectiveTemperature& t) {
  switch (t.kind) {
    case TemperatureKind::Finite: return t.millikelvin();
    case TemperatureKind::Zero: return 0.0;
    case TemperatureKind::Infinite:
    case TemperatureKind::Saturated: return std::numeric_limits<double>::infinity();
  }
  return nullptr;
}

}  // namespace

NoiseModel noise_model(const Config& cfg) { return noise_model_impl(cfg); }

Table population_curves(const Config& cfg) {
  Table t{{"x", "N", "p1_prime"}, {}};
  const auto xs = linear_grid(0.0, 1.0, cfg.get_int("population.x_points"), "population.x_points");
  for (int n : positive_list(cfg, "population.n_list")) {
    for (double x : xs) t.add({x, n, excited_population_after_cooling(x, n)});
  }
  return t;
}

Table temperature_curves(const Config& cfg) {
  Table t{{"kT_over_hw", "T_mK", "s", "N", "kTprime_over_hw", "Tprime_mK", "lowT_estimate_mK", "highT_estimate_mK"}, {}};
  const double omega = cfg.get_double("physics.omega");
  const double unit = quantum_temperature(omega);
  auto grid = log_grid(cfg.get_double("temperature.t_min"), cfg.get_double("temperature.t_max"),
                       cfg.get_int("temperature.points"), "temperature");
  grid.push_back(configured_temperature(cfg) / unit);
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (int s : positive_list(cfg, "temperature.s_list")) {
    const int n = 2 * s - 1;
    for (double red : grid) {
      const double tp = reduced_final_temperature(red, n);
      const double t_mk = red * unit * 1e3;
      t.add({red, t_mk, s, n, tp, tp * unit * 1e3, t_mk / s, 0.5 * std::sqrt(std::numbers::pi / s) * t_mk});
    }
  }
  return t;
}

Table work_curves(const Config& cfg) {
  Table t{{"x", "N", "W_hw", "W_per_qubit_hw", "w_limit_hw"}, {}};
  const double omega = cfg.get_double("physics.omega");
  const auto xs = linear_grid(0.0, 0.5, cfg.get_int("work.x_points"), "work.x_points");
  for (int n : positive_list(cfg, "work.n_list")) {
    for (double x : xs) {
      ThermalEnsembleSpec spec{n, omega, x};
      const WorkReport w = minimal_work(spec, n <= 12 ? WorkMethod::Explicit : WorkMethod::Bucketed);
      t.add({x, n, w.work_hbar_omega, w.per_qubit_hbar_omega, rescaled_work_limit(x)});
    }
  }
  return t;
}

Table work_temperature(const Config& cfg) {
  Table t{{"kT_over_hw", "T_mK", "p1", "w_limit_hw", "marker"}, {}};
  const double unit = quantum_temperature(cfg.get_double("physics.omega"));
  auto grid = log_grid(cfg.get_double("work_temperature.t_min"), cfg.get_double("work_temperature.t_max"),
                       cfg.get_int("work_temperature.points"), "work_temperature");
  const auto markers = cfg.get_doubles("work_temperature.markers");
  grid.insert(grid.end(), markers.begin(), markers.end());
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
  for (double red : grid) {
    const bool marker = std::find(markers.begin(), markers.end(), red) != markers.end();
    t.add({red, red * unit * 1e3, population_from_reduced_temperature(red), rescaled_work_limit_reduced(red), marker});
  }
  return t;
}

Table noise_sweep_table(const Config& cfg) {
  Table t{{"protocol", "N", "p", "shots", "seed", "p1_final", "std_error", "T_final_mK", "inverted", "T_std_error_mK"}, {}};
  const double omega = cfg.get_double("physics.omega");
  const double kelvin = configured_temperature(cfg);
  const ProtocolKind protocol = parse_protocol(cfg.get("noise.protocol"));
  const auto p_grid = cfg.get_doubles("noise.p_grid");
  const auto seed = cfg.get_u64("run.seed");
  const auto threads = static_cast<unsigned>(cfg.get_int("run.threads"));
  for (int n : positive_list(cfg, "noise.n_list")) {
    const auto spec = ThermalEnsembleSpec::from_temperature(n, kelvin, omega);
    for (const SweepRow& row : noise_sweep(spec, protocol, p_grid, shots_of(cfg), seed, noise_model_impl(cfg), threads)) {
      const SimResult& r = row.result;
      t.add({row.protocol, row.n_qubits, row.p, r.shots, r.seed, r.p1_estimate, r.std_error,
             temperature_mk(r.temperature), r.temperature.inverted, r.temperature_std_error_kelvin * 1e3});
    }
  }
  return t;
}

Table suboptimal_sim_table(const Config& cfg) {
  Table t{{"n", "r", "N", "protocol", "p", "shots", "seed", "mcx_count", "p1_analytic", "p1_noiseless", "p1_final",
           "std_error", "T_final_mK", "inverted", "T_std_error_mK"},
          {}};
  const double omega = cfg.get_double("physics.omega");
  const auto n = static_cast<int>(cfg.get_int("suboptimal.n"));
  const auto r = static_cast<int>(cfg.get_int("suboptimal.r"));
  const ProtocolKind protocol = parse_protocol(cfg.get("suboptimal.protocol"));
  const ClusterPlan plan = make_cluster_plan(n, r);
  const auto spec = ThermalEnsembleSpec::from_temperature(plan.total_qubits, configured_temperature(cfg), omega);
  const auto seed = cfg.get_u64("run.seed");
  for (double p : cfg.get_doubles("noise.p_grid")) {
    NoiseModel noise = noise_model_impl(cfg);
    noise.p = p;
    const CoolingReport rep = orchestrate_suboptimal(spec, plan, protocol, noise, shots_of(cfg), seed,
                                                     static_cast<unsigned>(cfg.get_int("run.threads")));
    const SimResult& s = rep.sim;
    t.add({n, r, plan.total_qubits, to_string(protocol), p, s.shots, s.seed, rep.mcx_count, rep.analytic_p1,
           rep.noiseless_p1, s.p1_estimate, s.std_error, temperature_mk(s.temperature), s.temperature.inverted,
           s.temperature_std_error_kelvin * 1e3});
  }
  return t;
}

Table suboptimal_analytic_table(const Config& cfg) {
  Table t{{"x", "n", "r", "N", "p1_suboptimal", "p1_optimal", "W_r_hw", "W_r_per_qubit_hw", "Wbar_optimal_per_qubit_hw",
           "T_mK", "Tr_exact_mK", "Tr_lowT_estimate_mK"},
          {}};
  const double omega = cfg.get_double("physics.omega");
  const auto n = static_cast<int>(cfg.get_int("suboptimal.n"));
  const auto r_max = static_cast<int>(cfg.get_int("suboptimal.r"));
  const double kelvin = configured_temperature(cfg);
  auto xs = linear_grid(0.0, 0.5, cfg.get_int("work.x_points"), "work.x_points");
  for (int r = 1; r <= r_max; ++r) {
    const ClusterPlan plan = make_cluster_plan(n, r);
    const SuboptimalTemperature st = suboptimal_temperature(kelvin, omega, n, r);
    for (double x : xs) {
      const WorkReport w = suboptimal_work(x, n, r, omega);
      const WorkReport opt = minimal_work({plan.total_qubits, omega, x}, WorkMethod::Bucketed);
      t.add({x, n, r, plan.total_qubits, population_recursion(x, n, r),
             excited_population_after_cooling(x, plan.total_qubits), w.work_hbar_omega, w.per_qubit_hbar_omega,
             opt.per_qubit_hbar_omega, kelvin * 1e3, temperature_mk(st.exact), st.low_t_estimate_kelvin * 1e3});
    }
  }
  return t;
}

Table gatecount_scaling(const Config& cfg) {
  Table t{{"N", "mcx_count", "mcx_synthesized", "cnot_linear", "cnot_phase_exact", "ratio_vs_N_minus_2"}, {}};
  const auto lo = static_cast<int>(cfg.get_int("gatecount.n_min"));
  const auto hi = static_cast<int>(cfg.get_int("gatecount.n_max"));
  const auto synth_max = static_cast<int>(cfg.get_int("gatecount.synth_max"));
  if (lo < 3 || hi < lo || hi > 60) throw FormatError("gatecount range must satisfy 3 <= n_min <= n_max <= 60");
  const CnotModel model = cnot_model(cfg);
  std::map<int, double> counts;
  for (int n = lo; n <= hi; ++n) {
    const auto mcx = mirror_mcx_count(n);
    const double mcx_d = mcx.convert_to<double>();
    counts[n] = mcx_d;
    json synthesized = nullptr;
    if (n <= synth_max) synthesized = synthesize_permutation(mirror_permutation(n)).size();
    json ratio = nullptr;
    if (counts.count(n - 2)) ratio = mcx_d / counts[n - 2];
    t.add({n, mcx_d, synthesized, mcx_d * static_cast<double>(model.per_gate(n - 1, false)),
           mcx_d * static_cast<double>(model.per_gate(n - 1, true)), ratio});
  }
  return t;
}

SynthOutput synth(const Config& cfg, const std::string& permutation_text) {
  const Permutation perm = parse_permutation(permutation_text);
  const GateList gates = synthesize_permutation(perm);
  SynthOutput out;
  out.gate_text = format_gate_list(gates);
  out.counts.header = {"N", "cycles", "moved_states", "mcx_count", "cnot_linear", "cnot_phase_exact"};
  json lin = nullptr, quad = nullptr;
  if (perm.n_qubits() >= 3) {
    const CnotModel model = cnot_model(cfg);
    lin = estimate_cnot_count(gates, false, model);
    quad = estimate_cnot_count(gates, true, model);
  }
  out.counts.add({perm.n_qubits(), perm.cycles().size(), perm.moved_count(), gates.size(), lin, quad});
  return out;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {"population-curves", "temperature-curves", "work-curves",
                                                 "work-temperature",  "noise-sweep",        "suboptimal",
                                                 "synth",             "gatecount-scaling"};
  return names;
}

void run_command(const std::string& name, const Config& cfg, const std::string& out_dir, const std::string& input) {
  RunWriter writer(out_dir, name);
  if (name == "population-curves") {
    writer.write_table("population_curves", population_curves(cfg));
  } else if (name == "temperature-curves") {
    writer.write_table("temperature_curves", temperature_curves(cfg));
  } else if (name == "work-curves") {
    writer.write_table("work_curves", work_curves(cfg));
  } else if (name == "work-temperature") {
    writer.write_table("work_temperature", work_temperature(cfg));
  } else if (name == "noise-sweep") {
    writer.write_table("noise_sweep", noise_sweep_table(cfg));
  } else if (name == "suboptimal") {
    writer.write_table("suboptimal_analytic", suboptimal_analytic_table(cfg));
    writer.write_table("suboptimal_sim", suboptimal_sim_table(cfg));
  } else if (name == "synth") {
    const SynthOutput out = synth(cfg, input);
    writer.write_text("gates.txt", out.gate_text);
    writer.write_table("synth_counts", out.counts);
  } else if (name == "gatecount-scaling") {
    writer.write_table("gatecount_scaling", gatecount_scaling(cfg));
  } else {
    throw FormatError("unknown command: " + name);
  }
  writer.finish(cfg, cfg.get_u64("run.seed"));
}

}  // namespace dyncool::cli
