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

#include "dyncool/work_cost.hpp"

#include <cmath>

#include "dyncool/errors.hpp"
#include "dyncool/protocols.hpp"
#include "numeric_util.hpp"

namespace dyncool {

namespace {

using boost::multiprecision::cpp_int;

WorkReport make_report(double half_units, int n_qubits, double omega, WorkMethod method) {
  WorkReport r;
  r.work_hbar_omega = 0.5 * half_units;
  r.work_joules = r.work_hbar_omega * quantum_energy(omega);
  r.per_qubit_hbar_omega = r.work_hbar_omega / n_qubits;
  r.per_qubit_joules = r.work_joules / n_qubits;
  r.n_qubits = n_qubits;
  r.method = method;
  return r;
}

long double class_log_probability(int n, int j, long double x) {
  long double lp = 0.0L;
  if (n - j > 0) lp += (n - j) * std::log1p(-x);
  if (j > 0) lp += j * std::log(x);
  return lp;
}

// Greedy matching of excitation classes (probability descending) against
// destination levels: the cold half (target 0) by energy, then the hot half.
// Counts are exact; each overlap contributes t * q_j * (E_dst - E_src).
double bucketed_half_units(int n, double x) {
  const long double lx = x;
  std::vector<cpp_int> src_count(static_cast<std::size_t>(n) + 1);
  std::vector<cpp_int> rest(static_cast<std::size_t>(n));
  cpp_int c = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) c = c * (n - j + 1) / j;
    src_count[static_cast<std::size_t>(j)] = c;
  }
  c = 1;
  for (int k = 0; k < n; ++k) {
    if (k > 0) c = c * (n - k) / k;
    rest[static_cast<std::size_t>(k)] = c;
  }
  NeumaierSum<long double> work;
  std::size_t j = 0;
  cpp_int available = src_count[0];
  for (int half = 0; half < 2; ++half) {
    for (int k = 0; k < n; ++k) {
      const int e_dst = 2 * (k + half) - n;
      cpp_int need = rest[static_cast<std::size_t>(k)];
      while (need > 0) {
        while (available == 0) available = src_count[++j];
        const cpp_int take = need < available ? need : available;
        const int e_src = 2 * static_cast<int>(j) - n;
        if (e_src != e_dst) {
          const long double lt = std::log(take.convert_to<long double>());
          work += std::exp(lt + class_log_probability(n, static_cast<int>(j), lx)) * (e_dst - e_src);
        }
        need -= take;
        available -= take;
      }
    }
  }
  return static_cast<double>(work.value());
}

}  // namespace

std::string to_string(WorkMethod method) {
  switch (method) {
    case WorkMethod::Auto: return "auto";
    case WorkMethod::Explicit: return "explicit";
    case WorkMethod::Bucketed: return "bucketed";
  }
  return "?";
}

WorkReport work_of_permutation(const Permutation& perm, const ThermalEnsembleSpec& spec) {
  spec.validate();
  if (perm.n_qubits() != spec.n_qubits) throw DomainError("permutation width differs from N");
  if (spec.n_qubits > kMaxExplicitQubits) throw CapacityError("work_of_permutation supports N <= 20");
  const int n = spec.n_qubits;
  const double x = spec.excited_population;
  auto prob = [&](StateIndex s) {
    const int j = excitation_count(s);
    return std::pow(1.0 - x, n - j) * std::pow(x, j);
  };
  NeumaierSum<long double> work;
  for (const auto& cycle : perm.cycles()) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const StateIndex from = cycle[i];
      const StateIndex to = cycle[(i + 1) % cycle.size()];
      // population of `from` lands on `to`
      work += static_cast<long double>(state_energy_half_units(to, n) - state_energy_half_units(from, n)) *
              prob(from);
    }
  }
  return make_report(static_cast<double>(work.value()), n, spec.omega, WorkMethod::Explicit);
}

WorkReport minimal_work(const ThermalEnsembleSpec& spec, WorkMethod method) {
  spec.validate();
  const int n = spec.n_qubits;
  const double x = spec.excited_population;
  if (method == WorkMethod::Auto) method = n <= kMaxExplicitQubits ? WorkMethod::Explicit : WorkMethod::Bucketed;
  if (method == WorkMethod::Explicit && n > kMaxExplicitQubits) {
    throw CapacityError("explicit minimal work supports N <= 20");
  }
  // no cooling is possible or needed at the ends of the range
  if (!(x > 0.0 && x < 0.5) || n < 2) return make_report(0.0, n, spec.omega, method);
  if (method == WorkMethod::Explicit) {
    WorkReport r = work_of_permutation(min_work_permutation(n, x), spec);
    r.method = WorkMethod::Explicit;
    return r;
  }
  return make_report(bucketed_half_units(n, x), n, spec.omega, WorkMethod::Bucketed);
}

double rescaled_work_limit(double p1) {
  if (!(p1 >= 0.0 && p1 <= 0.5)) throw DomainError("rescaled work limit needs 0 <= p1 <= 1/2");
  return 0.5 * (p1 - 2.0 * p1 * p1);
}

double rescaled_work_limit_reduced(double t) {
  if (!(t > 0.0)) throw DomainError("temperature must be positive");
  const double beta = 1.0 / t;
  // exp overflow just means the limit has already vanished
  if (beta > 700.0) return 0.0;
  return 0.5 * std::tanh(0.5 * beta) / (std::exp(beta) + 1.0);
}

double rescaled_work_limit_temperature(double kelvin, double omega) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  return rescaled_work_limit_reduced(kelvin / quantum_temperature(omega));
}

WorkReport suboptimal_work(double p1, int n, int r, double omega) {
  if (n <= 2) throw DegenerateError("clusters of n <= 2 qubits cannot cool");
  if (r < 1) throw DomainError("r must be >= 1");
  NeumaierSum<long double> total;
  double y = p1;
  long double clusters = std::pow(static_cast<long double>(n), r - 1);
  for (int k = 1; k <= r; ++k) {
    ThermalEnsembleSpec spec;
    spec.n_qubits = n;
    spec.omega = omega;
    spec.excited_population = y;
    total += clusters * minimal_work(spec).work_hbar_omega;
    y = excited_population_after_cooling(y, n);
    clusters /= n;
  }
  const int total_qubits = static_cast<int>(std::lround(std::pow(n, r)));
  WorkReport rep = make_report(2.0 * static_cast<double>(total.value()), total_qubits, omega, WorkMethod::Auto);
  return rep;
}

}  // namespace dyncool
