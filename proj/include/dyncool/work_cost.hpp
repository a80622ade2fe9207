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

#include "dyncool/state_space.hpp"

namespace dyncool {

enum class WorkMethod { Auto, Explicit, Bucketed };
std::string to_string(WorkMethod method);

// Work is kept in units of hbar*omega; the joule fields are derived at the edge.
struct WorkReport {
  double work_hbar_omega = 0.0;
  double work_joules = 0.0;
  double per_qubit_hbar_omega = 0.0;
  double per_qubit_joules = 0.0;
  int n_qubits = 0;
  WorkMethod method = WorkMethod::Explicit;
};

// W = sum_i E_i (p'_i - p_i) over the states the permutation moves. N <= 20.
WorkReport work_of_permutation(const Permutation& perm, const ThermalEnsembleSpec& spec);

// Minimal work over all maximal-cooling permutations. Auto picks explicit
// enumeration for N <= 20 and the bucket matcher above that.
WorkReport minimal_work(const ThermalEnsembleSpec& spec, WorkMethod method = WorkMethod::Auto);

// Large-N limit (1/2)(x - 2x^2) of minimal work per qubit, in hbar*omega.
double rescaled_work_limit(double p1);
// Same limit written through the bath temperature; t = k_B T / (hbar omega).
double rescaled_work_limit_reduced(double t);
double rescaled_work_limit_temperature(double kelvin, double omega);

// r-step clustered cooling with clusters of n: sum_k n^{r-k} Wbar(f_n^{k-1}(x), n).
WorkReport suboptimal_work(double p1, int n, int r, double omega);

}  // namespace dyncool
