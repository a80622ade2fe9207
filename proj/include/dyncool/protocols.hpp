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
#include <string_view>
#include <vector>

#include "dyncool/state_space.hpp"

namespace dyncool {

enum class ProtocolKind { Mirror, Ppa, MinWork };

std::string to_string(ProtocolKind kind);
// Accepts "mirror", "ppa", "min-work" (also "minwork", "min_work").
ProtocolKind parse_protocol(std::string_view name);

// Swaps each target-0 state having fewer than N/2 zero bits with its
// complement. Independent of x.
Permutation mirror_permutation(int n_qubits);

// Partner pairing: the permuted distribution is non-increasing in
// lexicographic order. Requires 0 < x < 1/2 and N <= 20.
Permutation ppa_permutation(int n_qubits, double x);

// Maximal cooling with the lowest work: inside each target half the
// largest probabilities land on the lowest energies (ties by index).
Permutation min_work_permutation(int n_qubits, double x);

Permutation protocol_permutation(ProtocolKind kind, int n_qubits, double x);

struct MaximalityFailure {
  double x = 0.0;
  double achieved = 0.0;
  double optimal = 0.0;
};

struct MaximalityReport {
  bool maximal = true;
  std::vector<MaximalityFailure> failures;
  std::string describe() const;
};

// Brute-force check on x in {0.05, 0.10, ..., 0.45} at tolerance 1e-12. N <= 12.
MaximalityReport verify_maximal(const Permutation& perm, int n_qubits);

}  // namespace dyncool
