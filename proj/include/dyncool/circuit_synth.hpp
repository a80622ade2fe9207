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

#include <boost/multiprecision/cpp_int.hpp>

#include "dyncool/state_space.hpp"

namespace dyncool {

struct Control {
  int qubit = 0;
  int polarity = 1;  // 1 = closed circle, fires on |1>
  bool operator==(const Control&) const = default;
};

// NOT on `target` when every control matches its polarity.
struct McxGate {
  int target = 0;
  std::vector<Control> controls;
  bool operator==(const McxGate&) const = default;
};

struct GateList {
  int n_qubits = 0;
  std::vector<McxGate> gates;

  std::size_t size() const { return gates.size(); }
  // Throws DomainError on out-of-range qubits, target among controls, repeats.
  void validate() const;
};

// Bit masks over the N-bit state index, for fast classical execution.
struct CompiledGate {
  StateIndex control_mask = 0;
  StateIndex control_value = 0;
  StateIndex flip = 0;
  int operand_count = 0;  // controls + target
};
std::vector<CompiledGate> compile(const GateList& gates);

inline StateIndex apply_compiled(const CompiledGate& g, StateIndex s) {
  return (s & g.control_mask) == g.control_value ? s ^ g.flip : s;
}

// Differing bits are flipped from the most significant (qubit 0) down.
std::vector<StateIndex> gray_code(StateIndex b1, StateIndex b2, int n_qubits);
std::vector<std::string> gray_code(std::string_view b1, std::string_view b2);

// 2m-3 gates: the m-1 steps of the Gray code, then the first m-2 undone.
GateList synthesize_swap(StateIndex b1, StateIndex b2, int n_qubits);

// Cycle i1 -> i2 -> ... -> il as swaps (i1,i2), (i1,i3), ..., (i1,il).
GateList synthesize_cycle(const Permutation::Cycle& cycle, int n_qubits);

GateList synthesize_permutation(const Permutation& perm);

// Elementary CNOT model per MCX with k controls: alpha*k + beta (relative
// phase, linear) or q2*k^2 + q1*k + q0 (phase exact). k = 1 is one CNOT.
struct CnotModel {
  double alpha = 6.0;
  double beta = -8.0;
  double q2 = 2.0;
  double q1 = -1.0;
  double q0 = 0.0;

  long long per_gate(int controls, bool phase_exact) const;
};

// Requires N >= 3.
long long estimate_cnot_count(const GateList& gates, bool phase_exact, const CnotModel& model = {});

StateIndex execute_classically(const GateList& gates, StateIndex input);
std::string execute_classically(const GateList& gates, std::string_view input);

// One gate per line: "MCX t=<i> c=<j>:<pol>,...", preceded by "# qubits N".
std::string format_gate_list(const GateList& gates);
GateList parse_gate_list(std::string_view text);

// Relabels local qubit i as qubit_map[i] inside a register of total_qubits.
GateList embed(const GateList& local, const std::vector<int>& qubit_map, int total_qubits);

// Closed-form MCX count of the mirror protocol circuit:
// sum over 1 <= z < N/2 of C(N-1, z-1) swaps of 2N-1 gates each.
boost::multiprecision::cpp_int mirror_mcx_count(int n_qubits);

}  // namespace dyncool
