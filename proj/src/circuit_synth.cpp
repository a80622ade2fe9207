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

#include "dyncool/circuit_synth.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "dyncool/errors.hpp"

namespace dyncool {

namespace {

int flipped_qubit(StateIndex a, StateIndex b, int n_qubits) {
  const StateIndex d = a ^ b;
  return n_qubits - 1 - (63 - __builtin_clzll(d));
}

McxGate step_gate(StateIndex from, StateIndex to, int n_qubits) {
  McxGate g;
  g.target = flipped_qubit(from, to, n_qubits);
  for (int q = 0; q < n_qubits; ++q) {
    if (q != g.target) g.controls.push_back({q, qubit_value(from, q, n_qubits)});
  }
  return g;
}

void check_width(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxIndexQubits) throw CapacityError("gate lists support 1..63 qubits");
}

}  // namespace

void GateList::validate() const {
  check_width(n_qubits);
  for (const McxGate& g : gates) {
    if (g.target < 0 || g.target >= n_qubits) throw DomainError("gate target out of range");
    std::set<int> seen{g.target};
    for (const Control& c : g.controls) {
      if (c.qubit < 0 || c.qubit >= n_qubits) throw DomainError("control qubit out of range");
      if (c.polarity != 0 && c.polarity != 1) throw DomainError("control polarity must be 0 or 1");
      if (!seen.insert(c.qubit).second) throw DomainError("control overlaps target or another control");
    }
  }
}

std::vector<CompiledGate> compile(const GateList& gates) {
  gates.validate();
  std::vector<CompiledGate> out;
  out.reserve(gates.size());
  for (const McxGate& g : gates.gates) {
    CompiledGate c;
    c.flip = qubit_mask(g.target, gates.n_qubits);
    for (const Control& ctl : g.controls) {
      const StateIndex m = qubit_mask(ctl.qubit, gates.n_qubits);
      c.control_mask |= m;
      if (ctl.polarity) c.control_value |= m;
    }
    c.operand_count = static_cast<int>(g.controls.size()) + 1;
    out.push_back(c);
  }
  return out;
}

std::vector<StateIndex> gray_code(StateIndex b1, StateIndex b2, int n_qubits) {
  check_width(n_qubits);
  if (b1 == b2) throw DegenerateError("gray code endpoints must differ");
  if (b1 > all_ones(n_qubits) || b2 > all_ones(n_qubits)) throw DomainError("state out of range");
  std::vector<StateIndex> code{b1};
  StateIndex cur = b1;
  for (int q = 0; q < n_qubits; ++q) {
    const StateIndex m = qubit_mask(q, n_qubits);
    if ((cur ^ b2) & m) {
      cur ^= m;
      code.push_back(cur);
    }
  }
  return code;
}

std::vector<std::string> gray_code(std::string_view b1, std::string_view b2) {
  int n1 = 0, n2 = 0;
  const StateIndex a = parse_bitstring(b1, &n1);
  const StateIndex b = parse_bitstring(b2, &n2);
  if (n1 != n2) throw DomainError("bitstrings differ in width");
  std::vector<std::string> out;
  for (StateIndex s : gray_code(a, b, n1)) out.push_back(to_bitstring(s, n1));
  return out;
}

GateList synthesize_swap(StateIndex b1, StateIndex b2, int n_qubits) {
  const auto code = gray_code(b1, b2, n_qubits);
  GateList out{n_qubits, {}};
  for (std::size_t k = 1; k < code.size(); ++k) out.gates.push_back(step_gate(code[k - 1], code[k], n_qubits));
  // uncompute: the first m-2 gates again, last to first
  for (std::size_t k = code.size() - 2; k >= 1; --k) {
    McxGate copy = out.gates[k - 1];
    out.gates.push_back(std::move(copy));
  }
  return out;
}

GateList synthesize_cycle(const Permutation::Cycle& cycle, int n_qubits) {
  if (cycle.size() < 2) throw DomainError("a cycle needs at least two states");
  std::set<StateIndex> distinct(cycle.begin(), cycle.end());
  if (distinct.size() != cycle.size()) throw DomainError("cycle contains duplicate states");
  GateList out{n_qubits, {}};
  for (std::size_t i = 1; i < cycle.size(); ++i) {
    GateList swap = synthesize_swap(cycle[0], cycle[i], n_qubits);
    out.gates.insert(out.gates.end(), swap.gates.begin(), swap.gates.end());
  }
  return out;
}

GateList synthesize_permutation(const Permutation& perm) {
  GateList out{perm.n_qubits(), {}};
  for (const auto& cycle : perm.cycles()) {
    GateList part = synthesize_cycle(cycle, perm.n_qubits());
    out.gates.insert(out.gates.end(), part.gates.begin(), part.gates.end());
  }
  return out;
}

long long CnotModel::per_gate(int controls, bool phase_exact) const {
  if (controls <= 0) return 0;
  if (controls == 1) return 1;
  const double k = controls;
  const double v = phase_exact ? q2 * k * k + q1 * k + q0 : alpha * k + beta;
  return std::max(1LL, std::llround(v));
}

long long estimate_cnot_count(const GateList& gates, bool phase_exact, const CnotModel& model) {
  if (gates.n_qubits < 3) throw DomainError("CNOT estimate needs N >= 3");
  long long total = 0;
  for (const McxGate& g : gates.gates) total += model.per_gate(static_cast<int>(g.controls.size()), phase_exact);
  return total;
}

StateIndex execute_classically(const GateList& gates, StateIndex input) {
  if (input > all_ones(gates.n_qubits)) throw DomainError("input state out of range");
  StateIndex s = input;
  for (const CompiledGate& g : compile(gates)) s = apply_compiled(g, s);
  return s;
}

std::string execute_classically(const GateList& gates, std::string_view input) {
  int n = 0;
  const StateIndex s = parse_bitstring(input, &n);
  if (n != gates.n_qubits) throw DomainError("input width differs from gate list width");
  return to_bitstring(execute_classically(gates, s), n);
}

std::string format_gate_list(const GateList& gates) {
  std::ostringstream out;
  out << "# qubits " << gates.n_qubits << "\n";
  for (const McxGate& g : gates.gates) {
    out << "MCX t=" << g.target << " c=";
    for (std::size_t i = 0; i < g.controls.size(); ++i) {
      if (i) out << ',';
      out << g.controls[i].qubit << ':' << g.controls[i].polarity;
    }
    out << "\n";
  }
  return out.str();
}

GateList parse_gate_list(std::string_view text) {
  GateList out;
  int max_qubit = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& why) { throw FormatError("line " + std::to_string(line_no) + ": " + why); };
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) {
      std::istringstream d(line.substr(hash + 1));
      std::string key;
      int n = 0;
      if (d >> key >> n && key == "qubits") out.n_qubits = n;
      line.erase(hash);
    }
    std::istringstream tok(line);
    std::string word;
    if (!(tok >> word)) continue;
    if (word != "MCX") fail("expected MCX");
    McxGate g;
    std::string t, c;
    if (!(tok >> t) || t.rfind("t=", 0) != 0) fail("expected t=<qubit>");
    try {
      g.target = std::stoi(t.substr(2));
    } catch (const std::exception&) {
      fail("bad target");
    }
    max_qubit = std::max(max_qubit, g.target);
    if (tok >> c) {
      if (c.rfind("c=", 0) != 0) fail("expected c=<qubit>:<polarity>,...");
      std::istringstream items(c.substr(2));
      std::string item;
      while (std::getline(items, item, ',')) {
        if (item.empty()) continue;
        const auto colon = item.find(':');
        if (colon == std::string::npos) fail("control needs <qubit>:<polarity>");
        Control ctl;
        try {
          ctl.qubit = std::stoi(item.substr(0, colon));
          ctl.polarity = std::stoi(item.substr(colon + 1));
        } catch (const std::exception&) {
          fail("bad control " + item);
        }
        max_qubit = std::max(max_qubit, ctl.qubit);
        g.controls.push_back(ctl);
      }
    }
    out.gates.push_back(std::move(g));
  }
  if (out.n_qubits == 0) out.n_qubits = max_qubit + 1;
  if (out.n_qubits <= 0) throw FormatError("cannot infer qubit count");
  out.validate();
  return out;
}

GateList embed(const GateList& local, const std::vector<int>& qubit_map, int total_qubits) {
  if (static_cast<int>(qubit_map.size()) != local.n_qubits) throw DomainError("qubit map size differs from gate list width");
  std::set<int> distinct(qubit_map.begin(), qubit_map.end());
  if (distinct.size() != qubit_map.size()) throw DomainError("qubit map must be injective");
  GateList out{total_qubits, {}};
  out.gates.reserve(local.size());
  for (const McxGate& g : local.gates) {
    McxGate e;
    e.target = qubit_map.at(static_cast<std::size_t>(g.target));
    for (const Control& c : g.controls) e.controls.push_back({qubit_map.at(static_cast<std::size_t>(c.qubit)), c.polarity});
    out.gates.push_back(std::move(e));
  }
  out.validate();
  return out;
}

boost::multiprecision::cpp_int mirror_mcx_count(int n_qubits) {
  if (n_qubits < 1) throw DomainError("N must be >= 1");
  boost::multiprecision::cpp_int swaps = 0;
  boost::multiprecision::cpp_int c = 1;  // C(N-1, z-1)
  for (int z = 1; 2 * z < n_qubits; ++z) {
    if (z > 1) c = c * (n_qubits - z + 1) / (z - 1);
    swaps += c;
  }
  return swaps * (2 * n_qubits - 1);
}

}  // namespace dyncool
