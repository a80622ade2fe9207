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

#include "dyncool/protocols.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dyncool/errors.hpp"

namespace dyncool {

namespace {

constexpr int kMaxMirrorQubits = 24;

void require_sortable(int n_qubits, double x) {
  if (n_qubits < 1) throw DomainError("N must be >= 1");
  if (!(x > 0.0 && x < 0.5)) {
    throw DegenerateError("probability ordering is degenerate unless 0 < x < 1/2");
  }
  if (n_qubits > kMaxExplicitQubits) throw CapacityError("explicit protocols support N <= 20");
}

// Excitation class of every lexicographic slot after a maximal-cooling
// sort. For x < 1/2 the per-state probability falls with the class index,
// so the descending order is just class 0, then class 1, ...
std::vector<int> sorted_classes(int n_qubits) {
  std::vector<int> out;
  out.reserve(std::size_t{1} << n_qubits);
  for (int j = 0; j <= n_qubits; ++j) {
    const auto count = *exact_binomial(n_qubits, j);
    out.insert(out.end(), count, j);
  }
  return out;
}

// Turns a slot -> wanted-class table into a permutation. Slots that already
// hold their class stay put; the rest are filled in ascending order, taking
// a 2-cycle partner when one exists, else the smallest free source.
Permutation realize(int n_qubits, const std::vector<int>& wanted) {
  const StateIndex size = StateIndex{1} << n_qubits;
  const std::size_t classes = static_cast<std::size_t>(n_qubits) + 1;
  // queue[a][b]: free sources of class a sitting on a slot that wants b, ascending
  std::vector<std::vector<std::vector<StateIndex>>> queue(classes, std::vector<std::vector<StateIndex>>(classes));
  std::vector<std::vector<std::size_t>> head(classes, std::vector<std::size_t>(classes, 0));
  std::vector<StateIndex> mismatched;
  for (StateIndex s = 0; s < size; ++s) {
    const int own = excitation_count(s);
    if (own != wanted[s]) {
      mismatched.push_back(s);
      queue[static_cast<std::size_t>(own)][static_cast<std::size_t>(wanted[s])].push_back(s);
    }
  }
  std::vector<char> used(size, 0);
  auto front = [&](std::size_t a, std::size_t b) -> StateIndex {
    auto& h = head[a][b];
    const auto& q = queue[a][b];
    while (h < q.size() && used[q[h]]) ++h;
    return h < q.size() ? q[h] : size;
  };
  std::unordered_map<StateIndex, StateIndex> mapping;
  mapping.reserve(mismatched.size());
  for (StateIndex pos : mismatched) {
    const auto want = static_cast<std::size_t>(wanted[pos]);
    const auto own = static_cast<std::size_t>(excitation_count(pos));
    StateIndex chosen = front(want, own);
    if (chosen == size) {
      for (std::size_t b = 0; b < classes; ++b) chosen = std::min(chosen, front(want, b));
    }
    if (chosen == size) throw std::logic_error("class counts do not balance");
    used[chosen] = 1;
    mapping.emplace(chosen, pos);
  }
  return Permutation::from_mapping(n_qubits, mapping);
}

}  // namespace

std::string to_string(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::Mirror: return "mirror";
    case ProtocolKind::Ppa: return "ppa";
    case ProtocolKind::MinWork: return "min-work";
  }
  return "?";
}

ProtocolKind parse_protocol(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "mirror") return ProtocolKind::Mirror;
  if (lower == "ppa") return ProtocolKind::Ppa;
  if (lower == "min-work" || lower == "minwork" || lower == "min_work") return ProtocolKind::MinWork;
  throw FormatError("unknown protocol: " + lower);
}

Permutation mirror_permutation(int n_qubits) {
  if (n_qubits < 1) throw DomainError("N must be >= 1");
  if (n_qubits > kMaxMirrorQubits) throw CapacityError("mirror permutation supports N <= 24");
  const StateIndex full = all_ones(n_qubits);
  std::vector<Permutation::Cycle> cycles;
  for (StateIndex s = 0; s < (StateIndex{1} << (n_qubits - 1)); ++s) {
    const int zeros = n_qubits - excitation_count(s);
    if (2 * zeros < n_qubits) cycles.push_back({s, s ^ full});
  }
  return Permutation(n_qubits, std::move(cycles));
}

Permutation ppa_permutation(int n_qubits, double x) {
  require_sortable(n_qubits, x);
  return realize(n_qubits, sorted_classes(n_qubits));
}

Permutation min_work_permutation(int n_qubits, double x) {
  require_sortable(n_qubits, x);
  const std::vector<int> classes = sorted_classes(n_qubits);
  const StateIndex half = StateIndex{1} << (n_qubits - 1);
  std::vector<int> wanted(classes.size());
  for (StateIndex base : {StateIndex{0}, half}) {
    std::vector<StateIndex> slots(half);
    std::iota(slots.begin(), slots.end(), base);
    std::stable_sort(slots.begin(), slots.end(), [](StateIndex a, StateIndex b) {
      return excitation_count(a) < excitation_count(b);
    });
    for (StateIndex i = 0; i < half; ++i) wanted[slots[i]] = classes[base + i];
  }
  return realize(n_qubits, wanted);
}

Permutation protocol_permutation(ProtocolKind kind, int n_qubits, double x) {
  switch (kind) {
    case ProtocolKind::Mirror: return mirror_permutation(n_qubits);
    case ProtocolKind::Ppa: return ppa_permutation(n_qubits, x);
    case ProtocolKind::MinWork: return min_work_permutation(n_qubits, x);
  }
  throw DomainError("unknown protocol");
}

std::string MaximalityReport::describe() const {
  if (maximal) return "maximal";
  std::ostringstream out;
  out.precision(12);
  out << "not maximal:";
  for (const auto& f : failures) out << " x=" << f.x << ": " << f.achieved << " != " << f.optimal << ";";
  return out.str();
}

MaximalityReport verify_maximal(const Permutation& perm, int n_qubits) {
  if (n_qubits > 12) throw CapacityError("verify_maximal brute force supports N <= 12");
  if (perm.n_qubits() != n_qubits) throw DomainError("permutation width differs from N");
  MaximalityReport report;
  for (int i = 1; i <= 9; ++i) {
    const double x = 0.05 * i;
    ThermalEnsembleSpec spec;
    spec.n_qubits = n_qubits;
    spec.excited_population = x;
    const double achieved = target_excited_population(apply_permutation(thermal_distribution(spec), perm));
    const double optimal = excited_population_after_cooling(x, n_qubits);
    if (std::abs(achieved - optimal) > 1e-12) {
      report.maximal = false;
      report.failures.push_back({x, achieved, optimal});
    }
  }
  return report;
}

}  // namespace dyncool
