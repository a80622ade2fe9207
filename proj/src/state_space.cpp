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

#include "dyncool/state_space.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_set>

#include "dyncool/errors.hpp"
#include "numeric_util.hpp"

namespace dyncool {

namespace {

void require_index_qubits(int n_qubits) {
  if (n_qubits < 1 || n_qubits > kMaxIndexQubits) {
    throw CapacityError("state indices support 1..63 qubits");
  }
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string to_bitstring(StateIndex state, int n_qubits) {
  std::string out(static_cast<std::size_t>(n_qubits), '0');
  for (int q = 0; q < n_qubits; ++q) {
    if (qubit_value(state, q, n_qubits)) out[static_cast<std::size_t>(q)] = '1';
  }
  return out;
}

StateIndex parse_bitstring(std::string_view bits, int* n_qubits) {
  bits = trim(bits);
  if (bits.empty() || bits.size() > kMaxIndexQubits) {
    throw FormatError("bitstring must have 1..63 characters");
  }
  StateIndex value = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') throw FormatError("bitstring contains non-binary character");
    value = (value << 1) | static_cast<StateIndex>(c == '1');
  }
  if (n_qubits) *n_qubits = static_cast<int>(bits.size());
  return value;
}

int state_energy_half_units(StateIndex state, int n_qubits) {
  return 2 * excitation_count(state) - n_qubits;
}

double state_energy(StateIndex state, int n_qubits, double omega) {
  return 0.5 * quantum_energy(omega) * state_energy_half_units(state, n_qubits);
}

int target_energy_sign(StateIndex state, int n_qubits) {
  return target_bit(state, n_qubits) ? 1 : -1;
}

ExplicitDistribution::ExplicitDistribution(int n_qubits, std::vector<double> probabilities)
    : n_qubits_(n_qubits), probabilities_(std::move(probabilities)) {
  if (n_qubits < 1 || n_qubits > kMaxExplicitQubits) {
    throw CapacityError("explicit distributions support 1..20 qubits; use BucketedDistribution");
  }
  if (probabilities_.size() != (std::size_t{1} << n_qubits)) {
    throw DomainError("distribution length must be 2^N");
  }
}

double ExplicitDistribution::total() const {
  NeumaierSum<double> sum;
  for (double p : probabilities_) sum += p;
  return sum.value();
}

double ExplicitDistribution::qubit_excited_population(int qubit) const {
  const StateIndex mask = qubit_mask(qubit, n_qubits_);
  NeumaierSum<double> sum;
  for (StateIndex s = 0; s < probabilities_.size(); ++s) {
    if (s & mask) sum += probabilities_[s];
  }
  return sum.value();
}

ExplicitDistribution thermal_distribution(const ThermalEnsembleSpec& spec) {
  spec.validate();
  if (spec.n_qubits > kMaxExplicitQubits) {
    throw CapacityError("thermal_distribution supports N <= 20; use bucketed_distribution");
  }
  const int n = spec.n_qubits;
  const double x = spec.excited_population;
  std::vector<double> per_class(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) per_class[static_cast<std::size_t>(j)] = std::pow(1.0 - x, n - j) * std::pow(x, j);
  std::vector<double> p(std::size_t{1} << n);
  for (StateIndex s = 0; s < p.size(); ++s) p[s] = per_class[static_cast<std::size_t>(excitation_count(s))];
  return ExplicitDistribution(n, std::move(p));
}

double target_excited_population(const ExplicitDistribution& dist) {
  return dist.qubit_excited_population(0);
}

BucketedDistribution::BucketedDistribution(int n_qubits, double excited_population,
                                           std::vector<Bucket> buckets)
    : n_qubits_(n_qubits), excited_population_(excited_population), buckets_(std::move(buckets)) {}

double BucketedDistribution::probability_per_state(int excitations) const {
  return static_cast<double>(std::exp(buckets_.at(static_cast<std::size_t>(excitations)).log_probability));
}

double BucketedDistribution::bucket_mass(int excitations) const {
  const Bucket& b = buckets_.at(static_cast<std::size_t>(excitations));
  return static_cast<double>(std::exp(b.log_multiplicity + b.log_probability));
}

double BucketedDistribution::energy_joules(int excitations, double omega) const {
  return 0.5 * quantum_energy(omega) * buckets_.at(static_cast<std::size_t>(excitations)).energy_half_units;
}

double BucketedDistribution::total_mass() const {
  LogSumExp acc;
  for (const Bucket& b : buckets_) acc.add(b.log_multiplicity + b.log_probability);
  return static_cast<double>(acc.value());
}

BucketedDistribution bucketed_distribution(const ThermalEnsembleSpec& spec) {
  spec.validate();
  const int n = spec.n_qubits;
  const long double x = spec.excited_population;
  std::vector<Bucket> buckets;
  buckets.reserve(static_cast<std::size_t>(n) + 1);
  boost::multiprecision::cpp_int multiplicity = 1;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) multiplicity = multiplicity * (n - j + 1) / j;
    Bucket b;
    b.excitations = j;
    b.multiplicity = multiplicity;
    b.log_multiplicity = log_binomial(n, j);
    b.log_probability = 0.0L;
    if (n - j > 0) b.log_probability += (n - j) * std::log1p(-x);
    if (j > 0) b.log_probability += j * std::log(x);
    b.energy_half_units = 2 * j - n;
    buckets.push_back(std::move(b));
  }
  return BucketedDistribution(n, spec.excited_population, std::move(buckets));
}

Permutation::Permutation(int n_qubits, std::vector<Cycle> cycles) : n_qubits_(n_qubits) {
  require_index_qubits(n_qubits);
  const StateIndex limit = all_ones(n_qubits);
  std::unordered_set<StateIndex> seen;
  for (Cycle& cycle : cycles) {
    if (cycle.size() < 2) continue;
    for (StateIndex s : cycle) {
      if (s > limit) throw DomainError("state index out of range for permutation width");
      if (!seen.insert(s).second) throw DomainError("permutation cycles must be disjoint");
    }
    std::rotate(cycle.begin(), std::min_element(cycle.begin(), cycle.end()), cycle.end());
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      image_.emplace(cycle[i], cycle[(i + 1) % cycle.size()]);
    }
    cycles_.push_back(std::move(cycle));
  }
  std::sort(cycles_.begin(), cycles_.end(),
            [](const Cycle& a, const Cycle& b) { return a.front() < b.front(); });
}

Permutation Permutation::from_mapping(int n_qubits,
                                      const std::unordered_map<StateIndex, StateIndex>& mapping) {
  std::vector<Cycle> cycles;
  std::unordered_set<StateIndex> visited;
  std::vector<StateIndex> starts;
  starts.reserve(mapping.size());
  for (const auto& [from, to] : mapping) {
    if (from != to) starts.push_back(from);
  }
  std::sort(starts.begin(), starts.end());
  for (StateIndex start : starts) {
    if (visited.count(start)) continue;
    Cycle cycle;
    StateIndex s = start;
    do {
      visited.insert(s);
      cycle.push_back(s);
      auto it = mapping.find(s);
      if (it == mapping.end()) throw DomainError("mapping is not a bijection");
      s = it->second;
    } while (s != start && cycle.size() <= mapping.size());
    if (s != start) throw DomainError("mapping is not a bijection");
    cycles.push_back(std::move(cycle));
  }
  return Permutation(n_qubits, std::move(cycles));
}

StateIndex Permutation::image(StateIndex state) const {
  auto it = image_.find(state);
  return it == image_.end() ? state : it->second;
}

Permutation Permutation::inverse() const {
  std::vector<Cycle> reversed;
  reversed.reserve(cycles_.size());
  for (const Cycle& c : cycles_) reversed.emplace_back(c.rbegin(), c.rend());
  return Permutation(n_qubits_, std::move(reversed));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.n_qubits_ != n_qubits_) throw DomainError("permutation widths differ");
  std::unordered_map<StateIndex, StateIndex> mapping;
  for (const auto& [from, to] : other.image_) mapping[from] = image(to);
  for (const auto& [from, to] : image_) {
    if (!other.image_.count(from)) mapping[from] = to;
  }
  return from_mapping(n_qubits_, mapping);
}

ExplicitDistribution apply_permutation(const ExplicitDistribution& dist, const Permutation& perm) {
  if (perm.n_qubits() != dist.n_qubits()) throw DomainError("permutation and distribution widths differ");
  std::vector<double> out(dist.probabilities().begin(), dist.probabilities().end());
  for (const Permutation::Cycle& cycle : perm.cycles()) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      out[cycle[(i + 1) % cycle.size()]] = dist[cycle[i]];
    }
  }
  return ExplicitDistribution(dist.n_qubits(), std::move(out));
}

std::string format_permutation(const Permutation& perm) {
  std::ostringstream out;
  out << "# qubits " << perm.n_qubits() << "\n";
  for (const Permutation::Cycle& cycle : perm.cycles()) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out << " -> ";
      out << to_bitstring(cycle[i], perm.n_qubits());
    }
    out << "\n";
  }
  return out.str();
}

Permutation parse_permutation(std::string_view text) {
  int n_qubits = 0;
  std::vector<Permutation::Cycle> cycles;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    std::string_view body = line;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      std::istringstream directive{std::string(line.substr(hash + 1))};
      std::string key;
      int width = 0;
      if (directive >> key >> width && key == "qubits") {
        if (n_qubits && n_qubits != width) throw FormatError("conflicting qubit counts");
        n_qubits = width;
      }
      body = line.substr(0, hash);
    }
    body = trim(body);
    if (body.empty()) continue;
    Permutation::Cycle cycle;
    while (true) {
      const auto arrow = body.find("->");
      int width = 0;
      cycle.push_back(parse_bitstring(body.substr(0, arrow), &width));
      if (n_qubits && width != n_qubits) {
        throw FormatError("line " + std::to_string(line_no) + ": inconsistent bitstring width");
      }
      n_qubits = width;
      if (arrow == std::string_view::npos) break;
      body = body.substr(arrow + 2);
    }
    if (cycle.size() < 2) throw FormatError("line " + std::to_string(line_no) + ": cycle needs two states");
    cycles.push_back(std::move(cycle));
  }
  if (!n_qubits) throw FormatError("cannot infer qubit count from empty permutation text");
  return Permutation(n_qubits, std::move(cycles));
}

}  // namespace dyncool
