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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "dyncool/analytics.hpp"

namespace dyncool {

// Computational basis state |i_1 i_2 ... i_N>. Bit order is MSB-first:
// qubit 0 (the target) is the most significant of the N low bits, so
// numeric order equals the lexicographic order of the bitstrings.
using StateIndex = std::uint64_t;

inline constexpr int kMaxExplicitQubits = 20;
inline constexpr int kMaxIndexQubits = 63;

inline StateIndex qubit_mask(int qubit, int n_qubits) {
  return StateIndex{1} << (n_qubits - 1 - qubit);
}
inline int qubit_value(StateIndex state, int qubit, int n_qubits) {
  return static_cast<int>((state >> (n_qubits - 1 - qubit)) & 1U);
}
inline int target_bit(StateIndex state, int n_qubits) { return qubit_value(state, 0, n_qubits); }
inline int excitation_count(StateIndex state) { return __builtin_popcountll(state); }
inline StateIndex all_ones(int n_qubits) {
  return n_qubits >= 64 ? ~StateIndex{0} : (StateIndex{1} << n_qubits) - 1;
}

std::string to_bitstring(StateIndex state, int n_qubits);
// Parses "0110"; the width of the string is the qubit count.
StateIndex parse_bitstring(std::string_view bits, int* n_qubits = nullptr);

// Total energy 2j - N in units of hbar*omega/2 for a state with j excitations.
int state_energy_half_units(StateIndex state, int n_qubits);
// Total energy in joules.
double state_energy(StateIndex state, int n_qubits, double omega);
// Sign of the target-qubit energy: -1 for |0...>, +1 for |1...>.
int target_energy_sign(StateIndex state, int n_qubits);

// Dense diagonal distribution over all 2^N basis states.
class ExplicitDistribution {
 public:
  ExplicitDistribution(int n_qubits, std::vector<double> probabilities);

  int n_qubits() const { return n_qubits_; }
  std::size_t size() const { return probabilities_.size(); }
  double operator[](StateIndex state) const { return probabilities_[state]; }
  std::span<const double> probabilities() const { return probabilities_; }
  double total() const;
  // Marginal excited population of an arbitrary qubit.
  double qubit_excited_population(int qubit) const;

 private:
  int n_qubits_;
  std::vector<double> probabilities_;
};

ExplicitDistribution thermal_distribution(const ThermalEnsembleSpec& spec);
double target_excited_population(const ExplicitDistribution& dist);

// One degenerate excitation class of the thermal product state.
struct Bucket {
  int excitations = 0;
  boost::multiprecision::cpp_int multiplicity;  // C(N, j)
  long double log_multiplicity = 0.0L;
  long double log_probability = 0.0L;           // per state: (N-j) ln(1-x) + j ln x
  int energy_half_units = 0;                     // 2j - N
};

// Sparse thermal distribution: N + 1 buckets, j ascending.
class BucketedDistribution {
 public:
  BucketedDistribution(int n_qubits, double excited_population, std::vector<Bucket> buckets);

  int n_qubits() const { return n_qubits_; }
  double excited_population() const { return excited_population_; }
  const std::vector<Bucket>& buckets() const { return buckets_; }
  double probability_per_state(int excitations) const;
  double bucket_mass(int excitations) const;
  double energy_joules(int excitations, double omega) const;
  double total_mass() const;

 private:
  int n_qubits_;
  double excited_population_;
  std::vector<Bucket> buckets_;
};

BucketedDistribution bucketed_distribution(const ThermalEnsembleSpec& spec);

// Sparse bijection on basis states, stored as disjoint cycles in the
// state-mapping direction: cycle (a, b, c) sends a -> b -> c -> a, i.e. the
// population of a ends up on b. Fixed points are implicit.
class Permutation {
 public:
  using Cycle = std::vector<StateIndex>;

  explicit Permutation(int n_qubits) : n_qubits_(n_qubits) {}
  // Validates and canonicalizes: trivial cycles dropped, each cycle rotated
  // to start at its smallest element, cycles sorted by that element.
  Permutation(int n_qubits, std::vector<Cycle> cycles);
  static Permutation identity(int n_qubits) { return Permutation(n_qubits); }
  // Builds from (source, image) pairs covering every moved state.
  static Permutation from_mapping(int n_qubits,
                                  const std::unordered_map<StateIndex, StateIndex>& mapping);

  int n_qubits() const { return n_qubits_; }
  const std::vector<Cycle>& cycles() const { return cycles_; }
  bool is_identity() const { return cycles_.empty(); }
  std::size_t moved_count() const { return image_.size(); }

  StateIndex image(StateIndex state) const;
  Permutation inverse() const;
  // (this o other)(s) = this(other(s)): apply `other` first.
  Permutation compose(const Permutation& other) const;

  bool operator==(const Permutation& other) const {
    return n_qubits_ == other.n_qubits_ && cycles_ == other.cycles_;
  }

 private:
  int n_qubits_;
  std::vector<Cycle> cycles_;
  std::unordered_map<StateIndex, StateIndex> image_;
};

// Moves probability mass along the permutation: out[perm(s)] = in[s].
ExplicitDistribution apply_permutation(const ExplicitDistribution& dist, const Permutation& perm);

// Text form: one cycle per line, "011 -> 100" (a -> b -> ... closes back to
// the first entry); '#' starts a comment; N is the bitstring width.
std::string format_permutation(const Permutation& perm);
Permutation parse_permutation(std::string_view text);

}  // namespace dyncool
