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
#include <optional>
#include <string>

namespace dyncool {

// CODATA 2018 exact / recommended values.
struct PhysicalConstants {
  static constexpr double hbar = 1.054571817e-34;       // J s
  static constexpr double k_boltzmann = 1.380649e-23;   // J / K
};

// hbar * omega in joules. omega is an angular frequency in rad/s; a quoted
// "5 GHz" qubit is used as omega = 5e9 directly.
inline double quantum_energy(double omega) { return PhysicalConstants::hbar * omega; }

// hbar * omega / k_B in kelvin.
inline double quantum_temperature(double omega) {
  return quantum_energy(omega) / PhysicalConstants::k_boltzmann;
}

// N identical qubits at frequency omega with single-qubit excited population P1.
struct ThermalEnsembleSpec {
  int n_qubits = 1;
  double omega = 5e9;
  double excited_population = 0.0;

  static ThermalEnsembleSpec from_temperature(int n_qubits, double kelvin, double omega);
  // Throws DomainError unless N >= 1, omega > 0, 0 <= P1 < 1.
  void validate() const;
};

enum class TemperatureKind { Finite, Zero, Infinite, Saturated };

// Effective (bath-equivalent) temperature of a qubit population. Populations
// above 1/2 map to negative kelvin with `inverted` set.
struct EffectiveTemperature {
  TemperatureKind kind = TemperatureKind::Finite;
  double kelvin = 0.0;
  bool inverted = false;

  bool is_finite() const { return kind == TemperatureKind::Finite; }
  double millikelvin() const { return kelvin * 1e3; }
  std::string describe() const;
};

double population_from_temperature(double kelvin, double omega);
EffectiveTemperature temperature_from_population(double p1, double omega);

// Same maps in reduced units t = k_B T / (hbar omega).
double population_from_reduced_temperature(double t);
EffectiveTemperature reduced_temperature_from_population(double p1);

// Minimum excited population of the target qubit reachable by a global
// unitary on N qubits. Odd N sums the C(N,k) lowest-probability classes for
// k < N/2 zero bits; even N adds half of the middle class.
double excited_population_after_cooling(double p1, int n_qubits);

namespace detail {
// Plain double summation; exact integer binomials, valid for N <= 50.
double excited_population_direct(double p1, int n_qubits);
// Log-sum-exp over lgamma binomials with compensated summation, any N.
double excited_population_log(double p1, int n_qubits);
// ln P' in extended precision, for populations below double range.
long double log_excited_population(long double x, int n_qubits);
}  // namespace detail

// k_B T' / (hbar omega) after optimal cooling from reduced temperature t,
// computed in log space so deep low-T points do not underflow.
double reduced_final_temperature(double t, int n_qubits);

EffectiveTemperature minimal_final_temperature(double kelvin, double omega, int n_qubits);

// ln C(n, k) in extended precision.
long double log_binomial(int n, int k);
// C(n, k) when it fits in 64 bits.
std::optional<std::uint64_t> exact_binomial(int n, int k);

// Coefficients of the high-T (c_s) and low-T (a_s) expansions for N = 2s-1 or 2s.
struct ScalingCoefficients {
  int s = 1;
  double c_exact = 1.0;
  double c_asymptotic = 0.0;
  double a_exact = 1.0;
  double log_a_exact = 0.0;
  double a_asymptotic_log = 0.0;
  std::optional<std::uint64_t> a_exact_integer;
};

// Fills s, c_exact and c_asymptotic: c_s = 2^{2-2s} s C(2s-1,s) ~ (2/sqrt(pi)) sqrt(s).
ScalingCoefficients high_t_coefficient(int s);
// Fills s and the a_* fields: a_s = C(2s-1,s), ln a_s ~ s ln4 - ln(s)/2 - ln(2 pi).
ScalingCoefficients low_t_coefficient(int s);

enum class Regime { High, Low };

// Scaling-law estimate of T' with s = ceil(N/2): (sqrt(pi)/2) T / sqrt(s) at
// high T, T / s at low T.
double asymptotic_final_temperature(double kelvin, int n_qubits, Regime regime);

}  // namespace dyncool
