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

#include "dyncool/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

#include "dyncool/errors.hpp"
#include "numeric_util.hpp"

namespace dyncool {

namespace {

void require_qubits(int n_qubits) {
  if (n_qubits < 1) throw DomainError("qubit count must be >= 1");
}

void require_probability(double p1) {
  if (!(p1 >= 0.0 && p1 <= 1.0)) throw DomainError("population must lie in [0, 1]");
}

// ln[(1-x)^k x^(N-k)], with 0 * ln 0 taken as 0.
long double log_class_probability(long double x, int zeros, int n_qubits) {
  long double value = 0.0L;
  if (zeros > 0) value += zeros * std::log1p(-x);
  if (n_qubits - zeros > 0) value += (n_qubits - zeros) * std::log(x);
  return value;
}

}  // namespace

ThermalEnsembleSpec ThermalEnsembleSpec::from_temperature(int n_qubits, double kelvin,
                                                          double omega) {
  ThermalEnsembleSpec spec{n_qubits, omega, population_from_temperature(kelvin, omega)};
  spec.validate();
  return spec;
}

void ThermalEnsembleSpec::validate() const {
  require_qubits(n_qubits);
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  if (!(excited_population >= 0.0 && excited_population < 1.0)) {
    throw DomainError("excited population must lie in [0, 1)");
  }
}

std::string EffectiveTemperature::describe() const {
  switch (kind) {
    case TemperatureKind::Zero:
      return "0 K";
    case TemperatureKind::Infinite:
      return "infinite";
    case TemperatureKind::Saturated:
      return "saturated (negative zero)";
    case TemperatureKind::Finite:
      break;
  }
  std::ostringstream out;
  out << millikelvin() << " mK";
  if (inverted) out << " (inverted)";
  return out.str();
}

double population_from_reduced_temperature(double t) {
  if (!(t > 0.0)) throw DomainError("temperature must be positive");
  return 1.0 / (std::exp(1.0 / t) + 1.0);
}

double population_from_temperature(double kelvin, double omega) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  if (!(kelvin > 0.0)) throw DomainError("temperature must be positive");
  return population_from_reduced_temperature(kelvin / quantum_temperature(omega));
}

EffectiveTemperature reduced_temperature_from_population(double p1) {
  require_probability(p1);
  if (p1 == 0.0) return {TemperatureKind::Zero, 0.0, false};
  if (p1 == 0.5) return {TemperatureKind::Infinite, 0.0, false};
  if (p1 == 1.0) return {TemperatureKind::Saturated, 0.0, true};
  // ln(1/p - 1) = log1p((1 - 2p) / p) keeps precision near p = 1/2.
  const double log_ratio = std::log1p((1.0 - 2.0 * p1) / p1);
  return {TemperatureKind::Finite, 1.0 / log_ratio, p1 > 0.5};
}

EffectiveTemperature temperature_from_population(double p1, double omega) {
  if (!(omega > 0.0)) throw DomainError("omega must be positive");
  EffectiveTemperature t = reduced_temperature_from_population(p1);
  t.kelvin *= quantum_temperature(omega);
  return t;
}

long double log_binomial(int n, int k) {
  if (k < 0 || k > n) return -INFINITY;
  return std::lgamma(static_cast<long double>(n) + 1) -
         std::lgamma(static_cast<long double>(k) + 1) -
         std::lgamma(static_cast<long double>(n - k) + 1);
}

std::optional<std::uint64_t> exact_binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  boost::multiprecision::cpp_int value = 1;
  for (int i = 1; i <= k; ++i) {
    value = value * (n - k + i) / i;
    if (value > std::numeric_limits<std::uint64_t>::max()) return std::nullopt;
  }
  return static_cast<std::uint64_t>(value);
}

namespace detail {

double excited_population_direct(double p1, int n_qubits) {
  require_qubits(n_qubits);
  require_probability(p1);
  if (n_qubits > 50) throw DomainError("direct evaluation limited to N <= 50");
  NeumaierSum<double> sum;
  for (int zeros = 0; 2 * zeros < n_qubits; ++zeros) {
    const double count = static_cast<double>(*exact_binomial(n_qubits, zeros));
    sum += count * std::pow(1.0 - p1, zeros) * std::pow(p1, n_qubits - zeros);
  }
  if (n_qubits % 2 == 0) {
    const int half = n_qubits / 2;
    const double count = static_cast<double>(*exact_binomial(n_qubits, half));
    sum += 0.5 * count * std::pow(1.0 - p1, half) * std::pow(p1, half);
  }
  return sum.value();
}

double excited_population_log(double p1, int n_qubits) {
  require_qubits(n_qubits);
  require_probability(p1);
  LogSumExp acc;
  const long double x = p1;
  for (int zeros = 0; 2 * zeros < n_qubits; ++zeros) {
    acc.add(log_binomial(n_qubits, zeros) + log_class_probability(x, zeros, n_qubits));
  }
  if (n_qubits % 2 == 0) {
    const int half = n_qubits / 2;
    acc.add(log_binomial(n_qubits, half) - std::log(2.0L) +
            log_class_probability(x, half, n_qubits));
  }
  return static_cast<double>(acc.value());
}

long double log_excited_population(long double x, int n_qubits) {
  require_qubits(n_qubits);
  LogSumExp acc;
  for (int zeros = 0; 2 * zeros < n_qubits; ++zeros) {
    acc.add(log_binomial(n_qubits, zeros) + log_class_probability(x, zeros, n_qubits));
  }
  if (n_qubits % 2 == 0) {
    const int half = n_qubits / 2;
    acc.add(log_binomial(n_qubits, half) - std::log(2.0L) + log_class_probability(x, half, n_qubits));
  }
  return acc.log_value();
}

}  // namespace detail

double excited_population_after_cooling(double p1, int n_qubits) {
  if (n_qubits <= 50) return detail::excited_population_direct(p1, n_qubits);
  return detail::excited_population_log(p1, n_qubits);
}

EffectiveTemperature minimal_final_temperature(double kelvin, double omega, int n_qubits) {
  const double p1 = population_from_temperature(kelvin, omega);
  return temperature_from_population(excited_population_after_cooling(p1, n_qubits), omega);
}

double reduced_final_temperature(double t, int n_qubits) {
  if (!(t > 0.0)) throw DomainError("reduced temperature must be positive");
  const long double beta = 1.0L / t;
  // ln x = -ln(1 + e^beta), kept finite far below double range
  const long double log_x = -(beta + std::log1p(std::exp(-beta)));
  const long double log_p = detail::log_excited_population(std::exp(log_x), n_qubits);
  const long double log_q = std::log1p(-std::exp(log_p));
  return static_cast<double>(1.0L / (log_q - log_p));
}

ScalingCoefficients high_t_coefficient(int s) {
  if (s < 1) throw DomainError("s must be >= 1");
  ScalingCoefficients out;
  out.s = s;
  if (auto a = exact_binomial(2 * s - 1, s)) {
    out.c_exact = static_cast<double>(
        std::ldexp(static_cast<long double>(*a) * s, 2 - 2 * s));
  } else {
    const long double log_c = (2.0L - 2.0L * s) * std::numbers::ln2_v<long double> +
                              std::log(static_cast<long double>(s)) +
                              log_binomial(2 * s - 1, s);
    out.c_exact = static_cast<double>(std::exp(log_c));
  }
  out.c_asymptotic = 2.0 / std::sqrt(std::numbers::pi) * std::sqrt(static_cast<double>(s));
  return out;
}

ScalingCoefficients low_t_coefficient(int s) {
  if (s < 1) throw DomainError("s must be >= 1");
  ScalingCoefficients out;
  out.s = s;
  out.a_exact_integer = exact_binomial(2 * s - 1, s);
  const long double log_a = log_binomial(2 * s - 1, s);
  out.log_a_exact = static_cast<double>(log_a);
  out.a_exact = out.a_exact_integer ? static_cast<double>(*out.a_exact_integer)
                                    : static_cast<double>(std::exp(log_a));
  if (out.a_exact_integer) out.log_a_exact = std::log(static_cast<double>(*out.a_exact_integer));
  out.a_asymptotic_log = s * std::log(4.0) - 0.5 * std::log(static_cast<double>(s)) -
                         std::log(2.0 * std::numbers::pi);
  return out;
}

double asymptotic_final_temperature(double kelvin, int n_qubits, Regime regime) {
  if (n_qubits < 3) throw DomainError("scaling laws need N >= 3");
  if (!(kelvin > 0.0)) throw DomainError("temperature must be positive");
  const double s = static_cast<double>((n_qubits + 1) / 2);
  if (regime == Regime::Low) return kelvin / s;
  return 0.5 * std::sqrt(std::numbers::pi) * kelvin / std::sqrt(s);
}

}  // namespace dyncool
