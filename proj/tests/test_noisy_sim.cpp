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

#include <doctest.h>

#include <Eigen/Dense>
#include <complex>

#include "dyncool/errors.hpp"
#include "dyncool/noisy_sim.hpp"
#include "dyncool/protocols.hpp"

using namespace dyncool;

namespace {

ThermalEnsembleSpec spec(int n, double x) {
  ThermalEnsembleSpec s;
  s.n_qubits = n;
  s.excited_population = x;
  return s;
}

GateList mirror_circuit(int n) { return synthesize_permutation(mirror_permutation(n)); }

using Matrix = Eigen::MatrixXcd;

Matrix pauli_on(int qubit, int n, char which) {
  Matrix single(2, 2);
  const std::complex<double> i(0, 1);
  if (which == 'X') single << 0, 1, 1, 0;
  if (which == 'Y') single << 0, -i, i, 0;
  if (which == 'Z') single << 1, 0, 0, -1;
  Matrix out = Matrix::Identity(1, 1);
  for (int q = 0; q < n; ++q) {
    const Matrix f = q == qubit ? single : Matrix::Identity(2, 2);
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (int r = 0; r < out.rows(); ++r)
      for (int c = 0; c < out.cols(); ++c) next.block(r * 2, c * 2, 2, 2) = out(r, c) * f;
    out = next;
  }
  return out;
}

// Full density-matrix evolution with Kraus operators, no diagonal shortcuts.
std::vector<double> density_matrix_reference(const GateList& gates, const ThermalEnsembleSpec& s, const NoiseModel& noise) {
  const int n = s.n_qubits;
  const auto dim = Eigen::Index{1} << n;
  const auto init = thermal_distribution(s);
  Matrix rho = Matrix::Zero(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) rho(k, k) = init[static_cast<StateIndex>(k)];
  for (const McxGate& g : gates.gates) {
    Matrix u = Matrix::Zero(dim, dim);
    const GateList single{n, {g}};
    for (Eigen::Index k = 0; k < dim; ++k) u(static_cast<Eigen::Index>(execute_classically(single, static_cast<StateIndex>(k))), k) = 1;
    rho = u * rho * u.adjoint();
    std::vector<int> operands{g.target};
    for (const auto& c : g.controls) operands.push_back(c.qubit);
    const int reps = noise.insertions_per_gate(static_cast<int>(operands.size()));
    for (int rep = 0; rep < reps; ++rep) {
      if (noise.locus == NoiseLocus::OneOperand) {
        Matrix next = (1 - noise.p) * rho;
        const double w = noise.p / (3.0 * operands.size());
        for (int q : operands)
          for (char P : {'X', 'Y', 'Z'}) {
            const Matrix k = pauli_on(q, n, P);
            next += w * k * rho * k.adjoint();
          }
        rho = next;
      } else {
        for (int q : operands) {
          Matrix next = (1 - noise.p) * rho;
          for (char P : {'X', 'Y', 'Z'}) {
            const Matrix k = pauli_on(q, n, P);
            next += noise.p / 3.0 * k * rho * k.adjoint();
          }
          rho = next;
        }
      }
    }
  }
  std::vector<double> diag(static_cast<std::size_t>(dim));
  for (Eigen::Index k = 0; k < dim; ++k) diag[static_cast<std::size_t>(k)] = rho(k, k).real();
  return diag;
}

}  // namespace

TEST_CASE("exact propagation equals density matrix evolution") {
  for (int n : {3, 4}) {
    for (auto locus : {NoiseLocus::OneOperand, NoiseLocus::AllOperands}) {
      for (auto gran : {NoiseGranularity::Mcx, NoiseGranularity::Elementary}) {
        NoiseModel noise;
        noise.p = 0.07;
        noise.locus = locus;
        noise.granularity = gran;
        const auto s = spec(n, 0.2);
        const GateList g = synthesize_permutation(ppa_permutation(n, 0.2));
        const auto fast = propagate_distribution_noisy(g, s, noise);
        const auto ref = density_matrix_reference(g, s, noise);
        for (StateIndex k = 0; k < fast.size(); ++k) CHECK(fast[k] == doctest::Approx(ref[k]).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("exact propagation basics") {
  const auto s = spec(5, 0.25);
  const GateList g = mirror_circuit(5);
  const auto clean = propagate_distribution_noisy(g, s, NoiseModel{});
  const auto expected = apply_permutation(thermal_distribution(s), mirror_permutation(5));
  for (StateIndex k = 0; k < clean.size(); ++k) CHECK(clean[k] == expected[k]);
  NoiseModel noisy;
  noisy.p = 0.3;
  CHECK(propagate_distribution_noisy(g, s, noisy).total() == doctest::Approx(1.0).epsilon(1e-14));
  CHECK_THROWS_AS(propagate_distribution_noisy(GateList{11, {}}, spec(11, 0.2), noisy), CapacityError);
}

TEST_CASE("monte carlo noiseless and saturated limits") {
  const auto s = spec(3, 0.25);
  const auto r = run_cooling_sim(mirror_circuit(3), s, NoiseModel{}, 1000000, 11);
  CHECK(std::abs(r.p1_estimate - 0.15625) < 3 * std::sqrt(0.15625 * 0.84375 / 1e6));
  CHECK(r.std_error == doctest::Approx(std::sqrt(r.p1_estimate * (1 - r.p1_estimate) / 1e6)));

  NoiseModel sat;
  sat.p = 1.0;
  GateList longer = mirror_circuit(5);
  REQUIRE(longer.size() >= 20);
  const auto exact = target_excited_population(propagate_distribution_noisy(longer, spec(5, 0.25), sat));
  CHECK(exact == doctest::Approx(0.5).epsilon(1e-6));
  const auto mc = run_cooling_sim(longer, spec(5, 0.25), sat, 200000, 5);
  CHECK(std::abs(mc.p1_estimate - 0.5) < 3 * mc.std_error);

  const auto one = run_cooling_sim(mirror_circuit(3), s, sat, 1, 123);
  CHECK(one.excited_hits <= 1);
}

TEST_CASE("monte carlo agrees with exact propagation") {
  for (int n : {3, 4, 6}) {
    for (double p : {0.01, 0.05}) {
      NoiseModel noise;
      noise.p = p;
      const auto s = spec(n, 0.25);
      const GateList g = mirror_circuit(n);
      const double exact = target_excited_population(propagate_distribution_noisy(g, s, noise));
      const auto mc = run_cooling_sim(g, s, noise, 100000, 2024 + n);
      const double sigma = std::sqrt(exact * (1 - exact) / 1e5);
      CHECK_MESSAGE(std::abs(mc.p1_estimate - exact) < 4 * sigma, "N=" << n << " p=" << p);
    }
  }
}

TEST_CASE("seed determinism regardless of thread count") {
  NoiseModel noise;
  noise.p = 0.05;
  noise.granularity = NoiseGranularity::Elementary;
  const auto s = spec(4, 0.2);
  const auto a = run_cooling_sim(mirror_circuit(4), s, noise, 20000, 77, 1);
  const auto b = run_cooling_sim(mirror_circuit(4), s, noise, 20000, 77, 4);
  const auto c = run_cooling_sim(mirror_circuit(4), s, noise, 20000, 77, 3);
  CHECK(a.excited_hits == b.excited_hits);
  CHECK(a.excited_hits == c.excited_hits);
  const auto d = run_cooling_sim(mirror_circuit(4), s, noise, 20000, 78, 1);
  CHECK(d.seed == 78);
  CHECK(derive_stream_seed(1, 2) != derive_stream_seed(2, 1));
  CHECK(derive_stream_seed(5, 9) == derive_stream_seed(5, 9));
}

TEST_CASE("noise degrades cooling") {
  for (int n : {3, 4, 5}) {
    const auto s = spec(n, 0.1);
    NoiseModel clean, noisy;
    noisy.p = 0.2;
    const GateList g = mirror_circuit(n);
    REQUIRE(g.size() >= 5);
    const auto a = run_cooling_sim(g, s, clean, 100000, 1);
    const auto b = run_cooling_sim(g, s, noisy, 100000, 2);
    CHECK(b.p1_estimate - a.p1_estimate > 3 * std::hypot(a.std_error, b.std_error));
  }
}

TEST_CASE("sweep rows") {
  const auto s = ThermalEnsembleSpec::from_temperature(3, 0.015, 5e9);
  const auto rows = noise_sweep(s, ProtocolKind::Mirror, {0.0, 0.3}, 50000, 3);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].protocol == "mirror");
  const double analytic = minimal_final_temperature(0.015, 5e9, 3).kelvin;
  CHECK(rows[0].result.temperature.kelvin == doctest::Approx(analytic).epsilon(0.05));
  CHECK(rows[1].result.temperature.kelvin > 0.015);  // heated above the bath
}

TEST_CASE("noise model validation and names") {
  NoiseModel bad;
  bad.p = 1.5;
  CHECK_THROWS_AS(bad.validate(), DomainError);
  CHECK(parse_noise_locus(to_string(NoiseLocus::AllOperands)) == NoiseLocus::AllOperands);
  CHECK(parse_noise_granularity("elementary") == NoiseGranularity::Elementary);
  CHECK_THROWS_AS(parse_noise_locus("x"), FormatError);
}
