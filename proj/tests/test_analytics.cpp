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

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dyncool/analytics.hpp"
#include "dyncool/errors.hpp"
#include "oracles.hpp"

using namespace dyncool;

namespace {
double cubic(double x) { return 3 * x * x - 2 * x * x * x; }
}  // namespace

TEST_CASE("population and temperature maps") {
  CHECK(population_from_temperature(1e9, 5e9) == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(population_from_temperature(8.3e-3, 5e9) == doctest::Approx(0.01).epsilon(0.0002 / 0.01));

  const auto t = temperature_from_population(0.01, 5e9);
  REQUIRE(t.is_finite());
  CHECK(t.millikelvin() == doctest::Approx(8.31).epsilon(0.005));

  for (double kelvin : {1e-3, 8.3e-3, 0.1, 3.0, 1e4}) {
    const double p = population_from_temperature(kelvin, 5e9);
    // p sits within ~hw/4kT of 1/2 at high T, so one ulp in p costs ~kT/hw ulps in T
    const double slack = std::max(1.0, kelvin / quantum_temperature(5e9));
    CHECK(temperature_from_population(p, 5e9).kelvin == doctest::Approx(kelvin).epsilon(1e-12 * slack));
  }

  CHECK(temperature_from_population(0.5, 5e9).kind == TemperatureKind::Infinite);
  CHECK(temperature_from_population(0.0, 5e9).kind == TemperatureKind::Zero);
  CHECK(temperature_from_population(1.0, 5e9).kind == TemperatureKind::Saturated);
  const auto inv = temperature_from_population(0.6, 5e9);
  CHECK(inv.inverted);
  CHECK(inv.kelvin < 0);

  CHECK_THROWS_AS(population_from_temperature(0.0, 5e9), DomainError);
  CHECK_THROWS_AS(population_from_temperature(1.0, -1.0), DomainError);
}

TEST_CASE("cooled population small cases") {
  CHECK(excited_population_after_cooling(0.25, 3) == doctest::Approx(0.15625).epsilon(1e-15));
  for (int n = 1; n <= 30; ++n) CHECK(excited_population_after_cooling(0.5, n) == doctest::Approx(0.5).epsilon(1e-14));
  for (double x : {0.0, 0.1, 0.37, 0.5}) {
    CHECK(excited_population_after_cooling(x, 1) == doctest::Approx(x).epsilon(1e-15));
    CHECK(excited_population_after_cooling(x, 2) == doctest::Approx(x).epsilon(1e-15));
  }
  // brute force over the 512 states; the sum of 256 smallest probabilities
  CHECK(excited_population_after_cooling(0.1, 9) == doctest::Approx(oracle::cooled_population(9, 0.1)).epsilon(1e-12));
  CHECK(excited_population_after_cooling(0.1, 9) == doctest::Approx(8.9093e-4).epsilon(1e-4));
  CHECK_THROWS_AS(excited_population_after_cooling(0.1, 0), DomainError);
}

TEST_CASE("cooled population matches sorting oracle") {
  for (int n = 1; n <= 12; ++n) {
    for (int i = 0; i <= 50; ++i) {
      const double x = 0.01 * i;
      CHECK(std::abs(excited_population_after_cooling(x, n) - oracle::cooled_population(n, x)) < 1e-12);
    }
  }
}

TEST_CASE("direct and log evaluations agree") {
  for (int n = 1; n <= 50; ++n) {
    for (int i = 0; i <= 100; ++i) {
      const double x = 0.01 * i;
      CHECK(std::abs(detail::excited_population_direct(x, n) - detail::excited_population_log(x, n)) < 1e-10);
    }
  }
}

TEST_CASE("fixed points, monotonicity and closed forms") {
  for (int n : {1, 2, 3, 8, 51, 200, 1000}) {
    CHECK(excited_population_after_cooling(0.0, n) == 0.0);
    CHECK(excited_population_after_cooling(0.5, n) == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(excited_population_after_cooling(1.0, n) == doctest::Approx(1.0).epsilon(1e-14));
  }
  for (int n : {3, 4, 7, 60, 101}) {
    double prev = -1;
    for (int i = 0; i <= 500; ++i) {
      const double v = excited_population_after_cooling(0.001 * i, n);
      CHECK(v >= prev - 1e-15);
      prev = v;
      if (i > 0 && i < 500) CHECK(excited_population_after_cooling(0.001 * i, n + 2) <= v + 1e-15);
    }
  }
  for (int i = 0; i <= 1000; ++i) {
    const double x = 0.001 * i;
    CHECK(std::abs(excited_population_after_cooling(x, 3) - cubic(x)) < 1e-14);
    CHECK(std::abs(excited_population_after_cooling(x, 4) - cubic(x)) < 1e-14);
  }
}

TEST_CASE("odd and even sizes cool equally") {
  for (int s = 1; s <= 64; ++s) {
    for (int i = 0; i <= 1000; i += 7) {
      const double x = 0.001 * i;
      CHECK(std::abs(excited_population_after_cooling(x, 2 * s - 1) - excited_population_after_cooling(x, 2 * s)) < 1e-12);
    }
  }
}

TEST_CASE("minimal final temperature") {
  const auto t9 = minimal_final_temperature(8.3e-3, 5e9, 9);
  CHECK(t9.kelvin == doctest::Approx(2.1e-3).epsilon(0.05 / 2.1));
  CHECK(minimal_final_temperature(8.3e-3, 5e9, 10).kelvin == doctest::Approx(t9.kelvin).epsilon(1e-12));
  CHECK(minimal_final_temperature(8.3e-3, 5e9, 1).kelvin == doctest::Approx(8.3e-3).epsilon(1e-12));
}

TEST_CASE("scaling coefficients") {
  CHECK(high_t_coefficient(1).c_exact == doctest::Approx(1.0));
  CHECK(high_t_coefficient(2).c_exact == doctest::Approx(1.5));
  // slope of the cooled population at x = 1/2 for N = 3, by finite difference
  const double h = 1e-6;
  const double slope = (excited_population_after_cooling(0.5 + h, 3) - excited_population_after_cooling(0.5 - h, 3)) / (2 * h);
  CHECK(slope == doctest::Approx(1.5).epsilon(1e-8));
  const auto big = high_t_coefficient(10000);
  CHECK(std::abs(big.c_exact / big.c_asymptotic - 1) < 1e-3);

  CHECK(low_t_coefficient(1).a_exact == doctest::Approx(1.0));
  CHECK(low_t_coefficient(2).a_exact == doctest::Approx(3.0));
  CHECK(low_t_coefficient(2).a_exact_integer.value() == 3);
  const auto a500 = low_t_coefficient(500);
  CHECK(std::abs(a500.log_a_exact - a500.a_asymptotic_log) / a500.log_a_exact < 1e-3);
}

TEST_CASE("asymptotic estimates") {
  CHECK(asymptotic_final_temperature(8.3e-3, 10, Regime::Low) == doctest::Approx(1.66e-3).epsilon(1e-12));
  CHECK(asymptotic_final_temperature(8.3e-3, 9, Regime::Low) == doctest::Approx(1.66e-3).epsilon(1e-12));
  CHECK(asymptotic_final_temperature(1.0, 1 << 20, Regime::High) < 2e-3);
  const double unit = quantum_temperature(5e9);
  const double t = 100 * unit;
  const double exact = minimal_final_temperature(t, 5e9, 1024).kelvin / t;
  CHECK(std::abs(exact / std::sqrt(std::numbers::pi / 2048) - 1) < 0.02);
  CHECK(asymptotic_final_temperature(t, 1024, Regime::High) / t == doctest::Approx(std::sqrt(std::numbers::pi / 2048)));
  CHECK_THROWS_AS(asymptotic_final_temperature(1.0, 2, Regime::Low), DomainError);
}

TEST_CASE("shannon bound across a high temperature sweep") {
  // the bound is an entropy statement for kT >> hw; below that the 2T/N regime undercuts it
  for (int n : {3, 4, 9, 16, 64, 256, 1024}) {
    for (double t : {10.0, 20.0, 30.0, 50.0, 100.0}) {
      CHECK(reduced_final_temperature(t, n) >= t / std::sqrt(double(n)) * (1 - 1e-12));
    }
  }
}

TEST_CASE("log space final temperature agrees with direct path") {
  const double unit = quantum_temperature(5e9);
  for (int n : {3, 9, 64}) {
    for (double t : {0.1, 0.3, 1.0, 10.0}) {
      CHECK(reduced_final_temperature(t, n) == doctest::Approx(minimal_final_temperature(t * unit, 5e9, n).kelvin / unit).epsilon(1e-10));
    }
  }
  // far below double range the direct path underflows, the log path does not
  CHECK(reduced_final_temperature(0.002, 1999) > 0);
}
