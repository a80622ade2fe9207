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

// Brute-force references kept independent of the library internals: they
// only reuse the bit helpers and plain arithmetic.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <vector>

namespace oracle {

inline int popcount(unsigned long long s) { return __builtin_popcountll(s); }

inline std::vector<double> thermal(int n, double x) {
  std::vector<double> p(std::size_t{1} << n);
  for (std::size_t s = 0; s < p.size(); ++s) {
    const int j = popcount(s);
    p[s] = std::pow(1.0 - x, n - j) * std::pow(x, j);
  }
  return p;
}

// Best achievable target population: the 2^{N-1} largest probabilities
// sit on target-0 states, so the excited population is the rest.
inline double cooled_population(int n, double x) {
  auto p = thermal(n, x);
  std::sort(p.begin(), p.end(), std::greater<>());
  double hot = 0.0;
  for (std::size_t i = p.size() / 2; i < p.size(); ++i) hot += p[i];
  return hot;
}

inline double energy_half_units(int n, unsigned long long s) { return 2.0 * popcount(s) - n; }

// Hungarian method, min-cost perfect assignment on a square cost matrix.
// Returns assignment row -> column.
inline std::vector<int> hungarian(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), minv(n + 1);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  std::vector<char> used(n + 1);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::fill(minv.begin(), minv.end(), inf);
    std::fill(used.begin(), used.end(), 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n);
  for (int j = 1; j <= n; ++j) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

// Minimal work (units of hbar*omega) over every permutation that reaches
// the cooling optimum, as an assignment problem. Sources with fewer than
// N/2 excitations must land on target-0 states, more than N/2 on target-1.
inline double min_work_assignment(int n, double x) {
  const auto p = thermal(n, x);
  const std::size_t size = p.size();
  const unsigned long long top = 1ULL << (n - 1);
  std::vector<std::vector<double>> cost(size, std::vector<double>(size));
  double initial = 0.0;
  for (std::size_t src = 0; src < size; ++src) {
    const int j = popcount(src);
    initial += energy_half_units(n, src) * p[src];
    for (std::size_t dst = 0; dst < size; ++dst) {
      const bool cold = (dst & top) == 0;
      const bool forbidden = (2 * j < n && !cold) || (2 * j > n && cold);
      cost[src][dst] = forbidden ? 1e6 : energy_half_units(n, dst) * p[src];
    }
  }
  const auto assign = hungarian(cost);
  double final_energy = 0.0;
  for (std::size_t src = 0; src < size; ++src) final_energy += cost[src][static_cast<std::size_t>(assign[src])];
  return 0.5 * (final_energy - initial);
}

// Exhaustive search over all 8! relabellings of N = 3 states: the minimum
// work among permutations reaching the optimum cooled population.
inline double min_work_exhaustive_n3(double x) {
  const auto p = thermal(3, x);
  const double best_cooling = cooled_population(3, x);
  std::vector<int> image(8);
  std::iota(image.begin(), image.end(), 0);
  double best = std::numeric_limits<double>::infinity();
  double initial = 0.0;
  for (int s = 0; s < 8; ++s) initial += energy_half_units(3, s) * p[s];
  do {
    double hot = 0.0, energy = 0.0;
    for (int s = 0; s < 8; ++s) {
      if (image[s] & 4) hot += p[s];
      energy += energy_half_units(3, image[s]) * p[s];
    }
    if (std::abs(hot - best_cooling) < 1e-14) best = std::min(best, 0.5 * (energy - initial));
  } while (std::next_permutation(image.begin(), image.end()));
  return best;
}

}  // namespace oracle
