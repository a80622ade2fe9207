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

#include "dyncool/state_space.hpp"

// Hand-transcribed permutations of the published N = 3 and N = 4 listings.
// Listing columns give the pull direction, sigma(i) = source of state i,
// so each cycle below is written in the push direction.
namespace fixtures {

inline dyncool::Permutation six_cycle_n3() {
  return dyncool::parse_permutation("000 -> 011 -> 111 -> 101 -> 100 -> 001\n");
}

inline dyncool::Permutation alt_min_work_n4() {
  return dyncool::parse_permutation("0110 -> 1000\n0111 -> 1010\n");
}

inline dyncool::Permutation ppa_n4() {
  return dyncool::parse_permutation("0011 -> 1000\n0111 -> 1100\n");
}

}  // namespace fixtures
