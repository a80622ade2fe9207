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

#include <stdexcept>

namespace dyncool {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Request exceeds an explicit (dense) representation limit.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// Inputs for which the requested construct does not exist (b1 == b2, x = 1/2, ...).
class DegenerateError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed permutation, gate-list or config text.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace dyncool
