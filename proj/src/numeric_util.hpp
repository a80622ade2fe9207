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

#include <cmath>
#include <limits>

namespace dyncool {

// Neumaier-compensated running sum.
template <typename T>
class NeumaierSum {
 public:
  NeumaierSum& operator+=(T term) {
    const T t = sum_ + term;
    if (std::abs(sum_) >= std::abs(term)) {
      compensation_ += (sum_ - t) + term;
    } else {
      compensation_ += (term - t) + sum_;
    }
    sum_ = t;
    return *this;
  }
  T value() const { return sum_ + compensation_; }

 private:
  T sum_{};
  T compensation_{};
};

// Accumulates exp(log_term) terms relative to the largest exponent seen.
class LogSumExp {
 public:
  void add(long double log_term) {
    if (log_term == -std::numeric_limits<long double>::infinity()) return;
    if (log_term > max_) {
      const long double factor = std::exp(max_ - log_term);
      NeumaierSum<long double> rescaled;
      rescaled += scaled_.value() * factor;
      scaled_ = rescaled;
      max_ = log_term;
    }
    scaled_ += std::exp(log_term - max_);
  }

  long double value() const {
    if (max_ == -std::numeric_limits<long double>::infinity()) return 0.0L;
    return std::exp(max_) * scaled_.value();
  }

  long double log_value() const {
    if (max_ == -std::numeric_limits<long double>::infinity()) return max_;
    return max_ + std::log(scaled_.value());
  }

 private:
  long double max_ = -std::numeric_limits<long double>::infinity();
  NeumaierSum<long double> scaled_;
};

}  // namespace dyncool
