// Copyright 2026 The qperm Authors
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
#include <complex>

namespace qperm {

/// Neumaier-compensated running sum.
///
/// Tracks the low-order bits lost by each addition and folds them back in when the
/// total is read. Unlike plain Kahan summation it stays accurate when an addend is
/// larger in magnitude than the running total, which is the common case in the
/// alternating exponential-length sums of this library.
class CompensatedSum {
 public:
  void add(double value) {
    const double t = sum_ + value;
    if (std::abs(sum_) >= std::abs(value)) {
      compensation_ += (sum_ - t) + value;
    } else {
      compensation_ += (value - t) + sum_;
    }
    sum_ = t;
  }

  CompensatedSum& operator+=(double value) {
    add(value);
    return *this;
  }

  /// Merges another partial sum, keeping both compensation terms.
  void merge(const CompensatedSum& other) {
    add(other.sum_);
    add(other.compensation_);
  }

  double value() const { return sum_ + compensation_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

/// Component-wise compensated sum of complex values.
class CompensatedComplexSum {
 public:
  void add(std::complex<double> value) {
    re_.add(value.real());
    im_.add(value.imag());
  }

  CompensatedComplexSum& operator+=(std::complex<double> value) {
    add(value);
    return *this;
  }

  void merge(const CompensatedComplexSum& other) {
    re_.merge(other.re_);
    im_.merge(other.im_);
  }

  std::complex<double> value() const { return {re_.value(), im_.value()}; }

 private:
  CompensatedSum re_;
  CompensatedSum im_;
};

}  // namespace qperm
