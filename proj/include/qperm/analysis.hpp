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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qperm/matrix.hpp"

namespace qperm {

enum class AdvantageCase {
  case1,
  case2,
  case3,
  no_advantage,
};

std::string_view to_string(AdvantageCase c);

/// Additive-error budget of the finite-difference Hadamard-test protocol.
struct ErrorBudget {
  /// eps_FD N dt^2 / (24 N!) ||H||^(N+2) (complex: ||H(A)||^(N-1) (||H(B)||^3 + ||H(C)||^3)).
  double fd_bound = 0.0;
  /// eps_HT (d/dt)^N / N!.
  double ht_bound = 0.0;
  double total_bound = 0.0;
  /// Same bound with 1/N! replaced by its Stirling upper bound (e/N)^N / sqrt(2 pi N).
  double stirling_bound = 0.0;
  /// eps_R (2e/(N dt))^N or eps_C (4e/(N dt))^N.
  double power_bound = 0.0;
  /// eps_R = (eps_HT + eps_FD N/6) / sqrt(2 pi N), or eps_C = (eps_HT + 4 eps_FD N/3) / sqrt(2 pi N).
  double epsilon_prefactor = 0.0;
  /// epsilon_prefactor ||A||_2^N, the Gurvits envelope at equal epsilon.
  double gurvits_bound = 0.0;
  /// Natural logs of power_bound and gurvits_bound; finite where the values overflow.
  double log_power_bound = 0.0;
  double log_gurvits_bound = 0.0;
  AdvantageCase case_label = AdvantageCase::no_advantage;
};

/// Finite-difference remainder bound from scalar norms. For real input pass
/// ising_norm_imag = 0 and complex_input = false.
double fd_error_bound(std::size_t n, double dt, double ising_norm, double ising_norm_real, double ising_norm_imag,
                      bool complex_input, double eps_fd = 1.0);

/// eps_HT (d/dt)^N / N! with d = 2 (real) or 4 (complex).
double ht_error_bound(std::size_t n, double dt, double eps_ht, bool complex_input);

/// Throws InvalidTimeStep if dt exceeds the convergence limit, InvalidInput for negative
/// epsilons or eps_fd > 1.
ErrorBudget total_error_bound(const SquareMatrix& a, double dt, double eps_ht, double eps_fd, bool is_complex);

struct AdvantageReport {
  AdvantageCase label = AdvantageCase::no_advantage;
  double ising_norm = 0.0;
  double two_norm = 0.0;
  double one_norm = 0.0;
  /// N / e.
  double threshold = 0.0;
  /// ||A||_2 / ||A||_1.
  double norm_ratio = 0.0;
  /// e <= ||A||_2 / ||A||_1 <= sqrt(N), the sufficient condition for an advantage.
  bool in_ratio_domain = false;
};

/// Ties resolve toward the lower-numbered case.
AdvantageReport advantage_classify(const SquareMatrix& a);

/// Fraction of the feasible ratio interval [1/sqrt(N), sqrt(N)] covered by [e, sqrt(N)].
double advantage_domain_ratio(int n);
std::vector<std::pair<int, double>> advantage_domain_ratios(int n_min, int n_max);

struct ResourceReport {
  std::size_t n = 0;
  bool complex_input = false;
  std::uint64_t overlaps = 0;
  /// Terms actually emitted by generate_terms with halving.
  std::uint64_t overlaps_generated = 0;
  std::uint64_t qubits = 0;
  std::uint64_t cnots_formula = 0;
  std::uint64_t depth_formula = 0;
  std::uint64_t cnots_measured = 0;
  std::uint64_t depth_measured = 0;
  /// N or N^3: total samples scale as this times log(1/delta) / eps_HT^2.
  std::uint64_t samples_order = 0;
  std::string samples_order_text;
};

ResourceReport resource_table(std::size_t n, bool is_complex);

struct GaussianNormStatistic {
  std::size_t n = 0;
  std::size_t trials = 0;
  double mean_ising_norm = 0.0;
  /// sqrt(2/pi) N^2.
  double predicted = 0.0;
  /// Infimum of k with 2e sqrt(2/pi) < (N/2)^(k-1); infinity for N <= 2.
  double minimal_k = 0.0;
};

/// Monte-Carlo mean of ||H(A)|| over the real standard-normal ensemble. trials >= 100.
GaussianNormStatistic gaussian_norm_statistic(std::size_t n, std::size_t trials, std::uint64_t seed);

}  // namespace qperm
