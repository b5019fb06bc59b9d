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

#include "qperm/analysis.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "qperm/error.hpp"
#include "qperm/hadamard.hpp"
#include "qperm/ising.hpp"

namespace qperm {

namespace {

constexpr double kTieTolerance = 1e-12;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

bool at_most(double x, double y) { return x <= y + kTieTolerance * std::abs(y); }

double safe_log(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

/// exp of a sum of logs, where any -inf factor gives 0.
double exp_or_zero(double log_value) { return log_value == kNegInf ? 0.0 : std::exp(log_value); }

double log_factorial(std::size_t n) { return std::lgamma(static_cast<double>(n) + 1.0); }

}  // namespace

std::string_view to_string(AdvantageCase c) {
  switch (c) {
    case AdvantageCase::case1: return "case1";
    case AdvantageCase::case2: return "case2";
    case AdvantageCase::case3: return "case3";
    case AdvantageCase::no_advantage: break;
  }
  return "no_advantage";
}

double fd_error_bound(std::size_t n, double dt, double ising_norm, double ising_norm_real, double ising_norm_imag,
                      bool complex_input, double eps_fd) {
  const auto nn = static_cast<double>(n);
  double log_b = safe_log(eps_fd) + std::log(nn) + 2.0 * safe_log(dt) - std::log(24.0) - log_factorial(n);
  if (!complex_input) {
    log_b += (nn + 2.0) * safe_log(ising_norm_real);
  } else {
    // ||H(A)||^(N-1) (||H(B)||^3 + ||H(C)||^3); 0^0 = 1 when N = 1.
    if (n > 1) {
      log_b += (nn - 1.0) * safe_log(ising_norm);
    }
    log_b += safe_log(std::pow(ising_norm_real, 3) + std::pow(ising_norm_imag, 3));
  }
  return exp_or_zero(log_b);
}

double ht_error_bound(std::size_t n, double dt, double eps_ht, bool complex_input) {
  const double d = complex_input ? 4.0 : 2.0;
  return exp_or_zero(safe_log(eps_ht) + static_cast<double>(n) * std::log(d / dt) - log_factorial(n));
}

ErrorBudget total_error_bound(const SquareMatrix& a, double dt, double eps_ht, double eps_fd, bool is_complex) {
  if (!(eps_ht >= 0.0) || !(eps_fd >= 0.0 && eps_fd <= 1.0)) {
    throw InvalidInput("error factors need eps_ht >= 0 and 0 <= eps_fd <= 1");
  }
  const std::size_t n = a.n();
  const auto nn = static_cast<double>(n);
  const double d = is_complex ? 4.0 : 2.0;
  const double h = ising_norm(a);
  const double hb = ising_norm(a.real_part());
  const double hc = ising_norm(a.imag_part());
  if (!(dt > 0.0) || (h > 0.0 && dt > d / h * (1.0 + kTieTolerance))) {
    throw InvalidTimeStep("dt = " + std::to_string(dt) + " violates the convergence bound dt <= " +
                          std::to_string(h > 0.0 ? d / h : std::numeric_limits<double>::infinity()));
  }

  ErrorBudget b;
  b.fd_bound = fd_error_bound(n, dt, h, is_complex ? hb : h, hc, is_complex, eps_fd);
  b.ht_bound = ht_error_bound(n, dt, eps_ht, is_complex);
  b.total_bound = b.fd_bound + b.ht_bound;

  // 1/N! < (e/N)^N / sqrt(2 pi N), then (||H|| dt / d)^(N+2) <= 1 for the power form.
  const double kappa = is_complex ? 4.0 / 3.0 : 1.0 / 6.0;
  const double log_lead = nn * std::log(d * std::numbers::e / (nn * dt)) - 0.5 * std::log(2.0 * std::numbers::pi * nn);
  const double stirling_inner = eps_ht + kappa * eps_fd * nn * exp_or_zero((nn + 2.0) * safe_log(h * dt / d));
  b.stirling_bound = exp_or_zero(log_lead + safe_log(stirling_inner));
  b.epsilon_prefactor = (eps_ht + kappa * eps_fd * nn) / std::sqrt(2.0 * std::numbers::pi * nn);
  b.log_power_bound = safe_log(b.epsilon_prefactor) + nn * std::log(d * std::numbers::e / (nn * dt));
  b.power_bound = exp_or_zero(b.log_power_bound);
  b.log_gurvits_bound = safe_log(b.epsilon_prefactor) + nn * safe_log(two_norm(a));
  b.gurvits_bound = exp_or_zero(b.log_gurvits_bound);
  b.case_label = advantage_classify(a).label;
  return b;
}

AdvantageReport advantage_classify(const SquareMatrix& a) {
  const auto nn = static_cast<double>(a.n());
  AdvantageReport r;
  const MatrixNorms m = norms(a);
  r.ising_norm = m.ising_norm;
  r.two_norm = m.two_norm;
  r.one_norm = m.one_norm;
  r.threshold = nn / std::numbers::e;
  r.norm_ratio = m.one_norm > 0.0 ? m.two_norm / m.one_norm : 0.0;
  r.in_ratio_domain = at_most(std::numbers::e, r.norm_ratio) && at_most(r.norm_ratio, std::sqrt(nn));

  const double h = r.ising_norm;
  const double t = r.threshold;
  const double scaled = t * r.two_norm;
  if (at_most(h, scaled) && at_most(scaled, t)) {
    r.label = AdvantageCase::case1;
  } else if (at_most(h, t) && at_most(t, scaled)) {
    r.label = AdvantageCase::case2;
  } else if (at_most(t, h) && at_most(h, scaled)) {
    r.label = AdvantageCase::case3;
  } else {
    r.label = AdvantageCase::no_advantage;
  }
  return r;
}

double advantage_domain_ratio(int n) {
  if (n < 1) {
    throw InvalidInput("advantage domain ratio needs N >= 1");
  }
  const double root = std::sqrt(static_cast<double>(n));
  if (n == 1) {
    return 0.0;
  }
  return std::max(0.0, root - std::numbers::e) / (root - 1.0 / root);
}

std::vector<std::pair<int, double>> advantage_domain_ratios(int n_min, int n_max) {
  if (n_min < 2 || n_max < n_min) {
    throw InvalidInput("advantage domain ratios need 2 <= n_min <= n_max");
  }
  std::vector<std::pair<int, double>> out;
  for (int n = n_min; n <= n_max; ++n) {
    out.emplace_back(n, advantage_domain_ratio(n));
  }
  return out;
}

ResourceReport resource_table(std::size_t n, bool is_complex) {
  if (n == 0) {
    throw InvalidInput("resource table needs N >= 1");
  }
  const std::uint64_t nn = n;
  ResourceReport r;
  r.n = n;
  r.complex_input = is_complex;
  if (!is_complex) {
    r.overlaps = (nn + 1) / 2;
  } else if (nn % 2 == 1) {
    r.overlaps = (nn * nn * nn + 6 * nn * nn + 11 * nn + 6) / 12;
  } else {
    r.overlaps = (nn * nn * nn + 6 * nn * nn + 8 * nn) / 12;
  }
  r.qubits = 2 * nn + 1;
  r.cnots_formula = 4 * nn * nn + 2 * nn;
  r.depth_formula = 9 * nn * nn + 1;
  r.samples_order = is_complex ? nn * nn * nn : nn;
  r.samples_order_text = is_complex ? "N^3 log(1/delta) / eps_HT^2" : "N log(1/delta) / eps_HT^2";

  // Dense matrix so that no rotation angle is elided.
  std::vector<Complex> ones(n * n, Complex{1.0, is_complex ? 1.0 : 0.0});
  const SquareMatrix dense(n, ones);
  if (n <= 12) {
    ProtocolConfig cfg;
    cfg.dt = max_convergent_dt(dense);
    r.overlaps_generated = generate_terms(dense, cfg).size();
  } else {
    r.overlaps_generated = overlap_term_count(n, is_complex, true);
  }
  const SquareMatrix real_dense(n, std::vector<Complex>(n * n, Complex{1.0, 0.0}));
  const QuantumCircuit circuit = build_hadamard_test(real_dense, 0.25, false);
  r.cnots_measured = circuit.count(GateKind::CNOT);
  r.depth_measured = circuit.depth();
  return r;
}

GaussianNormStatistic gaussian_norm_statistic(std::size_t n, std::size_t trials, std::uint64_t seed) {
  if (trials < 100) {
    throw InvalidInput("gaussian_norm_statistic needs at least 100 trials");
  }
  GaussianNormStatistic s;
  s.n = n;
  s.trials = trials;
  double total = 0.0;
  for (const SquareMatrix& a : gaussian_ensemble(n, trials, seed, GaussianKind::real_standard_normal)) {
    total += ising_norm(a);
  }
  const auto nn = static_cast<double>(n);
  s.mean_ising_norm = total / static_cast<double>(trials);
  s.predicted = std::sqrt(2.0 / std::numbers::pi) * nn * nn;
  const double lhs = 2.0 * std::numbers::e * std::sqrt(2.0 / std::numbers::pi);
  s.minimal_k = n > 2 ? 1.0 + std::log(lhs) / std::log(nn / 2.0) : std::numeric_limits<double>::infinity();
  return s;
}

}  // namespace qperm
