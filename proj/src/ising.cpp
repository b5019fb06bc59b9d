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

#include "qperm/ising.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "qperm/analysis.hpp"
#include "qperm/error.hpp"
#include "qperm/hadamard.hpp"
#include "qperm/kahan.hpp"

namespace qperm {

namespace {

constexpr double kBoundaryTolerance = 1e-12;
constexpr std::size_t kDirectWeightMaxN = 15;
constexpr std::size_t kOperatorMaxN = 7;

/// i^p for integer p.
Complex i_pow(long p) {
  switch (((p % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

double binomial(std::size_t n, std::size_t k) {
  double b = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    b = b * static_cast<double>(n - i) / static_cast<double>(i + 1);
  }
  return b;
}

double log_binomial(std::size_t n, std::size_t k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

/// |multinomial| / (N! dt^N). Switches to log-magnitude form above N = 15 so neither N!
/// nor dt^-N is materialized.
double weight_magnitude(std::size_t n, std::span<const std::pair<std::size_t, std::size_t>> binomials, double dt) {
  if (n <= kDirectWeightMaxN) {
    double m = 1.0;
    for (const auto& [top, bottom] : binomials) {
      m *= binomial(top, bottom);
    }
    return m / (std::tgamma(n + 1.0) * std::pow(dt, static_cast<double>(n)));
  }
  double log_m = 0.0;
  for (const auto& [top, bottom] : binomials) {
    log_m += log_binomial(top, bottom);
  }
  return std::exp(log_m - std::lgamma(n + 1.0) - static_cast<double>(n) * std::log(dt));
}

/// coef_b B + coef_c C + (pi/dt) I as a real matrix.
SquareMatrix shifted(const SquareMatrix& a, double coef_b, double coef_c, double dt) {
  const std::size_t n = a.n();
  const auto b = a.real_part();
  const auto c = a.imag_part();
  std::vector<Complex> e(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    double v = coef_b * b[i];
    if (coef_c != 0.0) {
      v += coef_c * c[i];
    }
    e[i] = v;
  }
  const double shift = std::numbers::pi / dt;
  for (std::size_t i = 0; i < n; ++i) {
    e[i * n + i] += shift;
  }
  return SquareMatrix(n, std::move(e));
}

}  // namespace

int order_factor(const SquareMatrix& a) { return a.is_real() ? 2 : 4; }

double max_convergent_dt(const SquareMatrix& a) {
  const double h = ising_norm(a);
  return h > 0.0 ? order_factor(a) / h : std::numeric_limits<double>::infinity();
}

void validate(const ProtocolConfig& cfg, const SquareMatrix& a) {
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt)) {
    throw InvalidTimeStep("dt must be positive and finite");
  }
  const double limit = max_convergent_dt(a);
  if (!cfg.allow_divergent_dt && cfg.dt > limit * (1.0 + kBoundaryTolerance)) {
    throw InvalidTimeStep("dt = " + std::to_string(cfg.dt) + " exceeds the convergence limit d/||H(A)|| = " +
                          std::to_string(limit));
  }
  if (cfg.mode == EvaluationMode::hadamard_shots && cfg.shots_per_overlap == 0) {
    throw InvalidInput("shot mode needs at least one shot per overlap");
  }
  if (cfg.richardson_levels > 4) {
    throw InvalidInput("at most 4 Richardson levels are supported");
  }
  if (!(cfg.failure_probability > 0.0 && cfg.failure_probability < 1.0)) {
    throw InvalidInput("failure probability must lie in (0, 1)");
  }
  if (cfg.exec.threads == 0) {
    throw InvalidInput("thread count must be positive");
  }
}

std::size_t overlap_term_count(std::size_t n, bool complex_input, bool halved) {
  if (!complex_input) {
    return halved ? (n + 1) / 2 : n + 1;
  }
  const std::size_t all = (n + 1) * (n + 2) * (n + 3) / 6;
  if (!halved) {
    return all;
  }
  // Self-paired triples exist only for even N, one per even l.
  const std::size_t self_paired = n % 2 == 0 ? n / 2 + 1 : 0;
  return (all - self_paired) / 2;
}

TermSet generate_terms(const SquareMatrix& a, const ProtocolConfig& cfg) {
  validate(cfg, a);
  const std::size_t n = a.n();
  const double dt = cfg.dt;
  const auto nn = static_cast<long>(n);
  TermSet set;
  set.n = n;
  set.complex_input = !a.is_real();
  set.dt = dt;
  set.ising_norm = ising_norm(a);
  set.ising_norm_real = ising_norm(a.real_part());
  set.ising_norm_imag = ising_norm(a.imag_part());
  const bool halve = cfg.halve_by_time_reversal;
  const double pair_factor = halve ? 2.0 : 1.0;

  if (!set.complex_input) {
    // (-1)^N / (N! dt^N) sum_l (-1)^l binom(N, l) <phi|U(B^(l); dt/2)|phi>,
    // B^(l) = (N - 2l) B + (pi/dt) I. Terms l and N - l are time-reversal partners.
    const long last = halve ? (nn - 1) / 2 : nn;
    for (long l = 0; l <= last; ++l) {
      const std::pair<std::size_t, std::size_t> binom[] = {{n, static_cast<std::size_t>(l)}};
      const double sign = (nn + l) % 2 == 0 ? 1.0 : -1.0;
      OverlapTerm t{shifted(a, static_cast<double>(nn - 2 * l), 0.0, dt),
                    pair_factor * sign * weight_magnitude(n, binom, dt), TermIndex{static_cast<int>(l), 0, 0, false},
                    halve};
      set.terms.push_back(std::move(t));
    }
    return set;
  }

  // (-1)^N / (N! dt^N) sum_{l,j,k} i^l (-1)^(j+k) binom(N,l) binom(N-l,j) binom(l,k)
  //   <phi|U(A^(l,j,k); dt/2)|phi>,  A^(l,j,k) = (N-l-2j) B + (l-2k) C + (pi/dt) I.
  // (l, j, k) and (l, N-l-j, l-k) negate the unshifted part; the lexicographically
  // smaller (j, k) represents the pair.
  for (long l = 0; l <= nn; ++l) {
    for (long j = 0; j <= nn - l; ++j) {
      for (long k = 0; k <= l; ++k) {
        const long pj = nn - l - j;
        const long pk = l - k;
        if (halve && std::pair(j, k) >= std::pair(pj, pk)) {
          continue;
        }
        const std::pair<std::size_t, std::size_t> binoms[] = {
            {n, static_cast<std::size_t>(l)},
            {static_cast<std::size_t>(nn - l), static_cast<std::size_t>(j)},
            {static_cast<std::size_t>(l), static_cast<std::size_t>(k)},
        };
        const double sign = (nn + j + k) % 2 == 0 ? 1.0 : -1.0;
        const Complex w = pair_factor * sign * weight_magnitude(n, binoms, dt) * i_pow(l);
        OverlapTerm t{shifted(a, static_cast<double>(nn - l - 2 * j), static_cast<double>(l - 2 * k), dt), w,
                      TermIndex{static_cast<int>(l), static_cast<int>(j), static_cast<int>(k), true}, halve};
        set.terms.push_back(std::move(t));
      }
    }
  }
  return set;
}

DtWindow select_dt(const SquareMatrix& a) {
  const auto n = static_cast<double>(a.n());
  const double d = order_factor(a);
  const double h = ising_norm(a);
  const double a2 = two_norm(a);
  const double upper = h > 0.0 ? d / h : std::numeric_limits<double>::infinity();
  auto is_empty = [](double lo, double hi) { return lo > hi * (1.0 + kBoundaryTolerance); };

  DtWindow w;
  w.order_factor = static_cast<int>(d);
  w.exponential = {d * std::numbers::e / n, upper, false};
  w.exponential.empty = is_empty(w.exponential.lower, upper);
  const double g_lower = a2 > 0.0 ? d * std::numbers::e / (n * a2) : std::numeric_limits<double>::infinity();
  w.gurvits = {g_lower, upper, is_empty(g_lower, upper)};

  if (w.exponential.empty) {
    w.chosen = upper;
  } else if (std::isinf(upper)) {
    w.chosen = 2.0 * w.exponential.lower;
  } else {
    w.chosen = std::min(upper, std::sqrt(w.exponential.lower * upper));
  }
  return w;
}

PermanentEstimate glynn_kan_operator_expectation(const SquareMatrix& a) {
  const std::size_t n = a.n();
  if (n > kOperatorMaxN) {
    throw DimensionTooLarge("operator expectation holds 4^N amplitudes and is capped at n = " +
                            std::to_string(kOperatorMaxN));
  }
  const std::uint64_t dim = std::uint64_t{1} << (2 * n);
  // Qubits 0..N-1 carry the column spins, N..2N-1 the row spins; bit set means Z = -1.
  auto spin = [](std::uint64_t basis, std::size_t q) { return (basis >> q) & 1U ? -1.0 : 1.0; };
  std::vector<Complex> ising(dim);
  std::vector<double> parity(dim);
  for (std::uint64_t s = 0; s < dim; ++s) {
    Complex h = 0.0;
    double p = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      Complex row = 0.0;
      for (std::size_t k = 0; k < n; ++k) {
        row += a(j, k) * spin(s, k);
      }
      h += spin(s, n + j) * row;
      p *= spin(s, j) * spin(s, n + j);
    }
    ising[s] = h;
    parity[s] = p;
  }
  const double amp0 = std::ldexp(1.0, -static_cast<int>(n));
  std::vector<Complex> state(dim, amp0);
  for (std::size_t power = 0; power < n; ++power) {
    for (std::uint64_t s = 0; s < dim; ++s) {
      state[s] *= ising[s];
    }
  }
  CompensatedComplexSum overlap;
  for (std::uint64_t s = 0; s < dim; ++s) {
    overlap += amp0 * parity[s] * state[s];
  }
  PermanentEstimate e;
  e.value = overlap.value() / std::tgamma(n + 1.0);
  e.method = Method::operator_expectation;
  e.error_bound = 0.0;
  e.wall_terms = dim;
  return e;
}

PermanentEstimate recombine(const TermSet& terms, std::span<const Complex> overlaps, const ProtocolConfig& cfg) {
  if (overlaps.size() != terms.size()) {
    throw InvalidInput("recombine got " + std::to_string(overlaps.size()) + " overlaps for " +
                       std::to_string(terms.size()) + " terms");
  }
  CompensatedComplexSum sum;
  double weight_mass = 0.0;
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const OverlapTerm& term = terms.terms[t];
    const Complex o = term.uses_conjugate_pair ? Complex{overlaps[t].real(), 0.0} : overlaps[t];
    sum += term.weight * o;
    // Unhalved terms in shot mode carry error in both quadratures.
    weight_mass += std::abs(term.weight) * (term.uses_conjugate_pair ? 1.0 : std::sqrt(2.0));
  }
  PermanentEstimate e;
  e.value = sum.value();
  e.method = Method::quantum_protocol;
  e.wall_terms = terms.size();
  double bound = fd_error_bound(terms.n, terms.dt, terms.ising_norm, terms.ising_norm_real, terms.ising_norm_imag,
                                terms.complex_input);
  if (cfg.mode == EvaluationMode::hadamard_shots) {
    bound += weight_mass * hoeffding_precision(cfg.shots_per_overlap, cfg.failure_probability);
    std::uint64_t circuits = 0;
    for (const OverlapTerm& term : terms.terms) {
      circuits += term.uses_conjugate_pair ? 1 : 2;
    }
    e.samples_used = cfg.shots_per_overlap * circuits;
  }
  e.error_bound = bound;
  return e;
}

PermanentEstimate richardson_extrapolate(const SquareMatrix& a, const ProtocolConfig& base_cfg, unsigned levels,
                                         const OverlapEvaluator& evaluator) {
  if (levels > 4) {
    throw InvalidInput("at most 4 Richardson levels are supported");
  }
  validate(base_cfg, a);
  std::vector<std::vector<Complex>> tableau(levels + 1);
  PermanentEstimate finest;
  std::uint64_t wall_terms = 0;
  std::uint64_t samples = 0;
  for (unsigned i = 0; i <= levels; ++i) {
    ProtocolConfig cfg = base_cfg;
    cfg.dt = std::ldexp(base_cfg.dt, -static_cast<int>(i));
    cfg.seed = base_cfg.seed + (std::uint64_t{i} << 32);
    const TermSet terms = generate_terms(a, cfg);
    const std::vector<Complex> overlaps = evaluator(terms, cfg);
    finest = recombine(terms, overlaps, cfg);
    wall_terms += finest.wall_terms;
    samples += finest.samples_used.value_or(0);
    // The remainder is a series in dt^2, so level m removes the dt^(2m) term.
    tableau[i].push_back(finest.value);
    for (unsigned m = 1; m <= i; ++m) {
      const double factor = std::ldexp(1.0, 2 * static_cast<int>(m)) - 1.0;
      tableau[i].push_back(tableau[i][m - 1] + (tableau[i][m - 1] - tableau[i - 1][m - 1]) / factor);
    }
  }
  PermanentEstimate e = finest;
  e.value = tableau[levels][levels];
  e.wall_terms = wall_terms;
  if (finest.samples_used) {
    e.samples_used = samples;
  }
  for (unsigned i = 0; i <= levels; ++i) {
    e.richardson_levels.push_back(tableau[i][i]);
    if (i > 0) {
      e.richardson_residuals.push_back(std::abs(tableau[i][i] - tableau[i - 1][i - 1]));
    }
  }
  return e;
}

}  // namespace qperm
