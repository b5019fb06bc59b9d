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
#include <functional>
#include <span>
#include <vector>

#include "qperm/matrix.hpp"
#include "qperm/permanent.hpp"

namespace qperm {

enum class EvaluationMode {
  exact_overlap,
  hadamard_shots,
};

struct ProtocolConfig {
  /// Finite-difference time step. Propagators are evaluated at dt / 2.
  double dt = 0.0;
  EvaluationMode mode = EvaluationMode::exact_overlap;
  std::uint64_t shots_per_overlap = 1000;
  /// Richardson levels r; the protocol runs at dt, dt/2, ..., dt/2^r.
  unsigned richardson_levels = 0;
  std::uint64_t seed = 0;
  /// Emit only one term of each time-reversal pair and use twice its real part.
  bool halve_by_time_reversal = true;
  /// Skip the convergence check on dt.
  bool allow_divergent_dt = false;
  /// Failure probability used to turn a shot count into a Hadamard-test precision.
  double failure_probability = 0.05;
  ExecOptions exec;
};

/// 2 for real input, 4 for complex input.
int order_factor(const SquareMatrix& a);

/// Largest dt satisfying the finite-difference convergence condition d / ||H(A)||
/// (infinity for the zero matrix).
double max_convergent_dt(const SquareMatrix& a);

/// Throws InvalidTimeStep for a non-positive dt, or for dt above max_convergent_dt unless
/// allow_divergent_dt is set; InvalidInput for other bad fields.
void validate(const ProtocolConfig& cfg, const SquareMatrix& a);

struct TermIndex {
  int l = 0;
  int j = 0;
  int k = 0;
  /// False for the real-input expansion, which is indexed by l alone.
  bool has_jk = false;

  friend bool operator==(const TermIndex&, const TermIndex&) = default;
};

/// One propagator U(M; dt/2) of the finite-difference expansion.
struct OverlapTerm {
  /// Real matrix, including the pi/dt diagonal shift that absorbs the parity operator.
  SquareMatrix shifted_matrix;
  /// Combination coefficient with the (-1)^N / (N! dt^N) prefactor folded in.
  Complex weight;
  TermIndex index;
  /// Stands for itself and its time-reversed partner; combine with Re(overlap) only.
  bool uses_conjugate_pair = false;
};

/// A generated term list together with what recombination needs to know about the input.
struct TermSet {
  std::size_t n = 0;
  bool complex_input = false;
  double dt = 0.0;
  /// ||H(A)||, ||H(B)|| and ||H(C)|| (sums of absolute entries).
  double ising_norm = 0.0;
  double ising_norm_real = 0.0;
  double ising_norm_imag = 0.0;
  std::vector<OverlapTerm> terms;

  std::size_t size() const { return terms.size(); }
};

/// Builds the overlap terms for cfg.dt. Real input gives N + 1 terms (floor((N+1)/2)
/// halved); complex input gives (N+1)(N+2)(N+3)/6 terms. Halving drops self-paired terms,
/// whose overlap is <phi|P|phi> = 0.
TermSet generate_terms(const SquareMatrix& a, const ProtocolConfig& cfg);

/// Number of terms generate_terms emits, without building them.
std::size_t overlap_term_count(std::size_t n, bool complex_input, bool halved);

struct Window {
  double lower = 0.0;
  double upper = 0.0;
  bool empty = true;
};

struct DtWindow {
  /// de/N < dt <= d/||H||: exponentially small additive error.
  Window exponential;
  /// de/(N ||A||_2) <= dt <= d/||H||: analytic bound at or below Gurvits'.
  Window gurvits;
  /// Geometric mean of a non-empty exponential window, else d/||H||.
  double chosen = 0.0;
  int order_factor = 2;
};

DtWindow select_dt(const SquareMatrix& a);

/// Per(A) = <phi| P H(A)^N |phi> / N! on a dense 4^N-amplitude state. n <= 7.
PermanentEstimate glynn_kan_operator_expectation(const SquareMatrix& a);

/// Weighted compensated sum of overlaps. Halved terms use Re(overlap). Attaches the
/// finite-difference bound (eps_FD = 1), plus the Hadamard-test bound in shot mode.
/// Throws InvalidInput on a length mismatch.
PermanentEstimate recombine(const TermSet& terms, std::span<const Complex> overlaps, const ProtocolConfig& cfg);

/// Produces one overlap per term, aligned with terms.terms.
using OverlapEvaluator = std::function<std::vector<Complex>(const TermSet&, const ProtocolConfig&)>;

/// Runs the protocol at dt, dt/2, ..., dt/2^r and extrapolates in dt^2 with a Richardson
/// tableau. levels = 0 is a plain recombine. levels <= 4.
PermanentEstimate richardson_extrapolate(const SquareMatrix& a, const ProtocolConfig& base_cfg, unsigned levels,
                                         const OverlapEvaluator& evaluator);

}  // namespace qperm
