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
#include <optional>

#include "qperm/circuit.hpp"
#include "qperm/matrix.hpp"
#include "qperm/parallel.hpp"

namespace qperm {

enum class OverlapMode {
  exact,
  shots,
};

/// Estimate of <phi|U|phi>.
struct OverlapResult {
  double real_part = 0.0;
  std::optional<double> imag_part;
  double variance_estimate = 0.0;
  std::uint64_t shots_used = 0;
  OverlapMode mode = OverlapMode::exact;

  Complex value() const { return {real_part, imag_part.value_or(0.0)}; }
};

/// U(M; dt_half) = prod_{p,q} exp(-i M_pq dt_half Z_{N+p} Z_q) as N^2 RZZ gates on 2N
/// qubits, RZZ(q, N+p, 2 M_pq dt_half), row-major. Angles below 1e-15 are dropped.
/// Throws InvalidInput for a non-real M.
QuantumCircuit build_propagator_circuit(const SquareMatrix& m, double dt_half);

/// Hadamard test for <phi|U(M; dt_half)|phi> on 2N+1 qubits with the ancilla last:
/// H(anc) [Sdg(anc)] H(system) CRZZ... H(anc). With `lowered` the CRZZ gates are
/// synthesized into CNOT and RZ (4 CNOTs each).
QuantumCircuit build_hadamard_test(const SquareMatrix& m, double dt_half, bool measure_imag, bool lowered = true);

/// P(0) - P(1) on the ancilla after exact simulation of the Hadamard test. Equals
/// Re<phi|U|phi>, or Im<phi|U|phi> with measure_imag.
double hadamard_test_bias(const SquareMatrix& m, double dt_half, bool measure_imag);

/// Diagonal fast path: 4^-N sum_s exp(-i dt_half sum_pq M_pq s_{N+p} s_q). Flipping every
/// column spin negates the exponent, so the overlap is real and only half the
/// configurations are visited. n <= 13.
OverlapResult overlap_exact(const SquareMatrix& m, double dt_half, const ExecOptions& exec = {});

/// Same overlap read off the gate-level Hadamard test (both quadratures).
OverlapResult overlap_statevector(const SquareMatrix& m, double dt_half);

/// Draws `shots` ancilla outcomes from the exact Hadamard-test marginal. real_part is
/// (n0 - n1) / shots. With measure_imag the Sdg circuit is sampled as well, with its own
/// `shots` and a seed derived from `seed`.
OverlapResult overlap_shots(const SquareMatrix& m, double dt_half, std::uint64_t shots, std::uint64_t seed,
                            bool measure_imag = false);

/// ceil(2 ln(2/delta) / eps^2): shots for a +-1 outcome mean to land within eps with
/// probability at least 1 - delta (two-sided Hoeffding).
std::uint64_t hoeffding_shots(double epsilon_ht, double delta);

/// Precision guaranteed by `shots` at failure probability delta; inverse of hoeffding_shots.
double hoeffding_precision(std::uint64_t shots, double delta);

}  // namespace qperm
