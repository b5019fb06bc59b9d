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

#include "qperm/hadamard.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "detail/sign_pairs.hpp"
#include "qperm/error.hpp"
#include "qperm/kahan.hpp"
#include "qperm/statevector.hpp"

namespace qperm {

namespace {

constexpr double kElideAngle = 1e-15;
constexpr std::size_t kExactOverlapMaxN = 13;
// Keeps the Sdg-circuit stream clear of seed + 1, seed + 2, ... used by neighbouring terms.
constexpr std::uint64_t kImagSeedMix = 0x9E3779B97F4A7C15ULL;

void require_real(const SquareMatrix& m) {
  if (!m.is_real()) {
    throw InvalidInput("propagator matrices must be real");
  }
}

void append_rzz_layer(QuantumCircuit& circuit, const SquareMatrix& m, double dt_half, std::optional<std::uint32_t> control) {
  const auto n = static_cast<std::uint32_t>(m.n());
  for (std::uint32_t p = 0; p < n; ++p) {
    for (std::uint32_t q = 0; q < n; ++q) {
      const double theta = 2.0 * m(p, q).real() * dt_half;
      if (std::abs(theta) < kElideAngle) {
        continue;
      }
      circuit.append(control ? Gate::crzz(*control, q, n + p, theta) : Gate::rzz(q, n + p, theta));
    }
  }
}

}  // namespace

QuantumCircuit build_propagator_circuit(const SquareMatrix& m, double dt_half) {
  require_real(m);
  QuantumCircuit circuit(2 * m.n());
  append_rzz_layer(circuit, m, dt_half, std::nullopt);
  return circuit;
}

QuantumCircuit build_hadamard_test(const SquareMatrix& m, double dt_half, bool measure_imag, bool lowered) {
  require_real(m);
  const auto system = static_cast<std::uint32_t>(2 * m.n());
  const std::uint32_t ancilla = system;
  QuantumCircuit circuit(system + 1);
  circuit.append(Gate::h(ancilla));
  if (measure_imag) {
    circuit.append(Gate::sdg(ancilla));
  }
  for (std::uint32_t q = 0; q < system; ++q) {
    circuit.append(Gate::h(q));
  }
  append_rzz_layer(circuit, m, dt_half, ancilla);
  circuit.append(Gate::h(ancilla));
  return lowered ? lower_controlled_rotations(circuit) : circuit;
}

double hadamard_test_bias(const SquareMatrix& m, double dt_half, bool measure_imag) {
  const QuantumCircuit circuit = build_hadamard_test(m, dt_half, measure_imag);
  StateVector state(circuit.num_qubits());
  state.run(circuit);
  return 1.0 - 2.0 * state.probability_one(circuit.num_qubits() - 1);
}

OverlapResult overlap_exact(const SquareMatrix& m, double dt_half, const ExecOptions& exec) {
  require_real(m);
  const std::size_t n = m.n();
  if (n > kExactOverlapMaxN) {
    throw DimensionTooLarge("exact overlap is capped at n = " + std::to_string(kExactOverlapMaxN));
  }
  // The last column spin stays +1; the other half of the configurations mirrors it.
  auto chunk = [&](std::uint64_t begin, std::uint64_t end) {
    CompensatedSum sum;
    detail::for_each_sign_pair(n, m.real_part(), {}, begin, end, n - 1,
                               [&](int, double h, double) { sum.add(std::cos(dt_half * h)); });
    return sum;
  };
  CompensatedSum total;
  for (const auto& part : run_chunks<CompensatedSum>(std::uint64_t{1} << n, exec, chunk)) {
    total.merge(part);
  }
  OverlapResult r;
  r.real_part = std::ldexp(total.value(), 1 - 2 * static_cast<int>(n));
  r.imag_part = 0.0;
  return r;
}

OverlapResult overlap_statevector(const SquareMatrix& m, double dt_half) {
  OverlapResult r;
  r.real_part = hadamard_test_bias(m, dt_half, false);
  r.imag_part = hadamard_test_bias(m, dt_half, true);
  return r;
}

namespace {

double sample_bias(const SquareMatrix& m, double dt_half, std::uint64_t shots, std::uint64_t seed, bool measure_imag) {
  const double p0 = std::clamp(0.5 * (1.0 + hadamard_test_bias(m, dt_half, measure_imag)), 0.0, 1.0);
  std::mt19937_64 rng(seed);
  std::binomial_distribution<std::uint64_t> draw(shots, p0);
  const std::uint64_t zeros = draw(rng);
  const std::uint64_t ones = shots - zeros;
  return (static_cast<double>(zeros) - static_cast<double>(ones)) / static_cast<double>(shots);
}

}  // namespace

OverlapResult overlap_shots(const SquareMatrix& m, double dt_half, std::uint64_t shots, std::uint64_t seed,
                            bool measure_imag) {
  if (shots == 0) {
    throw InvalidInput("shot sampling needs at least one shot");
  }
  const auto count = static_cast<double>(shots);
  OverlapResult r;
  r.mode = OverlapMode::shots;
  r.real_part = sample_bias(m, dt_half, shots, seed, false);
  r.variance_estimate = (1.0 - r.real_part * r.real_part) / count;
  r.shots_used = shots;
  if (measure_imag) {
    r.imag_part = sample_bias(m, dt_half, shots, seed ^ kImagSeedMix, true);
    r.variance_estimate += (1.0 - *r.imag_part * *r.imag_part) / count;
    r.shots_used += shots;
  }
  return r;
}

std::uint64_t hoeffding_shots(double epsilon_ht, double delta) {
  if (!(epsilon_ht > 0.0 && epsilon_ht < 1.0) || !(delta > 0.0 && delta < 1.0)) {
    throw InvalidInput("hoeffding_shots needs 0 < epsilon < 1 and 0 < delta < 1");
  }
  return static_cast<std::uint64_t>(std::ceil(2.0 * std::log(2.0 / delta) / (epsilon_ht * epsilon_ht)));
}

double hoeffding_precision(std::uint64_t shots, double delta) {
  if (shots == 0 || !(delta > 0.0 && delta < 1.0)) {
    throw InvalidInput("hoeffding_precision needs shots >= 1 and 0 < delta < 1");
  }
  return std::sqrt(2.0 * std::log(2.0 / delta) / static_cast<double>(shots));
}

}  // namespace qperm
