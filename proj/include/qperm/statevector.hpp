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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qperm/circuit.hpp"

namespace qperm {

/// Dense statevector on up to kMaxQubits qubits. Qubit q is bit q of the basis index.
class StateVector {
 public:
  static constexpr std::size_t kMaxQubits = 26;

  /// |0...0>. Throws DimensionTooLarge above kMaxQubits.
  explicit StateVector(std::size_t num_qubits);

  void apply(const Gate& gate);
  void run(const QuantumCircuit& circuit);

  std::size_t num_qubits() const { return num_qubits_; }
  std::span<const std::complex<double>> amplitudes() const { return amps_; }
  double norm() const;
  /// Marginal probability of measuring |1> on qubit q.
  double probability_one(std::size_t q) const;

 private:
  std::size_t num_qubits_;
  std::vector<std::complex<double>> amps_;
};

/// Runs the circuit from |0...0> and returns the final amplitudes.
std::vector<std::complex<double>> simulate_statevector(const QuantumCircuit& circuit);

}  // namespace qperm
