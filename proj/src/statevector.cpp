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

#include "qperm/statevector.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "qperm/error.hpp"

namespace qperm {

namespace {

using Amp = std::complex<double>;

double z_sign(std::size_t basis, std::uint32_t q) { return (basis >> q) & 1U ? -1.0 : 1.0; }

Amp phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

}  // namespace

StateVector::StateVector(std::size_t num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits > kMaxQubits) {
    throw DimensionTooLarge("statevector simulation is capped at " + std::to_string(kMaxQubits) + " qubits, got " +
                            std::to_string(num_qubits));
  }
  amps_.assign(std::size_t{1} << num_qubits, Amp{});
  amps_[0] = 1.0;
}

void StateVector::apply(const Gate& g) {
  const std::size_t dim = amps_.size();
  const std::uint32_t q0 = g.qubits[0];
  const std::uint32_t q1 = g.qubits[1];
  const std::uint32_t q2 = g.qubits[2];
  const std::size_t bit0 = std::size_t{1} << q0;
  switch (g.kind) {
    case GateKind::H: {
      const double r = std::numbers::sqrt2 / 2.0;
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit0) {
          continue;
        }
        const Amp a = amps_[i];
        const Amp b = amps_[i | bit0];
        amps_[i] = r * (a + b);
        amps_[i | bit0] = r * (a - b);
      }
      break;
    }
    case GateKind::Sdg:
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit0) {
          amps_[i] *= Amp{0.0, -1.0};
        }
      }
      break;
    case GateKind::X:
      for (std::size_t i = 0; i < dim; ++i) {
        if (!(i & bit0)) {
          std::swap(amps_[i], amps_[i | bit0]);
        }
      }
      break;
    case GateKind::CNOT: {
      const std::size_t bit1 = std::size_t{1} << q1;
      for (std::size_t i = 0; i < dim; ++i) {
        if ((i & bit0) && !(i & bit1)) {
          std::swap(amps_[i], amps_[i | bit1]);
        }
      }
      break;
    }
    case GateKind::RZ: {
      const Amp p0 = phase(-g.theta / 2.0);
      const Amp p1 = phase(g.theta / 2.0);
      for (std::size_t i = 0; i < dim; ++i) {
        amps_[i] *= (i & bit0) ? p1 : p0;
      }
      break;
    }
    case GateKind::RZZ: {
      const Amp same = phase(-g.theta / 2.0);
      const Amp diff = phase(g.theta / 2.0);
      for (std::size_t i = 0; i < dim; ++i) {
        amps_[i] *= z_sign(i, q0) * z_sign(i, q1) > 0 ? same : diff;
      }
      break;
    }
    case GateKind::CRZ: {
      const Amp p0 = phase(-g.theta / 2.0);
      const Amp p1 = phase(g.theta / 2.0);
      const std::size_t bit1 = std::size_t{1} << q1;
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit0) {
          amps_[i] *= (i & bit1) ? p1 : p0;
        }
      }
      break;
    }
    case GateKind::CRZZ: {
      const Amp same = phase(-g.theta / 2.0);
      const Amp diff = phase(g.theta / 2.0);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit0) {
          amps_[i] *= z_sign(i, q1) * z_sign(i, q2) > 0 ? same : diff;
        }
      }
      break;
    }
  }
}

void StateVector::run(const QuantumCircuit& circuit) {
  if (circuit.num_qubits() != num_qubits_) {
    throw InvalidInput("circuit and state have different qubit counts");
  }
  for (const Gate& g : circuit.gates()) {
    apply(g);
  }
}

double StateVector::norm() const {
  double total = 0.0;
  for (const Amp& a : amps_) {
    total += std::norm(a);
  }
  return std::sqrt(total);
}

double StateVector::probability_one(std::size_t q) const {
  const std::size_t bit = std::size_t{1} << q;
  double p = 0.0;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & bit) {
      p += std::norm(amps_[i]);
    }
  }
  return p;
}

std::vector<std::complex<double>> simulate_statevector(const QuantumCircuit& circuit) {
  StateVector state(circuit.num_qubits());
  state.run(circuit);
  return {state.amplitudes().begin(), state.amplitudes().end()};
}

}  // namespace qperm
