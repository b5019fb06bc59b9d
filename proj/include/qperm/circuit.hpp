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

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qperm {

enum class GateKind : std::uint8_t {
  H,
  Sdg,
  X,
  CNOT,
  /// exp(-i theta/2 Z).
  RZ,
  /// exp(-i theta/2 Z Z).
  RZZ,
  /// RZ on the target when the control is |1>.
  CRZ,
  /// RZZ on the two targets when the control is |1>.
  CRZZ,
};

std::string_view gate_name(GateKind kind);
std::size_t gate_arity(GateKind kind);
bool gate_has_angle(GateKind kind);

/// qubits[0] is the control for controlled gates.
struct Gate {
  GateKind kind = GateKind::H;
  std::array<std::uint32_t, 3> qubits{};
  double theta = 0.0;

  std::size_t arity() const { return gate_arity(kind); }

  static Gate h(std::uint32_t q) { return {GateKind::H, {q, 0, 0}, 0.0}; }
  static Gate sdg(std::uint32_t q) { return {GateKind::Sdg, {q, 0, 0}, 0.0}; }
  static Gate x(std::uint32_t q) { return {GateKind::X, {q, 0, 0}, 0.0}; }
  static Gate cnot(std::uint32_t c, std::uint32_t t) { return {GateKind::CNOT, {c, t, 0}, 0.0}; }
  static Gate rz(std::uint32_t q, double theta) { return {GateKind::RZ, {q, 0, 0}, theta}; }
  static Gate rzz(std::uint32_t a, std::uint32_t b, double theta) { return {GateKind::RZZ, {a, b, 0}, theta}; }
  static Gate crz(std::uint32_t c, std::uint32_t t, double theta) { return {GateKind::CRZ, {c, t, 0}, theta}; }
  static Gate crzz(std::uint32_t c, std::uint32_t t1, std::uint32_t t2, double theta) {
    return {GateKind::CRZZ, {c, t1, t2}, theta};
  }

  friend bool operator==(const Gate&, const Gate&) = default;
};

class QuantumCircuit {
 public:
  explicit QuantumCircuit(std::size_t num_qubits) : num_qubits_(num_qubits) {}

  /// Throws InvalidInput for out-of-range or repeated qubits.
  void append(const Gate& gate);

  std::size_t num_qubits() const { return num_qubits_; }
  const std::vector<Gate>& gates() const { return gates_; }
  std::size_t size() const { return gates_.size(); }
  std::size_t count(GateKind kind) const;
  /// Greedy layering: each gate sits one layer above the deepest of its qubits.
  std::size_t depth() const;

  friend bool operator==(const QuantumCircuit&, const QuantumCircuit&) = default;

 private:
  std::size_t num_qubits_;
  std::vector<Gate> gates_;
};

/// Rewrites CRZZ and CRZ into CNOT and RZ:
///   CRZZ(c, t1, t2, theta) = CNOT(t1, t2) CRZ(c, t2, theta) CNOT(t1, t2)
///   CRZ(c, t, theta)       = RZ(t, theta/2) CNOT(c, t) RZ(t, -theta/2) CNOT(c, t)
QuantumCircuit lower_controlled_rotations(const QuantumCircuit& circuit);

/// One gate per line, `GATE q0 [q1 [q2]] [theta]`, after a `QUBITS n` header. Angles use
/// round-trip precision.
std::string format_circuit(const QuantumCircuit& circuit);
/// Inverse of format_circuit. Blank lines and lines starting with '#' are skipped.
QuantumCircuit parse_circuit(std::string_view text);

}  // namespace qperm
