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

#include "qperm/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>

#include "qperm/error.hpp"

namespace qperm {

namespace {

constexpr std::array<std::string_view, 8> kNames = {"H", "SDG", "X", "CNOT", "RZ", "RZZ", "CRZ", "CRZZ"};
constexpr std::array<std::size_t, 8> kArity = {1, 1, 1, 2, 1, 2, 2, 3};

}  // namespace

std::string_view gate_name(GateKind kind) { return kNames[static_cast<std::size_t>(kind)]; }

std::size_t gate_arity(GateKind kind) { return kArity[static_cast<std::size_t>(kind)]; }

bool gate_has_angle(GateKind kind) {
  return kind == GateKind::RZ || kind == GateKind::RZZ || kind == GateKind::CRZ || kind == GateKind::CRZZ;
}

void QuantumCircuit::append(const Gate& gate) {
  const std::size_t arity = gate.arity();
  for (std::size_t i = 0; i < arity; ++i) {
    if (gate.qubits[i] >= num_qubits_) {
      throw InvalidInput(std::string(gate_name(gate.kind)) + " on qubit " + std::to_string(gate.qubits[i]) +
                         " of a " + std::to_string(num_qubits_) + "-qubit circuit");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (gate.qubits[i] == gate.qubits[j]) {
        throw InvalidInput(std::string(gate_name(gate.kind)) + " repeats qubit " + std::to_string(gate.qubits[i]));
      }
    }
  }
  Gate g = gate;
  for (std::size_t i = arity; i < g.qubits.size(); ++i) {
    g.qubits[i] = 0;
  }
  if (!gate_has_angle(g.kind)) {
    g.theta = 0.0;
  }
  gates_.push_back(g);
}

std::size_t QuantumCircuit::count(GateKind kind) const {
  return static_cast<std::size_t>(
      std::count_if(gates_.begin(), gates_.end(), [kind](const Gate& g) { return g.kind == kind; }));
}

std::size_t QuantumCircuit::depth() const {
  std::vector<std::size_t> layer(num_qubits_, 0);
  std::size_t deepest = 0;
  for (const Gate& g : gates_) {
    std::size_t top = 0;
    for (std::size_t i = 0; i < g.arity(); ++i) {
      top = std::max(top, layer[g.qubits[i]]);
    }
    ++top;
    for (std::size_t i = 0; i < g.arity(); ++i) {
      layer[g.qubits[i]] = top;
    }
    deepest = std::max(deepest, top);
  }
  return deepest;
}

QuantumCircuit lower_controlled_rotations(const QuantumCircuit& circuit) {
  QuantumCircuit out(circuit.num_qubits());
  auto crz = [&out](std::uint32_t c, std::uint32_t t, double theta) {
    out.append(Gate::rz(t, theta / 2.0));
    out.append(Gate::cnot(c, t));
    out.append(Gate::rz(t, -theta / 2.0));
    out.append(Gate::cnot(c, t));
  };
  for (const Gate& g : circuit.gates()) {
    switch (g.kind) {
      case GateKind::CRZ:
        crz(g.qubits[0], g.qubits[1], g.theta);
        break;
      case GateKind::CRZZ:
        out.append(Gate::cnot(g.qubits[1], g.qubits[2]));
        crz(g.qubits[0], g.qubits[2], g.theta);
        out.append(Gate::cnot(g.qubits[1], g.qubits[2]));
        break;
      default:
        out.append(g);
    }
  }
  return out;
}

std::string format_circuit(const QuantumCircuit& circuit) {
  std::string out = "QUBITS " + std::to_string(circuit.num_qubits()) + "\n";
  char buf[64];
  for (const Gate& g : circuit.gates()) {
    out += gate_name(g.kind);
    for (std::size_t i = 0; i < g.arity(); ++i) {
      out += ' ';
      out += std::to_string(g.qubits[i]);
    }
    if (gate_has_angle(g.kind)) {
      std::snprintf(buf, sizeof(buf), " %.17g", g.theta);
      out += buf;
    }
    out += '\n';
  }
  return out;
}

QuantumCircuit parse_circuit(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  std::optional<QuantumCircuit> circuit;
  auto fail = [&](const std::string& what) {
    throw ParseError("circuit line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream fields(line);
    std::string word;
    if (!(fields >> word) || word[0] == '#') {
      continue;
    }
    if (word == "QUBITS") {
      std::size_t n = 0;
      if (circuit || !(fields >> n)) {
        fail("bad QUBITS header");
      }
      circuit.emplace(n);
      continue;
    }
    if (!circuit) {
      fail("gate before QUBITS header");
    }
    const auto it = std::find(kNames.begin(), kNames.end(), word);
    if (it == kNames.end()) {
      fail("unknown gate '" + word + "'");
    }
    Gate g;
    g.kind = static_cast<GateKind>(it - kNames.begin());
    for (std::size_t i = 0; i < g.arity(); ++i) {
      if (!(fields >> g.qubits[i])) {
        fail("missing qubit index");
      }
    }
    if (gate_has_angle(g.kind) && !(fields >> g.theta)) {
      fail("missing angle");
    }
    try {
      circuit->append(g);
    } catch (const InvalidInput& e) {
      fail(e.what());
    }
  }
  if (!circuit) {
    throw ParseError("missing QUBITS header");
  }
  return *circuit;
}

}  // namespace qperm
