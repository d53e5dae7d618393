// Copyright 2026 The pauligraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAULIGRAPH_CIRCUIT_H
#define PAULIGRAPH_CIRCUIT_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pauli.hpp"

namespace pauligraph {

enum class GateKind : uint8_t { TQE, Clifford1Q, MeasSQ, PrepSQ, RotSQ };

// One circuit-level gate. TQE(sigma@i, tau@j) is the self-inverse two-qubit
// entangling gate (I + sigma_i + tau_j - sigma_i tau_j)/2; (Z,X) is CNOT and
// (Z,Z) is CZ. Clifford1Q carries its own single-qubit frame rows.
struct Gate {
  GateKind kind = GateKind::TQE;
  PauliLetter sigma = PauliLetter::I;
  PauliLetter tau = PauliLetter::I;
  size_t i = 0;
  size_t j = 0;
  PauliOperator c1_z;  // Clifford1Q only: images of Z and X on qubit i,
  PauliOperator c1_x;  // stored as 1-qubit signed Hermitian operators
  uint32_t cid = 0;    // MeasSQ only
  bool neg = false;    // MeasSQ only: measure -sigma instead of +sigma
  double angle = 0.0;  // RotSQ only

  static Gate tqe(PauliLetter sigma, PauliLetter tau, size_t i, size_t j);
  static Gate clifford1q(size_t q, PauliOperator z_image, PauliOperator x_image);
  static Gate measure(PauliLetter sigma, size_t q, uint32_t cid, bool neg = false);
  static Gate prepare(PauliLetter sigma, size_t q);
  static Gate rotate(PauliLetter sigma, size_t q, double angle);

  bool operator==(const Gate &o) const;
};

struct Circuit {
  size_t n_qubits = 0;
  std::vector<Gate> gates;
  uint32_t next_cid = 0;

  Circuit() = default;
  explicit Circuit(size_t n) : n_qubits(n) {}

  void append(const Gate &g);
  // Appends a measurement and returns its fresh classical id.
  uint32_t append_measurement(PauliLetter sigma, size_t q, bool neg = false);

  std::vector<const Gate *> measurements() const;
};

// Copy with measurement gates removed, order otherwise preserved.
Circuit strip_measurements(const Circuit &c);

// The measured single-qubit operators (sign included), discovery order.
std::vector<PauliOperator> measured_set(const Circuit &c);

struct CircuitStats {
  size_t total_gates = 0;
  size_t two_qubit_gates = 0;
  size_t depth = 0;
  size_t n_measurements = 0;
};

// Depth by greedy per-qubit layering; measurements and preparations occupy a
// layer of their own qubit like any other gate.
CircuitStats circuit_stats(const Circuit &c);

// (N*k - k*(k+1)/2) / two_qubit_gates; empty when the denominator is zero.
std::optional<double> r2q_ratio(double n_qubits, double k, double two_qubit_gates);

// Plain text dump, one gate per line (`TQE Z0 X1`, `MEASZ 1 -> c3`, ...).
std::string circuit_text(const Circuit &c);

}  // namespace pauligraph

#endif
