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

#ifndef PAULIGRAPH_DENSE_H
#define PAULIGRAPH_DENSE_H

#include <Eigen/Dense>
#include <complex>

#include "circuit.hpp"
#include "pauli.hpp"

namespace pauligraph {

using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Dense matrices are the reference semantics everything else is checked
// against. They are built directly from per-qubit 2x2 factors and never go
// through the packed group arithmetic.

Matrix kron(const Matrix &a, const Matrix &b);

Matrix letter_matrix(PauliLetter l);

// i^phase * tensor of X^x Z^z factors, qubit 0 as the leftmost factor.
Matrix pauli_matrix(const PauliOperator &p);

// Hard cap for dense semantics; 2^n x 2^n matrices stay cheap below it.
inline constexpr size_t kMaxDenseQubits = 5;

void check_dense_size(size_t n);

// 2x2 unitary of the one-qubit Clifford sending Z to z_image and X to
// x_image, found by search over the <H, S> group rather than tableau algebra.
Matrix clifford1q_unitary(const PauliOperator &z_image, const PauliOperator &x_image);

// Unitary of a TQE ((I + sigma_i + tau_j - sigma_i tau_j)/2), Clifford1Q or
// RotSQ gate on n qubits. Measurements and preparations have no unitary.
Matrix gate_unitary(const Gate &g, size_t n);

// Product of gate unitaries, first gate applied first.
Matrix circuit_unitary(const Circuit &c);

}  // namespace pauligraph

#endif
