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

#ifndef PAULIGRAPH_ORACLE_H
#define PAULIGRAPH_ORACLE_H

#include <complex>
#include <functional>
#include <map>
#include <vector>

#include "dense.hpp"
#include "graph.hpp"

namespace pauligraph {

// Reference semantics: exact density-matrix channels for small systems.
// Everything here is deliberately independent of the frame algebra so it can
// arbitrate it.

struct DenseChannel {
  size_t n_qubits = 0;
  std::function<Matrix(const Matrix &)> apply;
};

using WeightedPauliSum = std::vector<std::pair<std::complex<double>, PauliOperator>>;

Matrix sum_matrix(const WeightedPauliSum &s, size_t n_qubits);

// The node's outcome-averaged channel applied to a Pauli input, written as a
// weighted Pauli sum: rotations mix in the product axis, measurements and
// preparations keep commuting inputs (preparations append their stabilizer)
// and annihilate the rest.
WeightedPauliSum node_pauli_map(const GraphNode &n, const PauliOperator &q);

// Outcome-averaged channel of one node on a density matrix.
Matrix node_channel(const GraphNode &n, const Matrix &rho, size_t n_qubits);

// Composition of the node channels in list order, then the terminal frame.
DenseChannel channel_of(const PauliGraph &g);

// Channels agree on the full Pauli operator basis within tol.
bool hold_equivalent(const PauliGraph &a, const PauliGraph &b, double tol = 1e-9);

// Joint distribution of the declared outcome ids on input state rho, by
// branching every measurement; remap nodes compute their outputs from the
// branch's bits and declared ids resolve through the graph's alias table.
std::map<std::vector<int>, double> joint_distribution(
    const PauliGraph &g, const std::vector<uint32_t> &ids, const Matrix &rho);

// Same declared joint statistics on this input state within tol.
bool release_equivalent(const PauliGraph &a, const PauliGraph &b,
                        const std::vector<uint32_t> &ids, const Matrix &rho,
                        double tol = 1e-9);

}  // namespace pauligraph

#endif
