// Copyright 2026 The pauligraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PAULIGRAPH_PREP_REDUCTION_HPP_
#define PAULIGRAPH_PREP_REDUCTION_HPP_

#include <cstddef>
#include <utility>
#include <vector>

#include "frame.hpp"
#include "graph.hpp"
#include "pauli.hpp"

namespace pauligraph {

// One degree of freedom fixed by a preparation: the output satisfies
// p rho = rho, and q maps the discarded eigenspace onto the kept one.
struct PrepPair {
  PauliOperator p;
  PauliOperator q;
};

using PrepSet = std::vector<PrepPair>;

// Throws std::invalid_argument unless every operator is a Hermitian
// non-identity word on one common qubit count with form(p_i, p_j) = 0,
// form(q_i, q_j) = 0 and form(p_i, q_j) = [i == j].
void validate_prep_set(const PrepSet &pi);

// Total Pauli weight over all stabilizers and destabilizers.
size_t prep_cost(const PrepSet &pi);

// Destabilizers paired to the replacement stabilizers s_prime, assembled
// from the originals: q'_i multiplies the q_j selected by the
// anti-commutation pattern between p_j and the pre-image of an axis
// anti-commuting with s_prime[i]'s image. Requires
// forward_action(f_ctx, s_prime[i]) to have weight one on per-element
// distinct qubits; throws
// std::runtime_error("destabilizers_from: span mismatch") when that or the
// resulting pairing fails.
std::vector<PauliOperator> destabilizers_from(
    const PrepSet &pi, const std::vector<PauliOperator> &s_prime,
    const PauliFrame &f_ctx);

// Rewrites a preparation followed by a frame into an equivalent pair whose
// frame is cheaper when possible. The combined channel, prepare then
// conjugate, is preserved exactly, and the returned frame never costs more
// than f; when no improvement is found the inputs come back unchanged.
std::pair<PrepSet, PauliFrame> reduce_frame_by_prep(const PrepSet &pi,
                                                    const PauliFrame &f);

// Multiplies rotation and measurement nodes by stabilizers of preparations
// they can be placed next to, when that lowers the node weight or enables a
// merge; enabled merges are applied immediately. Channel-preserving, and the
// total node weight never increases.
PauliGraph reduce_nodes_by_prep(PauliGraph g);

}  // namespace pauligraph

#endif
