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

#ifndef PAULIGRAPH_FRAME_H
#define PAULIGRAPH_FRAME_H

#include <vector>

#include "circuit.hpp"
#include "pauli.hpp"

namespace pauligraph {

// Signed Clifford tableau: per qubit the images (eff_z_i, eff_x_i) of Z_i and
// X_i under conjugation by some Clifford unitary. Rows are signed Hermitian
// Paulis obeying the symplectic relations
//   form(eff_z_i, eff_z_j) = form(eff_x_i, eff_x_j) = 0,
//   form(eff_z_i, eff_x_j) = delta_ij.
class PauliFrame {
 public:
  PauliFrame() = default;
  // Origin frame: eff_z_i = Z_i, eff_x_i = X_i.
  explicit PauliFrame(size_t n);

  static PauliFrame origin(size_t n) { return PauliFrame(n); }

  size_t num_qubits() const { return eff_z_.size(); }
  const PauliOperator &eff_z(size_t i) const { return eff_z_[i]; }
  const PauliOperator &eff_x(size_t i) const { return eff_x_[i]; }
  // eff_y_i = -i * eff_z_i * eff_x_i.
  PauliOperator eff_y(size_t i) const;
  PauliOperator eff(size_t i, PauliLetter l) const;

  void set_row(size_t i, PauliOperator z_image, PauliOperator x_image);

  bool is_valid() const;
  bool is_origin() const;

  bool operator==(const PauliFrame &o) const {
    return eff_z_ == o.eff_z_ && eff_x_ == o.eff_x_;
  }
  bool operator!=(const PauliFrame &o) const { return !(*this == o); }

 private:
  std::vector<PauliOperator> eff_z_;
  std::vector<PauliOperator> eff_x_;
};

// Conjugation image of p: substitute every X_q / Z_q factor by the frame rows,
// multiplying in canonical order so the phase is exact.
PauliOperator forward_action(const PauliFrame &f, const PauliOperator &p);

// Inverse frame, signs asserted so that forward_action(f, row) lands back on
// the basis operators exactly.
PauliFrame invert(const PauliFrame &f);

// Preimage of p under the frame: forward_action(invert(f), p).
PauliOperator backward_action(const PauliFrame &f, const PauliOperator &p);

// forward_action(compose(f1, f2), p) == forward_action(f1, forward_action(f2, p)).
PauliFrame compose(const PauliFrame &f1, const PauliFrame &f2);

// Frame of TQE(sigma@i, tau@j): a Pauli anti-commuting with sigma_i picks up a
// tau_j factor and vice versa.
PauliFrame tqe_frame(size_t n, PauliLetter sigma, PauliLetter tau, size_t i, size_t j);

// Frame of exp(-i (quarter_turns*pi/2)/2 * p) for Hermitian p.
PauliFrame rotation_frame(const PauliOperator &p, int quarter_turns);

// Requires forward_action(f, p) to be a single-qubit axis and form(p, q) = 1.
// Rewrites the pre-image rows: every row element anti-commuting with q picks
// up a factor of p, the slot holding +-p keeps its value and q takes over its
// partner slot. The image of p is unchanged, and any w commuting with both p
// and q keeps its image up to an exact factor of forward_action(f, p).
PauliFrame decouple(const PauliFrame &f, const PauliOperator &p, const PauliOperator &q);

// Sum of row weights in excess of the origin frame's.
size_t frame_cost(const PauliFrame &f);

// Frame realized by a circuit's TQE / Clifford1Q gates (time order).
// Throws on gates without Clifford frame semantics.
PauliFrame circuit_frame(const Circuit &c);

// n-qubit frame of a single TQE or Clifford1Q gate.
PauliFrame gate_frame(const Gate &g, size_t n);

// Exact synthesis: a circuit of TQE and Clifford1Q gates whose circuit_frame
// equals f, signs included. Deterministic.
Circuit frame_to_circuit(const PauliFrame &f);

}  // namespace pauligraph

#endif
