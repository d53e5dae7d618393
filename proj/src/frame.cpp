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

#include "frame.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pauligraph {

PauliFrame::PauliFrame(size_t n) {
  eff_z_.reserve(n);
  eff_x_.reserve(n);
  for (size_t i = 0; i < n; i++) {
    eff_z_.push_back(PauliOperator::single(n, i, PauliLetter::Z));
    eff_x_.push_back(PauliOperator::single(n, i, PauliLetter::X));
  }
}

PauliOperator PauliFrame::eff_y(size_t i) const {
  PauliOperator y = multiply(eff_z_[i], eff_x_[i]);
  y.mul_phase(3);
  return y;
}

PauliOperator PauliFrame::eff(size_t i, PauliLetter l) const {
  switch (l) {
    case PauliLetter::X:
      return eff_x_[i];
    case PauliLetter::Y:
      return eff_y(i);
    case PauliLetter::Z:
      return eff_z_[i];
    case PauliLetter::I:
      break;
  }
  throw std::invalid_argument("PauliFrame::eff: identity letter");
}

void PauliFrame::set_row(size_t i, PauliOperator z_image, PauliOperator x_image) {
  if (z_image.num_qubits() != num_qubits() || x_image.num_qubits() != num_qubits()) {
    throw std::invalid_argument("PauliFrame::set_row: qubit count mismatch");
  }
  eff_z_[i] = std::move(z_image);
  eff_x_[i] = std::move(x_image);
}

bool PauliFrame::is_valid() const {
  size_t n = num_qubits();
  for (size_t i = 0; i < n; i++) {
    if (!eff_z_[i].is_hermitian() || !eff_x_[i].is_hermitian()) {
      return false;
    }
    for (size_t j = 0; j < n; j++) {
      if (commutator_form(eff_z_[i], eff_z_[j]) || commutator_form(eff_x_[i], eff_x_[j])) {
        return false;
      }
      if (commutator_form(eff_z_[i], eff_x_[j]) != (i == j)) {
        return false;
      }
    }
  }
  return true;
}

bool PauliFrame::is_origin() const { return *this == PauliFrame(num_qubits()); }

PauliOperator forward_action(const PauliFrame &f, const PauliOperator &p) {
  if (p.num_qubits() != f.num_qubits()) {
    throw std::invalid_argument("forward_action: qubit count mismatch");
  }
  // p = i^k (prod_q X_q^xq)(prod_q Z_q^zq); conjugation substitutes each factor.
  PauliOperator out = PauliOperator::phase_times_identity(p.num_qubits(), p.phase());
  for (size_t q = 0; q < p.num_qubits(); q++) {
    if (p.x_bits().get(q)) {
      out = multiply(out, f.eff_x(q));
    }
  }
  for (size_t q = 0; q < p.num_qubits(); q++) {
    if (p.z_bits().get(q)) {
      out = multiply(out, f.eff_z(q));
    }
  }
  return out;
}

// Preimage in the phaseless space: the coefficient of X_i / Z_i in the
// expansion of p over the frame rows is read off with the symplectic form.
static PauliVector backward_space(const PauliFrame &f, const PauliVector &p) {
  PauliVector out(f.num_qubits());
  for (size_t i = 0; i < f.num_qubits(); i++) {
    out.z.set(i, commutator_form(p, lift(f.eff_x(i))));
    out.x.set(i, commutator_form(p, lift(f.eff_z(i))));
  }
  return out;
}

PauliFrame invert(const PauliFrame &f) {
  size_t n = f.num_qubits();
  PauliFrame inv(n);
  for (size_t i = 0; i < n; i++) {
    PauliOperator z_pre = embed(backward_space(f, lift(PauliOperator::single(n, i, PauliLetter::Z))));
    PauliOperator x_pre = embed(backward_space(f, lift(PauliOperator::single(n, i, PauliLetter::X))));
    // Assert signs so that f maps each preimage onto the exact basis operator.
    if (forward_action(f, z_pre).sign() < 0) {
      z_pre.mul_phase(2);
    }
    if (forward_action(f, x_pre).sign() < 0) {
      x_pre.mul_phase(2);
    }
    inv.set_row(i, std::move(z_pre), std::move(x_pre));
  }
  return inv;
}

PauliOperator backward_action(const PauliFrame &f, const PauliOperator &p) {
  return forward_action(invert(f), p);
}

PauliFrame compose(const PauliFrame &f1, const PauliFrame &f2) {
  if (f1.num_qubits() != f2.num_qubits()) {
    throw std::invalid_argument("compose: qubit count mismatch");
  }
  PauliFrame out(f1.num_qubits());
  for (size_t i = 0; i < f1.num_qubits(); i++) {
    out.set_row(i, forward_action(f1, f2.eff_z(i)), forward_action(f1, f2.eff_x(i)));
  }
  return out;
}

PauliFrame tqe_frame(size_t n, PauliLetter sigma, PauliLetter tau, size_t i, size_t j) {
  Gate g = Gate::tqe(sigma, tau, i, j);  // validates arguments
  PauliFrame f(n);
  if (i >= n || j >= n) {
    throw std::invalid_argument("tqe_frame: qubit index out of range");
  }
  PauliOperator sig_i = PauliOperator::single(n, i, g.sigma);
  PauliOperator tau_j = PauliOperator::single(n, j, g.tau);
  for (size_t q : {i, j}) {
    for (PauliLetter l : {PauliLetter::Z, PauliLetter::X}) {
      PauliOperator base = PauliOperator::single(n, q, l);
      bool a = commutator_form(base, sig_i);
      bool b = commutator_form(base, tau_j);
      PauliOperator image = base;
      if (a && b) {
        image = multiply(image, multiply(sig_i, tau_j));
        image.mul_phase(2);
      } else if (a) {
        image = multiply(image, tau_j);
      } else if (b) {
        image = multiply(image, sig_i);
      }
      if (l == PauliLetter::Z) {
        f.set_row(q, image, f.eff_x(q));
      } else {
        f.set_row(q, f.eff_z(q), image);
      }
    }
  }
  return f;
}

PauliFrame rotation_frame(const PauliOperator &p, int quarter_turns) {
  if (!p.is_hermitian()) {
    throw std::invalid_argument("rotation_frame: operator must be Hermitian");
  }
  size_t n = p.num_qubits();
  int m = ((quarter_turns % 4) + 4) % 4;
  PauliFrame f(n);
  if (m == 0) {
    return f;
  }
  for (size_t q = 0; q < n; q++) {
    PauliOperator z_img = f.eff_z(q);
    PauliOperator x_img = f.eff_x(q);
    for (PauliOperator *img : {&z_img, &x_img}) {
      if (!commutator_form(*img, p)) {
        continue;
      }
      if (m == 2) {
        img->mul_phase(2);
      } else {
        // exp(-i pi/4 p) sigma exp(+i pi/4 p) = -i p sigma; three turns flip it.
        PauliOperator r = multiply(p, *img);
        r.mul_phase(m == 1 ? 3 : 1);
        *img = r;
      }
    }
    f.set_row(q, std::move(z_img), std::move(x_img));
  }
  return f;
}

PauliFrame decouple(const PauliFrame &f, const PauliOperator &p, const PauliOperator &q) {
  size_t n = f.num_qubits();
  if (!p.is_hermitian() || !q.is_hermitian()) {
    throw std::invalid_argument("decouple: operators must be Hermitian");
  }
  if (!commutator_form(p, q)) {
    throw std::invalid_argument("decouple: p and q must anti-commute");
  }
  PauliOperator image = forward_action(f, p);
  if (image.weight() != 1) {
    throw std::invalid_argument("decouple: p must map to a single-qubit axis");
  }
  size_t row = image.support()[0];
  PauliLetter slot = image.letter_at(row);
  // Work on the pre-image rows: the matched row holds +-p there, and the
  // kept rows all commute with p, so the products below are Hermitian and
  // order-free.
  PauliFrame h = invert(f);
  for (size_t i = 0; i < n; i++) {
    if (i == row) {
      continue;
    }
    PauliOperator z_pre = h.eff_z(i);
    PauliOperator x_pre = h.eff_x(i);
    if (commutator_form(z_pre, q)) {
      z_pre = multiply(z_pre, p);
    }
    if (commutator_form(x_pre, q)) {
      x_pre = multiply(x_pre, p);
    }
    h.set_row(i, std::move(z_pre), std::move(x_pre));
  }
  // The matched slot keeps its stored value, sign included, and q takes over
  // the partner slot. Changing the stored value would move the image of p;
  // any source axis commuting with p and q keeps its image up to factors of
  // that image.
  switch (slot) {
    case PauliLetter::Z:
      h.set_row(row, h.eff_z(row), q);
      break;
    case PauliLetter::X:
      h.set_row(row, q, h.eff_x(row));
      break;
    default: {
      // The Y slot holds +-p; z := i * y * q preserves y = -i * z * x
      // with x = q.
      PauliOperator z_pre = multiply(h.eff(row, PauliLetter::Y), q);
      z_pre.mul_phase(1);
      h.set_row(row, std::move(z_pre), q);
      break;
    }
  }
  return invert(h);
}

size_t frame_cost(const PauliFrame &f) {
  size_t total = 0;
  for (size_t i = 0; i < f.num_qubits(); i++) {
    total += f.eff_z(i).weight() + f.eff_x(i).weight();
  }
  return total - 2 * f.num_qubits();
}

PauliFrame gate_frame(const Gate &g, size_t n) {
  switch (g.kind) {
    case GateKind::TQE:
      return tqe_frame(n, g.sigma, g.tau, g.i, g.j);
    case GateKind::Clifford1Q: {
      PauliFrame f(n);
      PauliOperator z_img(n), x_img(n);
      z_img.set_letter(g.i, g.c1_z.letter_at(0));
      if (g.c1_z.sign() < 0) {
        z_img.mul_phase(2);
      }
      x_img.set_letter(g.i, g.c1_x.letter_at(0));
      if (g.c1_x.sign() < 0) {
        x_img.mul_phase(2);
      }
      f.set_row(g.i, std::move(z_img), std::move(x_img));
      return f;
    }
    case GateKind::RotSQ: {
      double turns = g.angle / (std::numbers::pi / 2);
      int m = static_cast<int>(std::lround(turns));
      if (std::abs(turns - m) > 1e-9) {
        throw std::invalid_argument("gate_frame: rotation is not a quarter-turn multiple");
      }
      return rotation_frame(PauliOperator::single(n, g.i, g.sigma), m);
    }
    default:
      throw std::invalid_argument("gate_frame: gate has no Clifford frame");
  }
}

PauliFrame circuit_frame(const Circuit &c) {
  PauliFrame f(c.n_qubits);
  for (const Gate &g : c.gates) {
    f = compose(gate_frame(g, c.n_qubits), f);
  }
  return f;
}

// Tableau reduction: conjugate all rows by gates until the frame is the
// origin; the synthesized circuit is the reversed list of gate inverses.
Circuit frame_to_circuit(const PauliFrame &f) {
  size_t n = f.num_qubits();
  if (!f.is_valid()) {
    throw std::invalid_argument("frame_to_circuit: invalid frame");
  }
  PauliFrame g = f;
  std::vector<Gate> applied;

  auto apply = [&](const Gate &gate) {
    PauliFrame gf = gate_frame(gate, n);
    for (size_t i = 0; i < n; i++) {
      g.set_row(i, forward_action(gf, g.eff_z(i)), forward_action(gf, g.eff_x(i)));
    }
    applied.push_back(gate);
  };

  auto other_letter = [](PauliLetter a) {
    // Lowest canonical letter anti-commuting with a.
    return a == PauliLetter::X ? PauliLetter::Y : PauliLetter::X;
  };

  for (size_t i = 0; i < n; i++) {
    // Rows touching already-fixed qubits are impossible; support sits at >= i.
    if (g.eff_z(i).letter_at(i) == PauliLetter::I) {
      size_t j = g.eff_z(i).support().front();
      apply(Gate::tqe(other_letter(g.eff_z(i).letter_at(j)), PauliLetter::Z, j, i));
    }
    if (g.eff_z(i).letter_at(i) != PauliLetter::Z) {
      // Swap the letter with Z via a one-qubit transposition; signs are fixed
      // in the final normalization step below.
      PauliLetter l = g.eff_z(i).letter_at(i);
      PauliLetter partner = l == PauliLetter::X ? PauliLetter::Z : PauliLetter::X;
      apply(Gate::clifford1q(i, PauliOperator::single(1, 0, l),
                             PauliOperator::single(1, 0, partner)));
    }
    for (size_t j : g.eff_z(i).support()) {
      if (j != i) {
        apply(Gate::tqe(PauliLetter::X, g.eff_z(i).letter_at(j), i, j));
      }
    }
    for (size_t j : g.eff_x(i).support()) {
      if (j != i) {
        apply(Gate::tqe(PauliLetter::Z, g.eff_x(i).letter_at(j), i, j));
      }
    }
    // Row i is now (+-Z_i, +-L_i) with L in {X, Y}; undo that one-qubit frame.
    PauliOperator z1(1), x1(1);
    z1.set_letter(0, g.eff_z(i).letter_at(i));
    if (g.eff_z(i).sign() < 0) {
      z1.mul_phase(2);
    }
    x1.set_letter(0, g.eff_x(i).letter_at(i));
    if (g.eff_x(i).sign() < 0) {
      x1.mul_phase(2);
    }
    PauliFrame h(1);
    h.set_row(0, z1, x1);
    if (!h.is_origin()) {
      PauliFrame hi = invert(h);
      apply(Gate::clifford1q(i, hi.eff_z(0), hi.eff_x(0)));
    }
  }
  if (!g.is_origin()) {
    throw std::logic_error("frame_to_circuit: reduction failed");
  }

  Circuit out(n);
  for (auto it = applied.rbegin(); it != applied.rend(); ++it) {
    if (it->kind == GateKind::TQE) {
      out.append(*it);  // self-inverse
    } else {
      PauliFrame h(1);
      h.set_row(0, it->c1_z, it->c1_x);
      PauliFrame hi = invert(h);
      out.append(Gate::clifford1q(it->i, hi.eff_z(0), hi.eff_x(0)));
    }
  }
  return out;
}

}  // namespace pauligraph
