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

#include "pauli.hpp"

#include <stdexcept>

namespace pauligraph {

char letter_char(PauliLetter l) {
  switch (l) {
    case PauliLetter::I:
      return 'I';
    case PauliLetter::X:
      return 'X';
    case PauliLetter::Y:
      return 'Y';
    case PauliLetter::Z:
      return 'Z';
  }
  return '?';
}

void PauliVector::add(const PauliVector &other) {
  if (other.num_qubits() != num_qubits()) {
    throw std::invalid_argument("PauliVector::add: qubit count mismatch");
  }
  x.xor_with(other.x);
  z.xor_with(other.z);
}

bool commutator_form(const PauliVector &a, const PauliVector &b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("commutator_form: qubit count mismatch");
  }
  return BitVec::and_parity(a.x, b.z) ^ BitVec::and_parity(a.z, b.x);
}

PauliOperator::PauliOperator(uint8_t phase, BitVec x, BitVec z)
    : phase_(phase & 3), x_(std::move(x)), z_(std::move(z)) {
  if (x_.num_bits() != z_.num_bits()) {
    throw std::invalid_argument("PauliOperator: x/z length mismatch");
  }
}

PauliOperator PauliOperator::phase_times_identity(size_t n, uint8_t k) {
  PauliOperator p(n);
  p.phase_ = k & 3;
  return p;
}

PauliOperator PauliOperator::single(size_t n, size_t q, PauliLetter letter, int sign) {
  if (q >= n) {
    throw std::invalid_argument("PauliOperator::single: qubit index out of range");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("PauliOperator::single: sign must be +1 or -1");
  }
  PauliOperator p(n);
  p.set_letter(q, letter);
  if (sign < 0) {
    p.mul_phase(2);
  }
  return p;
}

PauliLetter PauliOperator::letter_at(size_t q) const {
  bool xb = x_.get(q), zb = z_.get(q);
  if (xb && zb) {
    return PauliLetter::Y;
  }
  if (xb) {
    return PauliLetter::X;
  }
  if (zb) {
    return PauliLetter::Z;
  }
  return PauliLetter::I;
}

// Keeps the operator's overall sign convention: adding or removing a Y letter
// adjusts the stored i-exponent so the Hermitian sign is unchanged.
void PauliOperator::set_letter(size_t q, PauliLetter letter) {
  if (letter_at(q) == PauliLetter::Y) {
    phase_ = (phase_ + 3) & 3;
  }
  x_.set(q, letter == PauliLetter::X || letter == PauliLetter::Y);
  z_.set(q, letter == PauliLetter::Z || letter == PauliLetter::Y);
  if (letter == PauliLetter::Y) {
    phase_ = (phase_ + 1) & 3;
  }
}

std::vector<size_t> PauliOperator::support() const {
  std::vector<size_t> s;
  for (size_t q = 0; q < num_qubits(); q++) {
    if (x_.get(q) || z_.get(q)) {
      s.push_back(q);
    }
  }
  return s;
}

size_t PauliOperator::weight() const {
  size_t w = 0;
  for (size_t q = 0; q < num_qubits(); q++) {
    if (x_.get(q) || z_.get(q)) {
      w++;
    }
  }
  return w;
}

bool PauliOperator::is_hermitian() const {
  return ((phase_ + BitVec::and_popcount(x_, z_)) & 1) == 0;
}

int PauliOperator::sign() const {
  if (!is_hermitian()) {
    throw std::invalid_argument("PauliOperator::sign: operator is not Hermitian");
  }
  size_t y_count = BitVec::and_popcount(x_, z_);
  return ((phase_ - y_count) & 3) == 0 ? +1 : -1;
}

PauliOperator PauliOperator::negated() const {
  PauliOperator p = *this;
  p.mul_phase(2);
  return p;
}

bool PauliOperator::operator<(const PauliOperator &o) const {
  if (x_ != o.x_) {
    return x_ < o.x_;
  }
  if (z_ != o.z_) {
    return z_ < o.z_;
  }
  return phase_ < o.phase_;
}

PauliOperator multiply(const PauliOperator &a, const PauliOperator &b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("multiply: qubit count mismatch");
  }
  // Per qubit: (X^xa Z^za)(X^xb Z^zb) = (-1)^(za&xb) X^(xa^xb) Z^(za^zb).
  uint8_t k = (a.phase() + b.phase() + 2 * (BitVec::and_popcount(a.z_bits(), b.x_bits()) & 1)) & 3;
  BitVec x = a.x_bits();
  x.xor_with(b.x_bits());
  BitVec z = a.z_bits();
  z.xor_with(b.z_bits());
  return PauliOperator(k, std::move(x), std::move(z));
}

bool commutator_form(const PauliOperator &a, const PauliOperator &b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("commutator_form: qubit count mismatch");
  }
  return BitVec::and_parity(a.x_bits(), b.z_bits()) ^ BitVec::and_parity(a.z_bits(), b.x_bits());
}

bool commute(const PauliOperator &a, const PauliOperator &b) {
  return !commutator_form(a, b);
}

PauliOperator mask(const PauliOperator &p, const BitVec &keep) {
  if (keep.num_bits() != p.num_qubits()) {
    throw std::invalid_argument("mask: qubit count mismatch");
  }
  PauliOperator out(p.num_qubits());
  for (size_t q = 0; q < p.num_qubits(); q++) {
    if (keep.get(q)) {
      out.set_letter(q, p.letter_at(q));
    }
  }
  // set_letter accounted for the kept Ys; what remains of the stored exponent
  // is the operator's global phase factor, which the mask preserves.
  size_t total_ys = BitVec::and_popcount(p.x_bits(), p.z_bits());
  out.mul_phase(static_cast<uint8_t>((p.phase() + 4 - (total_ys & 3)) & 3));
  return out;
}

PauliOperator mask(const PauliOperator &p, const std::vector<size_t> &keep) {
  BitVec bits(p.num_qubits());
  for (size_t q : keep) {
    if (q >= p.num_qubits()) {
      throw std::invalid_argument("mask: qubit index out of range");
    }
    bits.set(q, true);
  }
  return mask(p, bits);
}

PauliVector lift(const PauliOperator &p) {
  PauliVector v(p.num_qubits());
  v.x = p.x_bits();
  v.z = p.z_bits();
  return v;
}

PauliOperator embed(const PauliVector &v, int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("embed: sign must be +1 or -1");
  }
  uint8_t k = static_cast<uint8_t>(BitVec::and_popcount(v.x, v.z) & 3);
  if (sign < 0) {
    k = (k + 2) & 3;
  }
  return PauliOperator(k, v.x, v.z);
}

std::string to_string(const PauliOperator &p) {
  std::string s;
  if (p.is_hermitian()) {
    if (p.sign() < 0) {
      s += '-';
    }
  } else {
    size_t y_count = BitVec::and_popcount(p.x_bits(), p.z_bits());
    uint8_t rel = (p.phase() - y_count) & 3;
    s += (rel == 1) ? "i*" : "-i*";
  }
  for (size_t q = 0; q < p.num_qubits(); q++) {
    s += letter_char(p.letter_at(q));
  }
  return s;
}

PauliOperator parse_pauli(const std::string &text, size_t expected_n) {
  size_t pos = 0;
  int sign = +1;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    sign = text[pos] == '-' ? -1 : +1;
    pos++;
  }
  std::string body = text.substr(pos);
  if (body.empty()) {
    throw std::invalid_argument("empty Pauli string");
  }
  if (expected_n != 0 && body.size() != expected_n) {
    throw std::invalid_argument("Pauli string has " + std::to_string(body.size()) +
                                " qubits, expected " + std::to_string(expected_n));
  }
  PauliOperator p(body.size());
  for (size_t q = 0; q < body.size(); q++) {
    switch (body[q]) {
      case 'I':
        break;
      case 'X':
        p.set_letter(q, PauliLetter::X);
        break;
      case 'Y':
        p.set_letter(q, PauliLetter::Y);
        break;
      case 'Z':
        p.set_letter(q, PauliLetter::Z);
        break;
      default:
        throw std::invalid_argument(std::string("invalid Pauli character '") + body[q] + "'");
    }
  }
  if (sign < 0) {
    p.mul_phase(2);
  }
  return p;
}

}  // namespace pauligraph
