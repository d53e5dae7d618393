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

#ifndef PAULIGRAPH_PAULI_H
#define PAULIGRAPH_PAULI_H

#include <cstdint>
#include <string>
#include <vector>

#include "bitvec.hpp"

namespace pauligraph {

// Single-qubit Pauli letters. Canonical order for deterministic choices is
// X < Y < Z (enum value order).
enum class PauliLetter : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char letter_char(PauliLetter l);

// Phaseless n-qubit Pauli: an element of the 2n-dimensional GF(2) symplectic
// space. Addition is XOR on both halves.
struct PauliVector {
  BitVec x;
  BitVec z;

  PauliVector() = default;
  explicit PauliVector(size_t n) : x(n), z(n) {}

  size_t num_qubits() const { return x.num_bits(); }
  bool is_zero() const { return !x.any() && !z.any(); }
  void add(const PauliVector &other);

  bool operator==(const PauliVector &o) const { return x == o.x && z == o.z; }
  bool operator!=(const PauliVector &o) const { return !(*this == o); }
};

// Symplectic form: 0 when the operators commute, 1 when they anti-commute.
// Bilinear, alternating, non-degenerate.
bool commutator_form(const PauliVector &a, const PauliVector &b);

// n-qubit Pauli group element: i^phase * X^x Z^z per qubit, phase mod 4.
// The Hermitian letter Y on one qubit is stored as x=1, z=1, phase += 1.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(size_t n) : phase_(0), x_(n), z_(n) {}
  PauliOperator(uint8_t phase, BitVec x, BitVec z);

  static PauliOperator identity(size_t n) { return PauliOperator(n); }
  // i^k times the identity word.
  static PauliOperator phase_times_identity(size_t n, uint8_t k);
  // sign * letter on qubit q, identity elsewhere. sign is +1 or -1.
  static PauliOperator single(size_t n, size_t q, PauliLetter letter, int sign = +1);

  size_t num_qubits() const { return x_.num_bits(); }
  uint8_t phase() const { return phase_; }
  const BitVec &x_bits() const { return x_; }
  const BitVec &z_bits() const { return z_; }

  PauliLetter letter_at(size_t q) const;
  void set_letter(size_t q, PauliLetter letter);

  // Qubits with a non-identity letter.
  std::vector<size_t> support() const;
  size_t weight() const;
  bool is_identity_word() const { return !x_.any() && !z_.any(); }

  bool is_hermitian() const;
  // +1 or -1; requires is_hermitian().
  int sign() const;

  void mul_phase(uint8_t k) { phase_ = (phase_ + k) & 3; }
  PauliOperator negated() const;

  bool operator==(const PauliOperator &o) const {
    return phase_ == o.phase_ && x_ == o.x_ && z_ == o.z_;
  }
  bool operator!=(const PauliOperator &o) const { return !(*this == o); }

  // Deterministic total order used only for tie-breaking.
  bool operator<(const PauliOperator &o) const;

 private:
  uint8_t phase_ = 0;  // exponent of i, mod 4
  BitVec x_;
  BitVec z_;
};

// Exact group product, phase tracked mod 4.
PauliOperator multiply(const PauliOperator &a, const PauliOperator &b);

bool commutator_form(const PauliOperator &a, const PauliOperator &b);
bool commute(const PauliOperator &a, const PauliOperator &b);

// Keeps the global phase and the letters on `keep`; identity elsewhere.
PauliOperator mask(const PauliOperator &p, const std::vector<size_t> &keep);
PauliOperator mask(const PauliOperator &p, const BitVec &keep);

// Drop the phase.
PauliVector lift(const PauliOperator &p);
// Canonically positive Hermitian representative of v, times sign (+1/-1).
PauliOperator embed(const PauliVector &v, int sign = +1);

// Text form: optional leading + or -, then one of IXYZ per qubit, qubit 0
// leftmost. Non-Hermitian phases render as "i*" / "-i*" (never parsed back
// from set or term files).
std::string to_string(const PauliOperator &p);
// Throws std::invalid_argument on malformed text or (when expected_n != 0)
// qubit-count mismatch.
PauliOperator parse_pauli(const std::string &text, size_t expected_n = 0);

// One term of a weighted Pauli sum.
struct WeightedTerm {
  double coefficient = 0.0;
  PauliOperator op;
};

}  // namespace pauligraph

#endif
