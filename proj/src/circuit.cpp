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

#include "circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace pauligraph {

static void require_letter(PauliLetter l, const char *what) {
  if (l == PauliLetter::I) {
    throw std::invalid_argument(std::string(what) + ": identity letter not allowed");
  }
}

Gate Gate::tqe(PauliLetter sigma, PauliLetter tau, size_t i, size_t j) {
  require_letter(sigma, "tqe");
  require_letter(tau, "tqe");
  if (i == j) {
    throw std::invalid_argument("tqe: qubits must differ");
  }
  Gate g;
  g.kind = GateKind::TQE;
  g.sigma = sigma;
  g.tau = tau;
  g.i = i;
  g.j = j;
  return g;
}

Gate Gate::clifford1q(size_t q, PauliOperator z_image, PauliOperator x_image) {
  if (z_image.num_qubits() != 1 || x_image.num_qubits() != 1) {
    throw std::invalid_argument("clifford1q: images must be single-qubit operators");
  }
  if (!z_image.is_hermitian() || !x_image.is_hermitian() ||
      !commutator_form(z_image, x_image) || z_image.is_identity_word() ||
      x_image.is_identity_word()) {
    throw std::invalid_argument("clifford1q: images do not form a valid one-qubit frame");
  }
  Gate g;
  g.kind = GateKind::Clifford1Q;
  g.i = q;
  g.c1_z = std::move(z_image);
  g.c1_x = std::move(x_image);
  return g;
}

Gate Gate::measure(PauliLetter sigma, size_t q, uint32_t cid, bool neg) {
  require_letter(sigma, "measure");
  Gate g;
  g.kind = GateKind::MeasSQ;
  g.sigma = sigma;
  g.i = q;
  g.cid = cid;
  g.neg = neg;
  return g;
}

Gate Gate::prepare(PauliLetter sigma, size_t q) {
  require_letter(sigma, "prepare");
  Gate g;
  g.kind = GateKind::PrepSQ;
  g.sigma = sigma;
  g.i = q;
  return g;
}

Gate Gate::rotate(PauliLetter sigma, size_t q, double angle) {
  require_letter(sigma, "rotate");
  Gate g;
  g.kind = GateKind::RotSQ;
  g.sigma = sigma;
  g.i = q;
  g.angle = angle;
  return g;
}

bool Gate::operator==(const Gate &o) const {
  return kind == o.kind && sigma == o.sigma && tau == o.tau && i == o.i && j == o.j &&
         c1_z == o.c1_z && c1_x == o.c1_x && cid == o.cid && neg == o.neg &&
         angle == o.angle;
}

void Circuit::append(const Gate &g) {
  size_t hi = g.kind == GateKind::TQE ? std::max(g.i, g.j) : g.i;
  if (hi >= n_qubits) {
    throw std::invalid_argument("circuit: gate qubit out of range");
  }
  if (g.kind == GateKind::MeasSQ && g.cid >= next_cid) {
    next_cid = g.cid + 1;
  }
  gates.push_back(g);
}

uint32_t Circuit::append_measurement(PauliLetter sigma, size_t q, bool neg) {
  uint32_t cid = next_cid;
  append(Gate::measure(sigma, q, cid, neg));
  return cid;
}

std::vector<const Gate *> Circuit::measurements() const {
  std::vector<const Gate *> out;
  for (const Gate &g : gates) {
    if (g.kind == GateKind::MeasSQ) {
      out.push_back(&g);
    }
  }
  return out;
}

Circuit strip_measurements(const Circuit &c) {
  Circuit out(c.n_qubits);
  for (const Gate &g : c.gates) {
    if (g.kind != GateKind::MeasSQ) {
      out.append(g);
    }
  }
  return out;
}

std::vector<PauliOperator> measured_set(const Circuit &c) {
  std::vector<PauliOperator> out;
  for (const Gate &g : c.gates) {
    if (g.kind == GateKind::MeasSQ) {
      out.push_back(PauliOperator::single(c.n_qubits, g.i, g.sigma, g.neg ? -1 : +1));
    }
  }
  return out;
}

CircuitStats circuit_stats(const Circuit &c) {
  CircuitStats s;
  std::vector<size_t> layer(c.n_qubits, 0);
  for (const Gate &g : c.gates) {
    s.total_gates++;
    size_t d;
    if (g.kind == GateKind::TQE) {
      s.two_qubit_gates++;
      d = std::max(layer[g.i], layer[g.j]) + 1;
      layer[g.i] = layer[g.j] = d;
    } else {
      if (g.kind == GateKind::MeasSQ) {
        s.n_measurements++;
      }
      d = layer[g.i] + 1;
      layer[g.i] = d;
    }
    s.depth = std::max(s.depth, d);
  }
  return s;
}

std::optional<double> r2q_ratio(double n_qubits, double k, double two_qubit_gates) {
  if (two_qubit_gates <= 0.0) {
    return std::nullopt;
  }
  return (n_qubits * k - k * (k + 1) / 2.0) / two_qubit_gates;
}

std::string circuit_text(const Circuit &c) {
  std::ostringstream out;
  for (const Gate &g : c.gates) {
    switch (g.kind) {
      case GateKind::TQE:
        out << "TQE " << letter_char(g.sigma) << g.i << " " << letter_char(g.tau) << g.j;
        break;
      case GateKind::Clifford1Q:
        out << "C1Q " << g.i << " Z->" << to_string(g.c1_z) << " X->" << to_string(g.c1_x);
        break;
      case GateKind::MeasSQ:
        out << "MEAS" << (g.neg ? "-" : "") << letter_char(g.sigma) << " " << g.i
            << " -> c" << g.cid;
        break;
      case GateKind::PrepSQ:
        out << "PREP" << letter_char(g.sigma) << " " << g.i;
        break;
      case GateKind::RotSQ:
        out << "ROT" << letter_char(g.sigma) << " " << g.i << " " << g.angle;
        break;
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace pauligraph
