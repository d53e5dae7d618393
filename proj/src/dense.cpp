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

#include "dense.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace pauligraph {

Matrix kron(const Matrix &a, const Matrix &b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); i++) {
    for (Eigen::Index j = 0; j < a.cols(); j++) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix letter_matrix(PauliLetter l) {
  Matrix m(2, 2);
  using namespace std::complex_literals;
  switch (l) {
    case PauliLetter::I:
      m << 1, 0, 0, 1;
      break;
    case PauliLetter::X:
      m << 0, 1, 1, 0;
      break;
    case PauliLetter::Y:
      m << 0, -1i, 1i, 0;
      break;
    case PauliLetter::Z:
      m << 1, 0, 0, -1;
      break;
  }
  return m;
}

Matrix pauli_matrix(const PauliOperator &p) {
  check_dense_size(p.num_qubits());
  Matrix x_mat = letter_matrix(PauliLetter::X);
  Matrix z_mat = letter_matrix(PauliLetter::Z);
  Matrix out = Matrix::Identity(1, 1);
  for (size_t q = 0; q < p.num_qubits(); q++) {
    Matrix f = Matrix::Identity(2, 2);
    if (p.x_bits().get(q)) {
      f = f * x_mat;
    }
    if (p.z_bits().get(q)) {
      f = f * z_mat;
    }
    out = kron(out, f);
  }
  std::complex<double> ph(1, 0);
  for (int k = 0; k < (p.phase() & 3); k++) {
    ph *= std::complex<double>(0, 1);
  }
  return ph * out;
}

void check_dense_size(size_t n) {
  if (n == 0 || n > kMaxDenseQubits) {
    throw std::invalid_argument("dense semantics limited to 1.." +
                                std::to_string(kMaxDenseQubits) + " qubits, got " +
                                std::to_string(n));
  }
}

namespace {

Matrix strip_phase(const Matrix &u) {
  for (Eigen::Index i = 0; i < u.rows(); i++) {
    for (Eigen::Index j = 0; j < u.cols(); j++) {
      if (std::abs(u(i, j)) > 1e-9) {
        return u * (std::abs(u(i, j)) / u(i, j));
      }
    }
  }
  return u;
}

bool close(const Matrix &a, const Matrix &b) {
  return (a - b).cwiseAbs().maxCoeff() < 1e-9;
}

// The 24 one-qubit Cliffords up to global phase, generated from H and S.
const std::vector<Matrix> &one_qubit_cliffords() {
  static const std::vector<Matrix> group = [] {
    using namespace std::complex_literals;
    Matrix h(2, 2), s(2, 2);
    h << 1, 1, 1, -1;
    h /= std::sqrt(2.0);
    s << 1, 0, 0, 1i;
    std::vector<Matrix> elems{strip_phase(Matrix::Identity(2, 2))};
    for (size_t k = 0; k < elems.size(); k++) {
      for (const Matrix *gen : {&h, &s}) {
        Matrix cand = strip_phase(*gen * elems[k]);
        bool seen = false;
        for (const Matrix &e : elems) {
          if (close(e, cand)) {
            seen = true;
            break;
          }
        }
        if (!seen) {
          elems.push_back(cand);
        }
      }
    }
    return elems;
  }();
  return group;
}

}  // namespace

Matrix clifford1q_unitary(const PauliOperator &z_image, const PauliOperator &x_image) {
  Matrix z_target = pauli_matrix(z_image);
  Matrix x_target = pauli_matrix(x_image);
  Matrix z_mat = letter_matrix(PauliLetter::Z);
  Matrix x_mat = letter_matrix(PauliLetter::X);
  for (const Matrix &u : one_qubit_cliffords()) {
    if (close(u * z_mat * u.adjoint(), z_target) && close(u * x_mat * u.adjoint(), x_target)) {
      return u;
    }
  }
  throw std::invalid_argument("clifford1q_unitary: no Clifford realizes the images");
}

static Matrix embed_one_qubit(const Matrix &u, size_t q, size_t n) {
  Matrix out = Matrix::Identity(1, 1);
  for (size_t k = 0; k < n; k++) {
    out = kron(out, k == q ? u : Matrix::Identity(2, 2));
  }
  return out;
}

Matrix gate_unitary(const Gate &g, size_t n) {
  check_dense_size(n);
  size_t dim = size_t{1} << n;
  switch (g.kind) {
    case GateKind::TQE: {
      Matrix si = pauli_matrix(PauliOperator::single(n, g.i, g.sigma));
      Matrix tj = pauli_matrix(PauliOperator::single(n, g.j, g.tau));
      return (Matrix::Identity(dim, dim) + si + tj - si * tj) / 2.0;
    }
    case GateKind::Clifford1Q:
      return embed_one_qubit(clifford1q_unitary(g.c1_z, g.c1_x), g.i, n);
    case GateKind::RotSQ: {
      Matrix p = pauli_matrix(PauliOperator::single(n, g.i, g.sigma));
      std::complex<double> im(0, 1);
      return std::cos(g.angle / 2) * Matrix::Identity(dim, dim) -
             im * std::sin(g.angle / 2) * p;
    }
    default:
      throw std::invalid_argument("gate_unitary: gate is not unitary");
  }
}

Matrix circuit_unitary(const Circuit &c) {
  check_dense_size(c.n_qubits);
  size_t dim = size_t{1} << c.n_qubits;
  Matrix u = Matrix::Identity(dim, dim);
  for (const Gate &g : c.gates) {
    u = gate_unitary(g, c.n_qubits) * u;
  }
  return u;
}

}  // namespace pauligraph
