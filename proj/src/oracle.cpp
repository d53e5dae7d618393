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

#include "oracle.hpp"

#include <cmath>
#include <stdexcept>

#include "circuit.hpp"

namespace pauligraph {

Matrix sum_matrix(const WeightedPauliSum &s, size_t n_qubits) {
  size_t dim = size_t{1} << n_qubits;
  Matrix out = Matrix::Zero(dim, dim);
  for (const auto &[w, p] : s) {
    out += w * pauli_matrix(p);
  }
  return out;
}

WeightedPauliSum node_pauli_map(const GraphNode &n, const PauliOperator &q) {
  switch (n.kind) {
    case NodeKind::Rotation: {
      if (!commutator_form(n.p, q)) {
        return {{1.0, q}};
      }
      std::complex<double> im(0, 1);
      return {{std::cos(n.theta), q},
              {-im * std::sin(n.theta), multiply(n.p, q)}};
    }
    case NodeKind::Measurement:
      if (!commutator_form(n.p, q)) {
        return {{1.0, q}};
      }
      return {};
    case NodeKind::Preparation:
      if (!commutator_form(n.p, q) && !commutator_form(n.px, q)) {
        return {{1.0, q}, {1.0, multiply(q, n.p)}};
      }
      return {};
    case NodeKind::Frame:
      return {{1.0, forward_action(n.frame, q)}};
    case NodeKind::Remap:
      return {{1.0, q}};
  }
  return {};
}

namespace {

Matrix frame_unitary(const PauliFrame &f) {
  return circuit_unitary(frame_to_circuit(f));
}

}  // namespace

Matrix node_channel(const GraphNode &n, const Matrix &rho, size_t n_qubits) {
  check_dense_size(n_qubits);
  size_t dim = size_t{1} << n_qubits;
  switch (n.kind) {
    case NodeKind::Rotation: {
      std::complex<double> im(0, 1);
      Matrix u = std::cos(n.theta / 2) * Matrix::Identity(dim, dim) -
                 im * std::sin(n.theta / 2) * pauli_matrix(n.p);
      return u * rho * u.adjoint();
    }
    case NodeKind::Measurement: {
      if (n.p.is_identity_word()) {
        return rho;
      }
      Matrix id = Matrix::Identity(dim, dim);
      Matrix pm = pauli_matrix(n.p);
      Matrix pos = (id + pm) / 2;
      Matrix neg = (id - pm) / 2;
      return pos * rho * pos + neg * rho * neg;
    }
    case NodeKind::Preparation: {
      Matrix id = Matrix::Identity(dim, dim);
      Matrix pz = pauli_matrix(n.p);
      Matrix px = pauli_matrix(n.px);
      Matrix pos = (id + pz) / 2;
      Matrix neg = (id - pz) / 2;
      return pos * rho * pos + px * neg * rho * neg * px;
    }
    case NodeKind::Frame: {
      Matrix u = frame_unitary(n.frame);
      return u * rho * u.adjoint();
    }
    case NodeKind::Remap:
      return rho;
  }
  return rho;
}

DenseChannel channel_of(const PauliGraph &g) {
  check_dense_size(g.n_qubits);
  DenseChannel ch;
  ch.n_qubits = g.n_qubits;
  // Copies keep the channel valid after the graph changes.
  std::vector<GraphNode> nodes = g.nodes;
  Matrix fu = frame_unitary(g.frame);
  size_t n = g.n_qubits;
  ch.apply = [nodes, fu, n](const Matrix &rho) {
    Matrix out = rho;
    for (const GraphNode &node : nodes) {
      out = node_channel(node, out, n);
    }
    return (fu * out * fu.adjoint()).eval();
  };
  return ch;
}

bool hold_equivalent(const PauliGraph &a, const PauliGraph &b, double tol) {
  if (a.n_qubits != b.n_qubits) {
    return false;
  }
  DenseChannel ca = channel_of(a);
  DenseChannel cb = channel_of(b);
  size_t n = a.n_qubits;
  size_t words = size_t{1} << (2 * n);
  for (size_t w = 0; w < words; w++) {
    PauliOperator basis(n);
    for (size_t q = 0; q < n; q++) {
      basis.set_letter(q, static_cast<PauliLetter>((w >> (2 * q)) & 3));
    }
    Matrix m = pauli_matrix(basis);
    if (((ca.apply(m) - cb.apply(m)).cwiseAbs().maxCoeff()) > tol) {
      return false;
    }
  }
  return true;
}

namespace {

struct Branch {
  Matrix rho;  // unnormalized; trace = joint probability of the bits
  std::map<uint32_t, int> bits;
};

constexpr size_t kMaxBranchMeasurements = 20;
constexpr double kNegligibleBranch = 1e-12;

}  // namespace

std::map<std::vector<int>, double> joint_distribution(
    const PauliGraph &g, const std::vector<uint32_t> &ids, const Matrix &rho) {
  check_dense_size(g.n_qubits);
  size_t dim = size_t{1} << g.n_qubits;
  size_t branchings = 0;
  std::vector<Branch> branches;
  branches.push_back({rho, {}});
  for (const GraphNode &n : g.nodes) {
    switch (n.kind) {
      case NodeKind::Measurement: {
        if (n.p.is_identity_word()) {
          int bit = n.p.sign() < 0 ? 1 : 0;
          for (Branch &br : branches) {
            br.bits[n.cid] = bit;
          }
          break;
        }
        if (++branchings > kMaxBranchMeasurements) {
          throw std::invalid_argument("joint_distribution: too many measurements");
        }
        Matrix id = Matrix::Identity(dim, dim);
        Matrix pm = pauli_matrix(n.p);
        Matrix pos = (id + pm) / 2;
        Matrix neg = (id - pm) / 2;
        std::vector<Branch> next;
        next.reserve(branches.size() * 2);
        for (Branch &br : branches) {
          Branch plus{pos * br.rho * pos, br.bits};
          plus.bits[n.cid] = 0;
          Branch minus{neg * br.rho * neg, std::move(br.bits)};
          minus.bits[n.cid] = 1;
          // Branch traces only shrink from here on; drop dead branches so
          // deterministic outcomes stay deterministic in the result map.
          if (plus.rho.trace().real() > kNegligibleBranch) {
            next.push_back(std::move(plus));
          }
          if (minus.rho.trace().real() > kNegligibleBranch) {
            next.push_back(std::move(minus));
          }
        }
        branches = std::move(next);
        break;
      }
      case NodeKind::Remap: {
        for (Branch &br : branches) {
          for (size_t r = 0; r < n.outputs.size(); r++) {
            int bit = n.v.get(r) ? 1 : 0;
            for (size_t c = 0; c < n.inputs.size(); c++) {
              if (!n.b[r].get(c)) {
                continue;
              }
              auto it = br.bits.find(n.inputs[c]);
              if (it == br.bits.end()) {
                throw std::invalid_argument("joint_distribution: remap reads unset id");
              }
              bit ^= it->second;
            }
            br.bits[n.outputs[r]] = bit;
          }
        }
        break;
      }
      default:
        for (Branch &br : branches) {
          br.rho = node_channel(n, br.rho, g.n_qubits);
        }
        break;
    }
  }
  std::map<std::vector<int>, double> dist;
  for (const Branch &br : branches) {
    double prob = br.rho.trace().real();
    std::vector<int> key;
    key.reserve(ids.size());
    for (uint32_t id : ids) {
      OutcomeAlias a = resolve_alias(g, id);
      auto it = br.bits.find(a.root);
      if (it == br.bits.end()) {
        throw std::invalid_argument("joint_distribution: undeclared outcome id");
      }
      key.push_back(it->second ^ (a.complement ? 1 : 0));
    }
    dist[key] += prob;
  }
  return dist;
}

bool release_equivalent(const PauliGraph &a, const PauliGraph &b,
                        const std::vector<uint32_t> &ids, const Matrix &rho,
                        double tol) {
  if (a.n_qubits != b.n_qubits) {
    return false;
  }
  auto da = joint_distribution(a, ids, rho);
  auto db = joint_distribution(b, ids, rho);
  for (const auto &[key, pa] : da) {
    auto it = db.find(key);
    double pb = it == db.end() ? 0.0 : it->second;
    if (std::abs(pa - pb) > tol) {
      return false;
    }
  }
  for (const auto &[key, pb] : db) {
    if (da.find(key) == da.end() && std::abs(pb) > tol) {
      return false;
    }
  }
  return true;
}

}  // namespace pauligraph
