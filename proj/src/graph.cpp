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

#include "graph.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace pauligraph {

GraphNode GraphNode::rotation(PauliOperator p, double theta) {
  if (!p.is_hermitian()) {
    throw std::invalid_argument("rotation: operator must be Hermitian");
  }
  if (p.is_identity_word()) {
    throw std::invalid_argument("rotation: identity axis is a global phase");
  }
  GraphNode n;
  n.kind = NodeKind::Rotation;
  n.p = std::move(p);
  n.theta = theta;
  return n;
}

GraphNode GraphNode::measurement(PauliOperator p, uint32_t cid) {
  if (!p.is_hermitian()) {
    throw std::invalid_argument("measurement: operator must be Hermitian");
  }
  GraphNode n;
  n.kind = NodeKind::Measurement;
  n.p = std::move(p);
  n.cid = cid;
  return n;
}

GraphNode GraphNode::preparation(PauliOperator pz, PauliOperator px) {
  if (pz.num_qubits() != px.num_qubits()) {
    throw std::invalid_argument("preparation: size mismatch");
  }
  if (!pz.is_hermitian() || !px.is_hermitian() || !commutator_form(pz, px)) {
    throw std::invalid_argument(
        "preparation: needs an anticommuting Hermitian pair");
  }
  GraphNode n;
  n.kind = NodeKind::Preparation;
  n.p = std::move(pz);
  n.px = std::move(px);
  return n;
}

GraphNode GraphNode::frame_node(PauliFrame f) {
  GraphNode n;
  n.kind = NodeKind::Frame;
  n.frame = std::move(f);
  return n;
}

GraphNode GraphNode::remap(std::vector<uint32_t> inputs, std::vector<uint32_t> outputs,
                           std::vector<BitVec> b, BitVec v) {
  if (b.size() != outputs.size() || v.num_bits() != outputs.size()) {
    throw std::invalid_argument("remap: row count must match outputs");
  }
  for (const BitVec &row : b) {
    if (row.num_bits() != inputs.size()) {
      throw std::invalid_argument("remap: row width must match inputs");
    }
  }
  GraphNode n;
  n.kind = NodeKind::Remap;
  n.inputs = std::move(inputs);
  n.outputs = std::move(outputs);
  n.b = std::move(b);
  n.v = std::move(v);
  return n;
}

bool GraphNode::operator==(const GraphNode &o) const {
  return kind == o.kind && p == o.p && px == o.px && theta == o.theta &&
         cid == o.cid && frame == o.frame && inputs == o.inputs &&
         outputs == o.outputs && b == o.b && v == o.v;
}

bool commutes_pauli_node(const PauliOperator &q, const GraphNode &n) {
  switch (n.kind) {
    case NodeKind::Rotation:
    case NodeKind::Measurement:
      return !commutator_form(q, n.p);
    case NodeKind::Preparation:
      return !commutator_form(q, n.p) && !commutator_form(q, n.px);
    case NodeKind::Frame:
      return forward_action(n.frame, q) == q;
    case NodeKind::Remap:
      return true;
  }
  return true;
}

namespace {

std::vector<uint32_t> ids_written(const GraphNode &n) {
  if (n.kind == NodeKind::Measurement) {
    return {n.cid};
  }
  if (n.kind == NodeKind::Remap) {
    return n.outputs;
  }
  return {};
}

std::vector<uint32_t> ids_read(const GraphNode &n) {
  if (n.kind == NodeKind::Remap) {
    return n.inputs;
  }
  return {};
}

bool intersects(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
  for (uint32_t x : a) {
    if (std::find(b.begin(), b.end(), x) != b.end()) {
      return true;
    }
  }
  return false;
}

std::vector<const PauliOperator *> constituents(const GraphNode &n) {
  switch (n.kind) {
    case NodeKind::Rotation:
    case NodeKind::Measurement:
      return {&n.p};
    case NodeKind::Preparation:
      return {&n.p, &n.px};
    default:
      return {};
  }
}

bool frame_fixes(const PauliFrame &f, const GraphNode &n) {
  for (const PauliOperator *q : constituents(n)) {
    if (forward_action(f, *q) != *q) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool commutes_nodes(const GraphNode &a, const GraphNode &b) {
  if (intersects(ids_written(a), ids_read(b)) ||
      intersects(ids_read(a), ids_written(b)) ||
      intersects(ids_written(a), ids_written(b))) {
    return false;
  }
  if (a.kind == NodeKind::Remap || b.kind == NodeKind::Remap) {
    return true;
  }
  if (a.kind == NodeKind::Frame && b.kind == NodeKind::Frame) {
    return compose(a.frame, b.frame) == compose(b.frame, a.frame);
  }
  if (a.kind == NodeKind::Frame) {
    return frame_fixes(a.frame, b);
  }
  if (b.kind == NodeKind::Frame) {
    return frame_fixes(b.frame, a);
  }
  for (const PauliOperator *q : constituents(a)) {
    if (!commutes_pauli_node(*q, b)) {
      return false;
    }
  }
  return true;
}

bool PauliGraph::edge(size_t i, size_t j) const {
  return i < j && !commutes_nodes(nodes[i], nodes[j]);
}

PauliGraph build_graph(size_t n_qubits, std::vector<GraphNode> nodes) {
  PauliGraph g;
  g.n_qubits = n_qubits;
  g.frame = PauliFrame::origin(n_qubits);
  uint32_t hi = 0;
  for (const GraphNode &n : nodes) {
    for (const PauliOperator *q : constituents(n)) {
      if (q->num_qubits() != n_qubits) {
        throw std::invalid_argument("build_graph: node qubit count mismatch");
      }
    }
    if (n.kind == NodeKind::Frame && n.frame.num_qubits() != n_qubits) {
      throw std::invalid_argument("build_graph: frame qubit count mismatch");
    }
    for (uint32_t c : ids_written(n)) {
      hi = std::max(hi, c + 1);
    }
    for (uint32_t c : ids_read(n)) {
      hi = std::max(hi, c + 1);
    }
  }
  g.next_cid = hi;
  g.nodes = std::move(nodes);
  return g;
}

std::vector<std::pair<size_t, size_t>> graph_edges(const PauliGraph &g) {
  std::vector<std::pair<size_t, size_t>> edges;
  for (size_t i = 0; i < g.nodes.size(); i++) {
    for (size_t j = i + 1; j < g.nodes.size(); j++) {
      if (g.edge(i, j)) {
        edges.emplace_back(i, j);
      }
    }
  }
  return edges;
}

GraphNode push_frame(const PauliFrame &f, const GraphNode &n) {
  GraphNode out = n;
  switch (n.kind) {
    case NodeKind::Rotation:
    case NodeKind::Measurement:
      out.p = backward_action(f, n.p);
      break;
    case NodeKind::Preparation:
      out.p = backward_action(f, n.p);
      out.px = backward_action(f, n.px);
      break;
    case NodeKind::Frame:
      out.frame = compose(invert(f), compose(n.frame, f));
      break;
    case NodeKind::Remap:
      break;
  }
  return out;
}

std::optional<int> quarter_turns(double theta) {
  long m = std::lround(theta / (std::numbers::pi / 2));
  if (std::abs(theta - static_cast<double>(m) * (std::numbers::pi / 2)) <= 1e-9) {
    return static_cast<int>(m);
  }
  return std::nullopt;
}

namespace {

bool same_word(const PauliOperator &a, const PauliOperator &b) {
  return a.num_qubits() == b.num_qubits() && lift(a) == lift(b);
}

}  // namespace

MergeResult merge_nodes(const GraphNode &n1, const GraphNode &n2) {
  MergeResult res;
  auto hit = [&res](std::vector<GraphNode> repl) {
    res.merged = true;
    res.replacement = std::move(repl);
  };

  if (n1.kind == NodeKind::Rotation && n2.kind == NodeKind::Rotation &&
      same_word(n1.p, n2.p)) {
    double theta = n1.theta + (n1.p == n2.p ? n2.theta : -n2.theta);
    if (auto m = quarter_turns(theta)) {
      hit({GraphNode::frame_node(rotation_frame(n1.p, *m))});
    } else {
      hit({GraphNode::rotation(n1.p, theta)});
    }
    return res;
  }
  if (n1.kind == NodeKind::Rotation && n2.kind == NodeKind::Preparation &&
      same_word(n1.p, n2.p)) {
    hit({n2});  // preparation discards phases along its stabilizer
    return res;
  }
  if (n1.kind == NodeKind::Rotation && n2.kind == NodeKind::Measurement &&
      same_word(n1.p, n2.p)) {
    hit({n2});  // rotation acts per-eigenspace, invisible to the outcome
    return res;
  }
  if (n1.kind == NodeKind::Preparation && n2.kind == NodeKind::Preparation &&
      same_word(n1.p, n2.p)) {
    // Sound only when the destabilizers span the same effective qubit: the
    // channels differ otherwise (the pair applies a leftover correction).
    if (same_word(n1.px, n2.px) || same_word(multiply(n1.px, n1.p), n2.px)) {
      hit({n2});  // the later preparation wins
    }
    return res;
  }
  if (n1.kind == NodeKind::Preparation && n2.kind == NodeKind::Measurement &&
      same_word(n1.p, n2.p)) {
    // Deterministic outcome: +1 when the signs agree.
    uint8_t ph = n1.p == n2.p ? 0 : 2;
    hit({n1, GraphNode::measurement(
                 PauliOperator::phase_times_identity(n1.p.num_qubits(), ph),
                 n2.cid)});
    return res;
  }
  if (n1.kind == NodeKind::Measurement && n2.kind == NodeKind::Measurement &&
      same_word(n1.p, n2.p)) {
    hit({n1});  // the repeated outcome aliases the first
    res.alias = {n2.cid, OutcomeAlias{n1.cid, n1.p != n2.p}};
    return res;
  }
  return res;
}

namespace {

// Reachability from i / to j inside the open interval (i, j); paths can only
// use interval vertices because edges always point forward in list order.
void interval_reach(const PauliGraph &g, size_t i, size_t j,
                    std::vector<char> &from_i, std::vector<char> &to_j) {
  size_t len = j - i + 1;
  from_i.assign(len, 0);
  to_j.assign(len, 0);
  from_i[0] = 1;
  for (size_t k = i + 1; k <= j; k++) {
    for (size_t m = i; m < k; m++) {
      if (from_i[m - i] && g.edge(m, k)) {
        from_i[k - i] = 1;
        break;
      }
    }
  }
  to_j[len - 1] = 1;
  for (size_t k = j; k-- > i;) {
    for (size_t m = k + 1; m <= j; m++) {
      if (to_j[m - i] && g.edge(k, m)) {
        to_j[k - i] = 1;
        break;
      }
    }
  }
}

}  // namespace

bool mergeable_position(const PauliGraph &g, size_t i, size_t j) {
  if (i >= j || j >= g.nodes.size()) {
    return false;
  }
  // A path longer than one edge exists iff some interval vertex lies on a
  // path from i to j.
  std::vector<char> from_i, to_j;
  interval_reach(g, i, j, from_i, to_j);
  for (size_t k = i + 1; k < j; k++) {
    if (from_i[k - i] && to_j[k - i]) {
      return false;
    }
  }
  return true;
}

OutcomeAlias resolve_alias(const PauliGraph &g, uint32_t cid) {
  OutcomeAlias out{cid, false};
  auto it = g.aliases.find(out.root);
  while (it != g.aliases.end()) {
    out.complement = out.complement != it->second.complement;
    out.root = it->second.root;
    it = g.aliases.find(out.root);
  }
  return out;
}

namespace {

// Folds `alias` into every remap input: the merged-away bit equals the kept
// bit xor the complement flag, so columns move ids and constants fold into v.
void rewrite_remap_inputs(PauliGraph &g, uint32_t old_cid, const OutcomeAlias &a) {
  for (GraphNode &n : g.nodes) {
    if (n.kind != NodeKind::Remap) {
      continue;
    }
    for (size_t idx = 0; idx < n.inputs.size(); idx++) {
      if (n.inputs[idx] != old_cid) {
        continue;
      }
      n.inputs[idx] = a.root;
      if (a.complement) {
        for (size_t r = 0; r < n.b.size(); r++) {
          if (n.b[r].get(idx)) {
            n.v.set(r, !n.v.get(r));
          }
        }
      }
    }
  }
}

}  // namespace

void apply_merge(PauliGraph &g, size_t i, size_t j, MergeResult res) {
  std::vector<char> from_i, to_j;
  interval_reach(g, i, j, from_i, to_j);
  std::vector<GraphNode> out;
  out.reserve(g.nodes.size());
  for (size_t k = 0; k < i; k++) {
    out.push_back(std::move(g.nodes[k]));
  }
  // Predecessors of j first, then untied vertices, the merged nodes, then
  // successors of i; only commuting pairs swap relative order.
  for (size_t k = i + 1; k < j; k++) {
    if (to_j[k - i]) {
      out.push_back(std::move(g.nodes[k]));
    }
  }
  for (size_t k = i + 1; k < j; k++) {
    if (!to_j[k - i] && !from_i[k - i]) {
      out.push_back(std::move(g.nodes[k]));
    }
  }
  for (GraphNode &n : res.replacement) {
    out.push_back(std::move(n));
  }
  for (size_t k = i + 1; k < j; k++) {
    if (from_i[k - i]) {
      out.push_back(std::move(g.nodes[k]));
    }
  }
  for (size_t k = j + 1; k < g.nodes.size(); k++) {
    out.push_back(std::move(g.nodes[k]));
  }
  g.nodes = std::move(out);
  if (res.alias) {
    g.aliases[res.alias->first] = res.alias->second;
    rewrite_remap_inputs(g, res.alias->first, res.alias->second);
  }
}

namespace {

// Interior frames and quarter-turn rotations migrate rightward into the
// terminal frame; every node they pass is pulled back through them.
void sweep_frames(PauliGraph &g) {
  std::vector<GraphNode> out;
  out.reserve(g.nodes.size());
  PauliFrame acc = PauliFrame::origin(g.n_qubits);
  bool nontrivial = false;
  for (GraphNode &n : g.nodes) {
    if (n.kind == NodeKind::Rotation) {
      if (auto m = quarter_turns(n.theta)) {
        acc = compose(rotation_frame(n.p, *m), acc);
        nontrivial = !acc.is_origin();
        continue;
      }
    }
    if (n.kind == NodeKind::Frame) {
      acc = compose(n.frame, acc);
      nontrivial = !acc.is_origin();
      continue;
    }
    out.push_back(nontrivial ? push_frame(acc, n) : std::move(n));
  }
  g.nodes = std::move(out);
  if (nontrivial) {
    g.frame = compose(g.frame, acc);
  }
}

}  // namespace

PauliGraph normalize(PauliGraph g) {
  sweep_frames(g);
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < g.nodes.size() && !changed; i++) {
      for (size_t j = i + 1; j < g.nodes.size() && !changed; j++) {
        MergeResult res = merge_nodes(g.nodes[i], g.nodes[j]);
        if (!res.merged && commutes_nodes(g.nodes[i], g.nodes[j])) {
          // Commuting pairs are order-free; try the swapped roles.
          res = merge_nodes(g.nodes[j], g.nodes[i]);
        }
        if (!res.merged || !mergeable_position(g, i, j)) {
          continue;
        }
        apply_merge(g, i, j, std::move(res));
        sweep_frames(g);
        changed = true;
      }
    }
  }
  return g;
}

}  // namespace pauligraph
