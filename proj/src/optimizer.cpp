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

#include "optimizer.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "measurement_map.hpp"
#include "prep_reduction.hpp"
#include "stabilizer_search.hpp"

namespace pauligraph {

namespace {

std::string bits_text(const BitVec &v) {
  std::string s(v.num_bits(), '0');
  for (size_t k = 0; k < v.num_bits(); k++) {
    if (v.get(k)) {
      s[k] = '1';
    }
  }
  return s;
}

std::string frame_text(const PauliFrame &f) {
  std::string s;
  for (size_t i = 0; i < f.num_qubits(); i++) {
    s += to_string(f.eff_z(i));
    s += ',';
    s += to_string(f.eff_x(i));
    s += ';';
  }
  return s;
}

std::string node_fingerprint(const GraphNode &n) {
  std::string s(1, static_cast<char>('A' + static_cast<int>(n.kind)));
  switch (n.kind) {
    case NodeKind::Rotation: {
      char buf[40];
      std::snprintf(buf, sizeof buf, "|%.17g", n.theta);
      s += to_string(n.p);
      s += buf;
      break;
    }
    case NodeKind::Measurement:
      s += to_string(n.p);
      s += "|c";
      s += std::to_string(n.cid);
      break;
    case NodeKind::Preparation:
      s += to_string(n.p);
      s += '|';
      s += to_string(n.px);
      break;
    case NodeKind::Frame:
      s += frame_text(n.frame);
      break;
    case NodeKind::Remap:
      for (uint32_t c : n.inputs) {
        s += 'i';
        s += std::to_string(c);
      }
      for (uint32_t c : n.outputs) {
        s += 'o';
        s += std::to_string(c);
      }
      for (const BitVec &row : n.b) {
        s += '|';
        s += bits_text(row);
      }
      s += '|';
      s += bits_text(n.v);
      break;
  }
  return s;
}

// Kahn's algorithm, always emitting the ready node with the smallest
// fingerprint, so any two lists of the same graph order identically.
std::vector<size_t> canonical_order(const PauliGraph &g) {
  size_t n = g.nodes.size();
  std::vector<std::string> key(n);
  for (size_t i = 0; i < n; i++) {
    key[i] = node_fingerprint(g.nodes[i]);
  }
  std::vector<size_t> indeg(n, 0);
  std::vector<std::vector<size_t>> succ(n);
  for (size_t i = 0; i < n; i++) {
    for (size_t j = i + 1; j < n; j++) {
      if (g.edge(i, j)) {
        succ[i].push_back(j);
        indeg[j]++;
      }
    }
  }
  std::vector<size_t> order;
  order.reserve(n);
  std::vector<char> done(n, 0);
  for (size_t round = 0; round < n; round++) {
    size_t best = n;
    for (size_t i = 0; i < n; i++) {
      if (!done[i] && indeg[i] == 0 && (best == n || key[i] < key[best])) {
        best = i;
      }
    }
    done[best] = 1;
    order.push_back(best);
    for (size_t j : succ[best]) {
      indeg[j]--;
    }
  }
  return order;
}

bool outdeg_zero(const PauliGraph &g, size_t i) {
  for (size_t j = i + 1; j < g.nodes.size(); j++) {
    if (g.edge(i, j)) {
      return false;
    }
  }
  return true;
}

// Echelon basis over the 2n-bit symplectic coordinates, phase dropped.
struct Echelon {
  size_t n = 0;
  std::vector<PauliVector> rows;
  std::vector<size_t> piv;

  bool bit(const PauliVector &v, size_t k) const {
    return k < n ? v.x.get(k) : v.z.get(k - n);
  }

  // True iff v was independent of the rows seen so far.
  bool insert(PauliVector v) {
    for (size_t r = 0; r < rows.size(); r++) {
      if (bit(v, piv[r])) {
        for (size_t q = 0; q < n; q++) {
          v.x.set(q, v.x.get(q) ^ rows[r].x.get(q));
          v.z.set(q, v.z.get(q) ^ rows[r].z.get(q));
        }
      }
    }
    for (size_t k = 0; k < 2 * n; k++) {
      if (bit(v, k)) {
        rows.push_back(std::move(v));
        piv.push_back(k);
        return true;
      }
    }
    return false;
  }
};

bool same_prep_set(const PrepSet &a, const PrepSet &b) {
  if (a.size() != b.size()) {
    return false;
  }
  for (size_t i = 0; i < a.size(); i++) {
    if (!(a[i].p == b[i].p) || !(a[i].q == b[i].q)) {
      return false;
    }
  }
  return true;
}

void erase_indices(std::vector<GraphNode> &nodes, std::vector<size_t> idx) {
  std::sort(idx.begin(), idx.end());
  for (size_t k = idx.size(); k-- > 0;) {
    nodes.erase(nodes.begin() + static_cast<ptrdiff_t>(idx[k]));
  }
}

// Leaf preparations with independent stabilizers; `extra_leaf` widens the
// leaf test to successors inside an about-to-be-removed block.
std::pair<std::vector<size_t>, PrepSet> leaf_preps(
    const PauliGraph &g, const std::vector<char> *extra_leaf) {
  Echelon ech;
  ech.n = g.n_qubits;
  std::vector<size_t> used;
  PrepSet pi;
  for (size_t i = 0; i < g.nodes.size(); i++) {
    if (g.nodes[i].kind != NodeKind::Preparation) {
      continue;
    }
    bool leaf = true;
    for (size_t j = i + 1; j < g.nodes.size() && leaf; j++) {
      if (g.edge(i, j)) {
        leaf = extra_leaf != nullptr && (*extra_leaf)[j];
      }
    }
    if (leaf && ech.insert(lift(g.nodes[i].p))) {
      used.push_back(i);
      pi.push_back({g.nodes[i].p, g.nodes[i].px});
    }
  }
  return {std::move(used), std::move(pi)};
}

// Leaf preparations commute with every node behind them, so the reduced
// replacements can be respliced at the end of the list.
void reduce_terminal_preps(PauliGraph &g) {
  auto [used, pi] = leaf_preps(g, nullptr);
  if (pi.empty()) {
    return;
  }
  auto [pi2, f2] = reduce_frame_by_prep(pi, g.frame);
  if (same_prep_set(pi2, pi) && f2 == g.frame) {
    return;
  }
  erase_indices(g.nodes, used);
  for (const PrepPair &pr : pi2) {
    g.nodes.push_back(GraphNode::preparation(pr.p, pr.q));
  }
  g.frame = std::move(f2);
}

// Drops everything invisible to the recorded outcome ids, then replaces the
// leaf measurement block [Prep(pi); M_S] by searched single-qubit
// measurements under a reduced frame plus a classical remap onto the
// original ids. The replaced block commutes with every node outside it that
// sits behind its members, so appending the replacement at the end is a
// valid order.
void release_terminal_measurements(PauliGraph &g) {
  size_t nn = g.nodes.size();
  std::vector<char> keep(nn, 0);
  for (size_t j = nn; j-- > 0;) {
    if (g.nodes[j].kind == NodeKind::Measurement ||
        g.nodes[j].kind == NodeKind::Remap) {
      keep[j] = 1;
      continue;
    }
    for (size_t k = j + 1; k < nn && !keep[j]; k++) {
      if (keep[k] && g.edge(j, k)) {
        keep[j] = 1;
      }
    }
  }
  std::vector<GraphNode> kept;
  for (size_t j = 0; j < nn; j++) {
    if (keep[j]) {
      kept.push_back(std::move(g.nodes[j]));
    }
  }
  g.nodes = std::move(kept);
  g.frame = PauliFrame::origin(g.n_qubits);

  // Identity words stay: they record constants the search cannot carry.
  std::vector<size_t> me;
  std::vector<char> in_me(g.nodes.size(), 0);
  for (size_t i = 0; i < g.nodes.size(); i++) {
    if (g.nodes[i].kind == NodeKind::Measurement &&
        !g.nodes[i].p.is_identity_word() && outdeg_zero(g, i)) {
      me.push_back(i);
      in_me[i] = 1;
    }
  }
  if (me.empty()) {
    return;
  }
  auto [used, pi] = leaf_preps(g, &in_me);
  if (pi.empty()) {
    return;
  }

  std::vector<PauliOperator> s;
  std::vector<uint32_t> cids;
  for (size_t i : me) {
    s.push_back(g.nodes[i].p);
    cids.push_back(g.nodes[i].cid);
  }
  SearchOptions opt;
  opt.mode = SearchMode::Exact;
  SearchResult sr = find_stabilizers(s, g.n_qubits, opt);
  auto [pi2, f2] = reduce_frame_by_prep(pi, invert(sr.frame));
  MeasurementRemap mm = map_measurements(s, sr.circuit, sr.frame, cids);

  // One fresh outcome id per searched measurement, indexed like mm.sources.
  std::vector<uint32_t> new_ids(mm.sources.size());
  for (size_t t = 0; t < new_ids.size(); t++) {
    new_ids[t] = g.fresh_cid();
  }
  std::vector<GraphNode> axes;
  for (const Gate *mg : sr.circuit.measurements()) {
    size_t t = mm.sources.size();
    for (size_t k = 0; k < mm.sources.size(); k++) {
      if (mm.sources[k] == mg->cid) {
        t = k;
        break;
      }
    }
    if (t == mm.sources.size()) {
      throw std::logic_error("optimize_graph: searched measurement id not mapped");
    }
    PauliOperator ax = PauliOperator::single(g.n_qubits, mg->i, mg->sigma,
                                             mg->neg ? -1 : +1);
    axes.push_back(push_frame(f2, GraphNode::measurement(ax, new_ids[t])));
  }

  std::vector<size_t> removed = used;
  removed.insert(removed.end(), me.begin(), me.end());
  erase_indices(g.nodes, std::move(removed));
  for (const PrepPair &pr : pi2) {
    g.nodes.push_back(GraphNode::preparation(pr.p, pr.q));
  }
  for (GraphNode &ax : axes) {
    g.nodes.push_back(std::move(ax));
  }
  g.nodes.push_back(
      GraphNode::remap(std::move(new_ids), std::move(cids), std::move(mm.b),
                       std::move(mm.v)));
}

}  // namespace

bool graph_equivalent(const PauliGraph &a, const PauliGraph &b) {
  if (a.n_qubits != b.n_qubits || a.nodes.size() != b.nodes.size()) {
    return false;
  }
  if (!(a.frame == b.frame) || a.aliases.size() != b.aliases.size()) {
    return false;
  }
  auto it = b.aliases.begin();
  for (const auto &[cid, al] : a.aliases) {
    if (cid != it->first || al.root != it->second.root ||
        al.complement != it->second.complement) {
      return false;
    }
    ++it;
  }
  std::vector<size_t> oa = canonical_order(a);
  std::vector<size_t> ob = canonical_order(b);
  for (size_t k = 0; k < oa.size(); k++) {
    if (!(a.nodes[oa[k]] == b.nodes[ob[k]])) {
      return false;
    }
  }
  return true;
}

PauliGraph fixpoint_reduce(PauliGraph g) {
  size_t cap = 10 * g.nodes.size() + 10;
  for (size_t pass = 0; pass < cap; pass++) {
    PauliGraph next = reduce_nodes_by_prep(g);
    if (graph_equivalent(next, g)) {
      return next;
    }
    g = std::move(next);
  }
  throw std::logic_error("fixpoint_reduce: node rewrites failed to settle");
}

PauliGraph optimize_graph(PauliGraph g, OptimizeMode mode) {
  {
    PauliGraph renorm = normalize(g);
    if (!graph_equivalent(renorm, g)) {
      throw std::invalid_argument("optimize_graph: input graph must be normalized");
    }
  }
  g = fixpoint_reduce(std::move(g));
  if (mode == OptimizeMode::Hold) {
    reduce_terminal_preps(g);
  } else {
    release_terminal_measurements(g);
  }
  return normalize(std::move(g));
}

}  // namespace pauligraph
