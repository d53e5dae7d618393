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

#ifndef PAULIGRAPH_GRAPH_H
#define PAULIGRAPH_GRAPH_H

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "frame.hpp"
#include "pauli.hpp"

namespace pauligraph {

enum class NodeKind { Rotation, Measurement, Preparation, Frame, Remap };

// One vertex of a Pauli graph. A rotation applies exp(-i theta/2 P); a
// measurement projects onto the eigenspaces of P and records the outcome bit
// under `cid` (sign of P flips the recorded bit; P may be +/-identity, which
// writes a constant); a preparation forces the +1 eigenstate of `p` using the
// anticommuting partner `px` as the correction operator; a frame vertex is a
// Clifford unitary; a remap computes classical bits outputs[i] = v[i] xor
// (b[i] . input bits).
struct GraphNode {
  NodeKind kind = NodeKind::Rotation;
  PauliOperator p;
  PauliOperator px;  // Preparation only
  double theta = 0.0;
  uint32_t cid = 0;
  PauliFrame frame;
  std::vector<uint32_t> inputs;
  std::vector<uint32_t> outputs;
  std::vector<BitVec> b;  // one row per output, width = inputs.size()
  BitVec v;

  static GraphNode rotation(PauliOperator p, double theta);
  static GraphNode measurement(PauliOperator p, uint32_t cid);
  static GraphNode preparation(PauliOperator pz, PauliOperator px);
  static GraphNode frame_node(PauliFrame f);
  static GraphNode remap(std::vector<uint32_t> inputs, std::vector<uint32_t> outputs,
                         std::vector<BitVec> b, BitVec v);

  bool operator==(const GraphNode &o) const;
};

// Recorded when a measurement is merged away: this outcome id reads the root
// id's bit, complemented when the merged operators had opposite signs.
struct OutcomeAlias {
  uint32_t root = 0;
  bool complement = false;
};

// A DAG of graph nodes plus one terminal Clifford frame. `nodes` holds one
// topological order; the edge set is derived, not stored: (i, j) is an edge
// iff i precedes j and the nodes do not commute, so any reordering that only
// swaps commuting neighbours denotes the same graph.
struct PauliGraph {
  size_t n_qubits = 0;
  std::vector<GraphNode> nodes;
  PauliFrame frame;
  std::map<uint32_t, OutcomeAlias> aliases;
  uint32_t next_cid = 0;

  bool edge(size_t i, size_t j) const;
  uint32_t fresh_cid() { return next_cid++; }
};

bool commutes_pauli_node(const PauliOperator &q, const GraphNode &n);
bool commutes_nodes(const GraphNode &a, const GraphNode &b);

// Stores the list as the graph's topological order; terminal frame starts at
// the origin. next_cid is seeded past every id mentioned by the nodes.
PauliGraph build_graph(size_t n_qubits, std::vector<GraphNode> nodes);

// Edge list of the derived DAG, pairs (i, j) with i < j.
std::vector<std::pair<size_t, size_t>> graph_edges(const PauliGraph &g);

// n' with n'; F == F; n, i.e. the node's Paulis pulled back through F.
GraphNode push_frame(const PauliFrame &f, const GraphNode &n);

// theta == m * pi/2 within 1e-9, the m.
std::optional<int> quarter_turns(double theta);

struct MergeResult {
  bool merged = false;
  std::vector<GraphNode> replacement;
  // Second cid of a measurement-measurement merge, folded into the first.
  std::optional<std::pair<uint32_t, OutcomeAlias>> alias;
};

// Merge rule for the ordered pair n1; n2, or merged=false. Position
// constraints are the caller's duty.
MergeResult merge_nodes(const GraphNode &n1, const GraphNode &n2);

// Longest path from i to j in the derived DAG is at most one edge, so the two
// can be made adjacent in some topological order.
bool mergeable_position(const PauliGraph &g, size_t i, size_t j);

// Splices res.replacement in place of nodes i < j: interval predecessors of j
// stay in front, interval successors of i behind, and any alias is recorded
// and folded into remap inputs. Requires mergeable_position(g, i, j).
void apply_merge(PauliGraph &g, size_t i, size_t j, MergeResult res);

// Follows alias chains; identity for ids never merged away.
OutcomeAlias resolve_alias(const PauliGraph &g, uint32_t cid);

// Fixpoint of frame sweeping and pair merging: interior frame vertices and
// quarter-turn rotations are absorbed into the terminal frame, mergeable
// pairs are merged (rescanning from scratch after each hit).
PauliGraph normalize(PauliGraph g);

}  // namespace pauligraph

#endif
