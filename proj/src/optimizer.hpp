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

#ifndef PAULIGRAPH_OPTIMIZER_H
#define PAULIGRAPH_OPTIMIZER_H

#include "graph.hpp"

namespace pauligraph {

// Hold keeps the full channel, terminal frame included. Release only keeps
// the joint statistics of the recorded outcome ids: the terminal frame is
// dropped, nodes that never reach an outcome are removed, and the terminal
// measurement block may be replaced by searched single-qubit measurements
// plus a classical remap.
enum class OptimizeMode { Hold, Release };

// Structural equality up to reordering of commuting nodes: both node lists
// are brought into a canonical topological order (smallest serialized node
// first among the ready ones) and compared element-wise, together with the
// terminal frame and the alias table.
bool graph_equivalent(const PauliGraph &a, const PauliGraph &b);

// reduce_nodes_by_prep until the graph stops changing. Each changing pass
// strictly shrinks the total node weight, so the loop is bounded; exceeding
// 10 * |nodes| + 10 passes signals a rewrite cycle and throws logic_error.
PauliGraph fixpoint_reduce(PauliGraph g);

// Optimization driver over a normalized graph (throws invalid_argument
// otherwise). Runs the node rewrites to a fixpoint, then the mode-specific
// terminal step: hold reduces the terminal frame against leaf preparations;
// release additionally replaces the leaf measurement block when leaf
// preparations allow the search frame to be absorbed. Output is normalized.
PauliGraph optimize_graph(PauliGraph g, OptimizeMode mode);

}  // namespace pauligraph

#endif
