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

#ifndef PAULIGRAPH_STABILIZER_SEARCH_H
#define PAULIGRAPH_STABILIZER_SEARCH_H

#include <functional>
#include <optional>
#include <vector>

#include "circuit.hpp"
#include "frame.hpp"

namespace pauligraph {

// Greedy search that turns a mutually commuting Pauli set into single-qubit
// measurements using TQE gates. General mode may measure a superset of the
// input span; exact mode measures a set whose pull-back spans it exactly.
enum class SearchMode { General, Exact };

struct SearchOptions {
  SearchMode mode = SearchMode::General;
  // In general mode, rerun the support-agreement scan after every gate
  // instead of only once up front. Strictly more reductions; turn off to get
  // the single pre-pass behaviour.
  bool rescan_agreement = true;
  // Optional gate-cost override for select_tqe. When empty, the default cost
  // 1 + 0.1 * (elements whose masked support the gate grows) is used.
  std::function<double(const Gate &)> cost;
};

struct SearchResult {
  // TQE gates and signed single-qubit measurements in discovery order.
  Circuit circuit;
  // Frame F with backward_action(F, s) support-agreeing for every input s.
  PauliFrame frame;
};

// Letter shared by every supported element at qubit q: X/Y/Z when they agree,
// I when nothing is supported there, nullopt on a conflict.
std::optional<PauliLetter> agrees_on_support(const std::vector<PauliOperator> &s,
                                             size_t q);

// One TQE gate on two active qubits that strictly shrinks the masked support
// of a minimum-masked-support element. Requires every masked support >= 2.
// Ties resolve to the least (i, j, sigma, tau).
Gate select_tqe(const std::vector<PauliOperator> &working, const BitVec &active,
                const std::function<double(const Gate &)> &cost = {});

SearchResult find_stabilizers(const std::vector<PauliOperator> &s,
                              size_t n_qubits, const SearchOptions &opt = {});

// Worst-case TQE count for measuring a k-dimensional stabilizer space on N
// qubits: N*k - k*(k+1)/2. Requires k <= N.
size_t max_tqe_bound(size_t n_qubits, size_t k);

}  // namespace pauligraph

#endif
