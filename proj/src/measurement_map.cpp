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

#include "measurement_map.hpp"

#include <stdexcept>

namespace pauligraph {

MeasurementRemap map_measurements(const std::vector<PauliOperator> &s,
                                  const Circuit &c, const PauliFrame &f,
                                  std::vector<uint32_t> targets) {
  size_t n = c.n_qubits;
  if (targets.empty()) {
    targets.resize(s.size());
    for (size_t i = 0; i < s.size(); i++) {
      targets[i] = static_cast<uint32_t>(i);
    }
  }
  if (targets.size() != s.size()) {
    throw std::invalid_argument("map_measurements: one target id per element");
  }

  MeasurementRemap r;
  r.targets = std::move(targets);
  std::vector<PauliOperator> pulled;        // F(sigma_q), the measured products
  std::vector<PauliOperator> pulled_tilde;  // F(least anticommuting partner)
  for (const Gate *g : c.measurements()) {
    r.sources.push_back(g->cid);
    PauliOperator sq =
        PauliOperator::single(n, g->i, g->sigma, g->neg ? -1 : +1);
    pulled.push_back(forward_action(f, sq));
    PauliLetter tilde =
        g->sigma == PauliLetter::X ? PauliLetter::Z : PauliLetter::X;
    pulled_tilde.push_back(
        forward_action(f, PauliOperator::single(n, g->i, tilde)));
  }

  size_t k = pulled.size();
  r.v = BitVec(s.size());
  for (size_t i = 0; i < s.size(); i++) {
    if (s[i].num_qubits() != n) {
      throw std::invalid_argument("map_measurements: qubit count mismatch");
    }
    BitVec row(k);
    PauliOperator prod = PauliOperator::identity(n);
    for (size_t q = 0; q < k; q++) {
      // The expansion coefficient of sigma_q in the pulled-back element.
      if (commutator_form(s[i], pulled_tilde[q])) {
        prod = multiply(prod, pulled[q]);
        row.set(q, true);
      }
    }
    if (lift(prod) != lift(s[i])) {
      throw std::runtime_error("map_measurements: " + to_string(s[i]) +
                               " is outside the measured span");
    }
    r.v.set(i, prod != s[i]);
    r.b.push_back(std::move(row));
  }
  return r;
}

BitVec apply_remap(const MeasurementRemap &r, const BitVec &outcomes) {
  if (outcomes.num_bits() != r.sources.size()) {
    throw std::invalid_argument("apply_remap: outcome length mismatch");
  }
  BitVec out(r.b.size());
  for (size_t i = 0; i < r.b.size(); i++) {
    out.set(i, r.v.get(i) ^ BitVec::and_parity(r.b[i], outcomes));
  }
  return out;
}

}  // namespace pauligraph
