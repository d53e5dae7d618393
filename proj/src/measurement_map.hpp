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

#ifndef PAULIGRAPH_MEASUREMENT_MAP_H
#define PAULIGRAPH_MEASUREMENT_MAP_H

#include <cstdint>
#include <vector>

#include "circuit.hpp"
#include "frame.hpp"

namespace pauligraph {

// Classical reconstruction of a measured Pauli set from searched outcomes:
// target_i = v_i XOR parity(b_i AND sources). Row i certifies the exact
// operator identity s_i = (-1)^{v_i} * prod_q pulled_q^{b_iq}.
struct MeasurementRemap {
  std::vector<BitVec> b;  // one row per target, width = |sources|
  BitVec v;
  std::vector<uint32_t> sources;  // classical ids of the searched measurements
  std::vector<uint32_t> targets;  // classical ids of the original set
};

// Expand each element of s as a signed product of the searched measurements
// pulled through f (the frame returned beside c). Throws when an element is
// outside the measured span, naming it.
// targets defaults to 0..|s|-1 when empty.
MeasurementRemap map_measurements(const std::vector<PauliOperator> &s,
                                  const Circuit &c, const PauliFrame &f,
                                  std::vector<uint32_t> targets = {});

// v + b * outcomes over GF(2); outcomes indexed like sources.
BitVec apply_remap(const MeasurementRemap &r, const BitVec &outcomes);

}  // namespace pauligraph

#endif
