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

#include <vector>

#include "doctest.h"
#include "measurement_map.hpp"
#include "oracle.hpp"
#include "stabilizer_search.hpp"
#include "test_util.hpp"

using namespace pauligraph;
using pgtest::Rng;

namespace {

std::vector<PauliOperator> parse_set(const std::vector<std::string> &words) {
  std::vector<PauliOperator> out;
  for (const std::string &w : words) {
    out.push_back(parse_pauli(w));
  }
  return out;
}

// Support agreement for every qubit after pulling the set through the frame.
bool fully_agrees(const std::vector<PauliOperator> &s, const PauliFrame &f) {
  if (s.empty()) {
    return true;
  }
  std::vector<PauliOperator> moved;
  for (const PauliOperator &p : s) {
    moved.push_back(backward_action(f, p));
  }
  for (size_t q = 0; q < s[0].num_qubits(); q++) {
    if (!agrees_on_support(moved, q)) {
      return false;
    }
  }
  return true;
}

// Random mutually commuting Hermitian set: signed Z-words conjugated by a
// random Clifford frame.
std::vector<PauliOperator> rand_commuting_set(Rng &rng, size_t n, size_t count) {
  PauliFrame f = pgtest::rand_frame(rng, n);
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<PauliOperator> out;
  while (out.size() < count) {
    PauliOperator w = PauliOperator::identity(n);
    for (size_t q = 0; q < n; q++) {
      if (coin(rng)) {
        w.set_letter(q, PauliLetter::Z);
      }
    }
    if (w.is_identity_word()) {
      continue;
    }
    PauliOperator moved = forward_action(f, w);
    out.push_back(coin(rng) ? moved.negated() : moved);
  }
  return out;
}

const std::vector<std::string> kTenOperatorSet = {
    "ZZII", "ZIZI", "ZIIZ", "IZZI", "IZIZ",
    "IIZZ", "XXXX", "YYYY", "XXYY", "YYXX"};

}  // namespace

TEST_CASE("agrees_on_support distinguishes agreement, vacuity, conflict") {
  auto s = parse_set({"ZZI", "ZIZ"});
  CHECK(agrees_on_support(s, 0) == PauliLetter::Z);
  CHECK(agrees_on_support(s, 1) == PauliLetter::Z);
  CHECK(agrees_on_support(s, 2) == PauliLetter::Z);
  auto conflict = parse_set({"ZI", "XI"});
  CHECK_FALSE(agrees_on_support(conflict, 0).has_value());
  CHECK(agrees_on_support(conflict, 1) == PauliLetter::I);
  CHECK(agrees_on_support({}, 0) == PauliLetter::I);
}

TEST_CASE("select_tqe clears one qubit of a minimum element") {
  BitVec active(2);
  active.set(0, true);
  active.set(1, true);

  Gate g = select_tqe(parse_set({"ZZ"}), active);
  CHECK(g == Gate::tqe(PauliLetter::X, PauliLetter::Z, 0, 1));
  CHECK(mask(forward_action(gate_frame(g, 2), parse_pauli("ZZ")), active).weight() == 1);

  Gate h = select_tqe(parse_set({"XX"}), active);
  CHECK(h == Gate::tqe(PauliLetter::X, PauliLetter::Y, 0, 1));
  CHECK(mask(forward_action(gate_frame(h, 2), parse_pauli("XX")), active).weight() == 1);

  CHECK_THROWS(select_tqe({}, active));
  CHECK_THROWS(select_tqe(parse_set({"ZI"}), active));

  // A custom cost can steer the choice.
  Gate steered = select_tqe(parse_set({"ZZ"}), active, [](const Gate &c) {
    return c.sigma == PauliLetter::Y ? 0.0 : 5.0;
  });
  CHECK(steered.sigma == PauliLetter::Y);
}

TEST_CASE("find_stabilizers: trivial and fully agreeing sets") {
  SearchResult one = find_stabilizers(parse_set({"Z"}), 1);
  CHECK(one.circuit.gates.size() == 1);
  CHECK(one.circuit.gates[0] == Gate::measure(PauliLetter::Z, 0, 0));
  CHECK(one.frame == PauliFrame::origin(1));

  // Pairwise Z-words agree everywhere; the general pre-pass measures all of
  // them without a single TQE gate.
  SearchResult agree = find_stabilizers(parse_set({"ZZI", "ZIZ"}), 3);
  CircuitStats st = circuit_stats(agree.circuit);
  CHECK(st.two_qubit_gates == 0);
  CHECK(st.n_measurements == 3);
  CHECK(agree.frame == PauliFrame::origin(3));

  // The same set in exact mode may not inflate the span: two measurements.
  SearchOptions exact;
  exact.mode = SearchMode::Exact;
  SearchResult ex = find_stabilizers(parse_set({"ZZI", "ZIZ"}), 3, exact);
  CircuitStats est = circuit_stats(ex.circuit);
  CHECK(est.n_measurements == 2);
  CHECK(est.two_qubit_gates <= max_tqe_bound(3, 2));
  CHECK(fully_agrees(parse_set({"ZZI", "ZIZ"}), ex.frame));
}

TEST_CASE("find_stabilizers rejects bad input") {
  CHECK_THROWS(find_stabilizers(parse_set({"Z", "X"}), 1));
  CHECK_THROWS(find_stabilizers(parse_set({"II", "ZZ"}), 2));
  CHECK_THROWS(find_stabilizers(parse_set({"Z"}), 2));
}

TEST_CASE("find_stabilizers: ten-operator four-qubit set") {
  auto s = parse_set(kTenOperatorSet);
  for (SearchMode mode : {SearchMode::General, SearchMode::Exact}) {
    SearchOptions opt;
    opt.mode = mode;
    SearchResult r = find_stabilizers(s, 4, opt);
    CircuitStats st = circuit_stats(r.circuit);
    CHECK(st.n_measurements == 4);
    CHECK(st.two_qubit_gates <= max_tqe_bound(4, 4));
    CHECK(fully_agrees(s, r.frame));
    // The accumulated frame is exactly the circuit's unitary part.
    CHECK(invert(r.frame) == circuit_frame(strip_measurements(r.circuit)));
    // Every element reconstructs from the measured set.
    MeasurementRemap mm = map_measurements(s, r.circuit, r.frame);
    CHECK(mm.sources.size() == 4);
    CHECK(mm.b.size() == 10);
    // Orthogonality of the input set against the pulled measured set.
    for (const PauliOperator &sq : measured_set(r.circuit)) {
      PauliOperator pulled = forward_action(r.frame, sq);
      for (const PauliOperator &p : s) {
        CHECK(commute(p, pulled));
      }
    }
  }
}

TEST_CASE("map_measurements certifies signed product rows") {
  auto s = parse_set({"ZZZ", "ZXX"});
  SearchOptions exact;
  exact.mode = SearchMode::Exact;
  SearchResult r = find_stabilizers(s, 3, exact);
  CHECK(circuit_stats(r.circuit).n_measurements == 2);
  CHECK(circuit_stats(r.circuit).two_qubit_gates <= max_tqe_bound(3, 2));

  MeasurementRemap mm = map_measurements(s, r.circuit, r.frame, {7, 9});
  CHECK(mm.targets == std::vector<uint32_t>{7, 9});
  std::vector<PauliOperator> pulled;
  for (const PauliOperator &sq : measured_set(r.circuit)) {
    pulled.push_back(forward_action(r.frame, sq));
  }
  for (size_t i = 0; i < s.size(); i++) {
    PauliOperator prod = PauliOperator::identity(3);
    for (size_t q = 0; q < pulled.size(); q++) {
      if (mm.b[i].get(q)) {
        prod = multiply(prod, pulled[q]);
      }
    }
    if (mm.v.get(i)) {
      prod = prod.negated();
    }
    CHECK(prod == s[i]);
  }

  // An element outside the measured span is refused by name.
  CHECK_THROWS_WITH_AS(map_measurements(parse_set({"XII"}), r.circuit, r.frame),
                       "map_measurements: XII is outside the measured span",
                       std::runtime_error);
}

TEST_CASE("apply_remap computes affine GF(2) outputs") {
  MeasurementRemap r;
  r.sources = {0, 1};
  r.targets = {2, 3};
  BitVec row0(2), row1(2);
  row0.set(0, true);
  row1.set(0, true);
  row1.set(1, true);
  r.b = {row0, row1};
  r.v = BitVec(2);
  r.v.set(1, true);

  BitVec outcomes(2);
  outcomes.set(0, true);
  BitVec out = apply_remap(r, outcomes);
  CHECK(out.get(0));        // passthrough of source 0
  CHECK_FALSE(out.get(1));  // 1 XOR 1 XOR 0
  CHECK_THROWS(apply_remap(r, BitVec(3)));
}

TEST_CASE("max_tqe_bound matches the closed form") {
  CHECK(max_tqe_bound(4, 4) == 6);
  CHECK(max_tqe_bound(12, 10) == 65);
  CHECK(max_tqe_bound(3, 0) == 0);
  CHECK_THROWS(max_tqe_bound(3, 4));
}

TEST_CASE("random sets: agreement, span, and the gate bound") {
  Rng rng(2024);
  std::uniform_int_distribution<size_t> nd(1, 5), cd(1, 6);
  for (int t = 0; t < 50; t++) {
    size_t n = nd(rng);
    auto s = rand_commuting_set(rng, n, cd(rng));
    SearchOptions opt;
    opt.mode = t % 2 ? SearchMode::Exact : SearchMode::General;
    if (t % 7 == 0) {
      opt.rescan_agreement = false;
    }
    SearchResult r = find_stabilizers(s, n, opt);
    CircuitStats st = circuit_stats(r.circuit);
    REQUIRE(st.n_measurements <= n);
    CHECK(st.two_qubit_gates <= max_tqe_bound(n, st.n_measurements));
    CHECK(fully_agrees(s, r.frame));
    MeasurementRemap mm = map_measurements(s, r.circuit, r.frame);
    CHECK(mm.b.size() == s.size());
  }
}

TEST_CASE("searched circuit with remap reproduces direct measurement statistics") {
  Rng rng(515);
  std::uniform_int_distribution<size_t> nd(1, 3), cd(1, 3);
  for (int t = 0; t < 25; t++) {
    size_t n = nd(rng);
    auto s = rand_commuting_set(rng, n, cd(rng));
    SearchOptions opt;
    opt.mode = t % 2 ? SearchMode::Exact : SearchMode::General;
    SearchResult r = find_stabilizers(s, n, opt);

    std::vector<uint32_t> targets;
    std::vector<GraphNode> direct;
    for (size_t i = 0; i < s.size(); i++) {
      targets.push_back(100 + static_cast<uint32_t>(i));
      direct.push_back(GraphNode::measurement(s[i], targets.back()));
    }
    PauliGraph a = build_graph(n, direct);

    MeasurementRemap mm = map_measurements(s, r.circuit, r.frame, targets);
    std::vector<GraphNode> searched;
    searched.push_back(
        GraphNode::frame_node(circuit_frame(strip_measurements(r.circuit))));
    std::vector<PauliOperator> sigma = measured_set(r.circuit);
    for (size_t q = 0; q < sigma.size(); q++) {
      searched.push_back(GraphNode::measurement(sigma[q], mm.sources[q]));
    }
    searched.push_back(GraphNode::remap(mm.sources, mm.targets, mm.b, mm.v));
    PauliGraph b = build_graph(n, searched);

    Matrix rho = pgtest::rand_density(rng, n);
    CHECK(release_equivalent(a, b, targets, rho));
  }
}
