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

#include <numbers>

#include "doctest.h"
#include "graph.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

using namespace pauligraph;
using pgtest::Rng;

namespace {

PauliFrame cnot_frame() {
  return tqe_frame(2, PauliLetter::Z, PauliLetter::X, 0, 1);
}

GraphNode meas(const char *s, uint32_t cid) {
  return GraphNode::measurement(parse_pauli(s), cid);
}

GraphNode rot(const char *s, double theta) {
  return GraphNode::rotation(parse_pauli(s), theta);
}

GraphNode prep(const char *sz, const char *sx) {
  return GraphNode::preparation(parse_pauli(sz), parse_pauli(sx));
}

}  // namespace

TEST_CASE("commutes_pauli_node per node kind") {
  CHECK(commutes_pauli_node(parse_pauli("ZI"), rot("ZZ", 0.7)));
  CHECK_FALSE(commutes_pauli_node(parse_pauli("XI"), prep("ZI", "XI")));
  CHECK(commutes_pauli_node(parse_pauli("ZI"),
                            GraphNode::frame_node(cnot_frame())));
  CHECK_FALSE(commutes_pauli_node(parse_pauli("XI"),
                                  GraphNode::frame_node(cnot_frame())));
  CHECK(commutes_pauli_node(parse_pauli("XI"), meas("XI", 0)));
  CHECK_FALSE(commutes_pauli_node(parse_pauli("ZI"), meas("XI", 0)));
}

TEST_CASE("commutes_nodes inference rules") {
  CHECK(commutes_nodes(meas("ZZZ", 0), meas("ZXX", 1)));
  CHECK_FALSE(commutes_nodes(prep("ZI", "XI"), prep("ZI", "XI")));
  CHECK_FALSE(commutes_nodes(rot("XI", 0.3), meas("ZI", 0)));
  // The frame side requires exact fixing, signs included.
  PauliFrame flip = rotation_frame(parse_pauli("XI"), 2);  // Z -> -Z
  CHECK_FALSE(commutes_nodes(GraphNode::frame_node(flip), meas("ZI", 0)));
  CHECK(commutes_nodes(GraphNode::frame_node(flip), meas("XI", 0)));
}

TEST_CASE("remap nodes order only against their classical ids") {
  GraphNode rm = GraphNode::remap({0}, {2}, {BitVec(1)}, BitVec(1));
  rm.b[0].set(0, true);
  CHECK_FALSE(commutes_nodes(meas("ZI", 0), rm));  // writes an input
  CHECK(commutes_nodes(meas("ZI", 1), rm));
  CHECK_FALSE(commutes_nodes(rm, meas("XX", 2)));  // both write id 2
  CHECK(commutes_nodes(rm, rot("XX", 0.4)));
  CHECK(commutes_nodes(rm, prep("ZI", "XI")));
  GraphNode rm2 = GraphNode::remap({2}, {3}, {BitVec(1)}, BitVec(1));
  CHECK_FALSE(commutes_nodes(rm, rm2));  // rm2 reads rm's output
  GraphNode rm3 = GraphNode::remap({0}, {4}, {BitVec(1)}, BitVec(1));
  CHECK(commutes_nodes(rm, rm3));
}

TEST_CASE("build_graph derives the expected edges") {
  double t = 0.7;
  // Rot(ZX) anticommutes with the preparation's destabilizer XI; the two
  // rotations commute with each other, as does Rot(IX) with the preparation.
  PauliGraph g = build_graph(
      2, {prep("ZI", "XI"), rot("ZX", -t / 2), rot("IX", t / 2)});
  auto edges = graph_edges(g);
  REQUIRE(edges.size() == 1);
  CHECK(edges[0] == std::pair<size_t, size_t>{0, 1});
  CHECK(g.frame.is_origin());

  PauliGraph h = build_graph(
      1, {rot("Z", 0.3), rot("X", 0.4), meas("Z", 0)});
  auto he = graph_edges(h);
  REQUIRE(he.size() == 2);
  CHECK(he[0] == std::pair<size_t, size_t>{0, 1});
  CHECK(he[1] == std::pair<size_t, size_t>{1, 2});
}

TEST_CASE("push_frame maps node Paulis through the inverse frame") {
  GraphNode n = meas("XI", 3);
  CHECK(push_frame(PauliFrame::origin(2), n) == n);
  GraphNode moved = push_frame(cnot_frame(), n);
  CHECK(moved.p == parse_pauli("XX"));
  CHECK(moved.cid == 3);
}

TEST_CASE("push_frame keeps the sequenced channel, random cases") {
  Rng rng(321);
  for (int t = 0; t < 30; t++) {
    size_t n = 1 + t % 3;
    PauliFrame f = pgtest::rand_frame(rng, n);
    uint32_t cid = 0;
    GraphNode node = pgtest::rand_graph_node(rng, n, &cid);
    PauliGraph before = build_graph(n, {GraphNode::frame_node(f), node});
    PauliGraph after = build_graph(n, {push_frame(f, node), GraphNode::frame_node(f)});
    CHECK(hold_equivalent(before, after));
  }
}

TEST_CASE("quarter_turns detects multiples of pi/2") {
  CHECK(quarter_turns(std::numbers::pi / 2) == 1);
  CHECK(quarter_turns(-3 * std::numbers::pi / 2) == -3);
  CHECK(quarter_turns(2 * std::numbers::pi) == 4);
  CHECK(quarter_turns(0.0) == 0);
  CHECK_FALSE(quarter_turns(0.3).has_value());
}

TEST_CASE("merge: rotations add angles, quarter totals become frames") {
  MergeResult r = merge_nodes(rot("XX", 0.3), rot("XX", 0.5));
  REQUIRE(r.merged);
  REQUIRE(r.replacement.size() == 1);
  CHECK(r.replacement[0].kind == NodeKind::Rotation);
  CHECK(r.replacement[0].theta == doctest::Approx(0.8));

  MergeResult opp = merge_nodes(rot("XX", 0.3), rot("-XX", 0.5));
  REQUIRE(opp.merged);
  CHECK(opp.replacement[0].theta == doctest::Approx(-0.2));

  double q = std::numbers::pi / 4;
  MergeResult fr = merge_nodes(rot("XX", q), rot("XX", q));
  REQUIRE(fr.merged);
  REQUIRE(fr.replacement.size() == 1);
  CHECK(fr.replacement[0].kind == NodeKind::Frame);
  CHECK(fr.replacement[0].frame == rotation_frame(parse_pauli("XX"), 1));

  CHECK_FALSE(merge_nodes(rot("XX", 0.3), rot("XZ", 0.5)).merged);
}

TEST_CASE("merge: preparations and measurements") {
  MergeResult pm = merge_nodes(prep("ZI", "XI"), meas("ZI", 7));
  REQUIRE(pm.merged);
  REQUIRE(pm.replacement.size() == 2);
  CHECK(pm.replacement[0].kind == NodeKind::Preparation);
  CHECK(pm.replacement[1].kind == NodeKind::Measurement);
  CHECK(pm.replacement[1].p == PauliOperator::identity(2));
  CHECK(pm.replacement[1].cid == 7);

  MergeResult pmn = merge_nodes(prep("ZI", "XI"), meas("-ZI", 7));
  REQUIRE(pmn.merged);
  CHECK(pmn.replacement[1].p ==
        PauliOperator::phase_times_identity(2, 2));  // always outcome 1

  MergeResult mm = merge_nodes(meas("XX", 1), meas("-XX", 2));
  REQUIRE(mm.merged);
  REQUIRE(mm.replacement.size() == 1);
  CHECK(mm.replacement[0].cid == 1);
  REQUIRE(mm.alias.has_value());
  CHECK(mm.alias->first == 2);
  CHECK(mm.alias->second.root == 1);
  CHECK(mm.alias->second.complement);

  MergeResult pp = merge_nodes(prep("ZI", "XI"), prep("-ZI", "YI"));
  REQUIRE(pp.merged);
  CHECK(pp.replacement[0] == prep("-ZI", "YI"));

  // XX leaves the effective qubit of (ZI, XI); the pair is then a genuinely
  // different channel from the second preparation alone.
  CHECK_FALSE(merge_nodes(prep("ZI", "XI"), prep("-ZI", "XX")).merged);

  CHECK(merge_nodes(rot("ZI", 1.1), prep("ZI", "XI")).merged);
  CHECK(merge_nodes(rot("-ZI", 1.1), meas("ZI", 0)).merged);
  CHECK_FALSE(merge_nodes(meas("ZI", 0), prep("ZI", "XI")).merged);
  CHECK_FALSE(merge_nodes(prep("ZI", "XI"), rot("ZI", 1.1)).merged);
}

TEST_CASE("every merge rule preserves the channel") {
  Rng rng(888);
  std::uniform_real_distribution<double> ang(-3.0, 3.0);
  for (int t = 0; t < 60; t++) {
    size_t n = 1 + t % 3;
    PauliOperator p = pgtest::rand_nonidentity_hermitian(rng, n);
    PauliOperator ps = t % 2 ? p.negated() : p;
    PauliOperator px = pgtest::rand_anticommuting(rng, p);
    // A second preparation only merges when its destabilizer stays inside the
    // effective qubit spanned by (p, px).
    PauliOperator px2 = embed(lift(t % 3 ? multiply(px, p) : px), t % 2 ? -1 : +1);
    std::vector<std::pair<GraphNode, GraphNode>> pairs;
    double q = std::numbers::pi / 2;
    pairs.push_back({GraphNode::rotation(p, ang(rng)), GraphNode::rotation(ps, ang(rng))});
    pairs.push_back({GraphNode::rotation(p, q), GraphNode::rotation(ps, q)});
    pairs.push_back({GraphNode::rotation(p, ang(rng)), GraphNode::preparation(ps, px)});
    pairs.push_back({GraphNode::rotation(p, ang(rng)), GraphNode::measurement(ps, 0)});
    pairs.push_back({GraphNode::preparation(p, px), GraphNode::preparation(ps, px2)});
    pairs.push_back({GraphNode::preparation(p, px), GraphNode::measurement(ps, 1)});
    pairs.push_back({GraphNode::measurement(p, 0), GraphNode::measurement(ps, 1)});
    for (auto &[n1, n2] : pairs) {
      MergeResult r = merge_nodes(n1, n2);
      REQUIRE(r.merged);
      PauliGraph before = build_graph(n, {n1, n2});
      PauliGraph after = build_graph(n, r.replacement);
      if (r.alias) {
        after.aliases[r.alias->first] = r.alias->second;
      }
      CHECK(hold_equivalent(before, after));
      // Outcome statistics survive too, for the measurement rules.
      std::vector<uint32_t> ids;
      if (n1.kind == NodeKind::Measurement || n2.kind == NodeKind::Measurement) {
        if (n1.kind == NodeKind::Measurement) {
          ids.push_back(n1.cid);
        }
        if (n2.kind == NodeKind::Measurement) {
          ids.push_back(n2.cid);
        }
        Matrix rho = pgtest::rand_density(rng, n);
        CHECK(release_equivalent(before, after, ids, rho));
      }
    }
  }
}

TEST_CASE("mergeable_position blocks two-edge paths only") {
  PauliGraph chain = build_graph(
      1, {rot("Z", 0.2), rot("X", 0.3), rot("Z", 0.4)});
  CHECK(mergeable_position(chain, 0, 1));
  CHECK(mergeable_position(chain, 1, 2));
  CHECK_FALSE(mergeable_position(chain, 0, 2));

  PauliGraph loose = build_graph(
      2, {rot("ZI", 0.2), rot("IZ", 0.3), rot("ZI", 0.4)});
  CHECK(mergeable_position(loose, 0, 2));

  PauliGraph ind = build_graph(
      2, {rot("ZI", 0.2), rot("IX", 0.3), rot("ZI", 0.4)});
  CHECK(mergeable_position(ind, 0, 2));
}

TEST_CASE("normalize absorbs interior frames into the terminal frame") {
  PauliGraph g = build_graph(
      2, {GraphNode::frame_node(cnot_frame()), meas("XI", 0)});
  PauliGraph out = normalize(std::move(g));
  REQUIRE(out.nodes.size() == 1);
  CHECK(out.nodes[0].kind == NodeKind::Measurement);
  CHECK(out.nodes[0].p == parse_pauli("XX"));
  CHECK(out.frame == cnot_frame());
}

TEST_CASE("normalize converts quarter-turn rotations") {
  PauliGraph g = build_graph(1, {rot("Z", std::numbers::pi / 2)});
  PauliGraph out = normalize(std::move(g));
  CHECK(out.nodes.empty());
  CHECK(out.frame == rotation_frame(parse_pauli("Z"), 1));
}

TEST_CASE("normalize merges across commuting separators") {
  PauliGraph g = build_graph(
      2, {rot("ZI", 0.2), rot("IX", 0.3), rot("ZI", 0.4)});
  PauliGraph out = normalize(std::move(g));
  REQUIRE(out.nodes.size() == 2);
  // The outer rotations fused; the separator kept its relative position.
  bool fused = false;
  for (const GraphNode &n : out.nodes) {
    if (n.p == parse_pauli("ZI")) {
      fused = true;
      CHECK(n.theta == doctest::Approx(0.6));
    }
  }
  CHECK(fused);
}

TEST_CASE("normalize aliases repeated measurements and rewrites remaps") {
  GraphNode rm = GraphNode::remap({1}, {2}, {BitVec(1)}, BitVec(1));
  rm.b[0].set(0, true);
  PauliGraph g = build_graph(1, {meas("Z", 0), meas("-Z", 1), rm});
  PauliGraph before = g;
  PauliGraph out = normalize(std::move(g));
  REQUIRE(out.nodes.size() == 2);
  CHECK(out.nodes[0].kind == NodeKind::Measurement);
  CHECK(out.nodes[0].cid == 0);
  CHECK(out.nodes[1].kind == NodeKind::Remap);
  CHECK(out.nodes[1].inputs == std::vector<uint32_t>{0});
  CHECK(out.nodes[1].v.get(0));  // complement folded into the constant
  OutcomeAlias a = resolve_alias(out, 1);
  CHECK(a.root == 0);
  CHECK(a.complement);

  Rng rng(4);
  for (int t = 0; t < 5; t++) {
    Matrix rho = pgtest::rand_density(rng, 1);
    CHECK(release_equivalent(before, out, {0, 1, 2}, rho));
  }
}

TEST_CASE("alias chains resolve transitively") {
  PauliGraph g;
  g.aliases[3] = {2, true};
  g.aliases[2] = {1, true};
  g.aliases[1] = {0, false};
  OutcomeAlias a = resolve_alias(g, 3);
  CHECK(a.root == 0);
  CHECK_FALSE(a.complement);
  OutcomeAlias b = resolve_alias(g, 2);
  CHECK(b.root == 0);
  CHECK(b.complement);
  OutcomeAlias c = resolve_alias(g, 7);
  CHECK(c.root == 7);
  CHECK_FALSE(c.complement);
}

TEST_CASE("normalize is idempotent and preserves the channel") {
  Rng rng(5150);
  for (int t = 0; t < 25; t++) {
    size_t n = 1 + t % 3;
    PauliGraph g = pgtest::rand_graph(rng, n, 2 + t % 5);
    PauliGraph once = normalize(g);
    PauliGraph twice = normalize(once);
    CHECK(once.nodes == twice.nodes);
    CHECK(once.frame == twice.frame);
    CHECK(hold_equivalent(g, once));
  }
}

TEST_CASE("normalize preserves declared outcome statistics") {
  Rng rng(6000);
  for (int t = 0; t < 15; t++) {
    size_t n = 1 + t % 3;
    PauliGraph g = pgtest::rand_graph(rng, n, 2 + t % 5);
    std::vector<uint32_t> ids;
    for (const GraphNode &node : g.nodes) {
      if (node.kind == NodeKind::Measurement) {
        ids.push_back(node.cid);
      }
    }
    PauliGraph out = normalize(g);
    Matrix rho = pgtest::rand_density(rng, n);
    CHECK(release_equivalent(g, out, ids, rho));
  }
}

TEST_CASE("swapping commuting neighbours keeps the channel and the edges") {
  Rng rng(777);
  int swaps = 0;
  for (int t = 0; t < 40 && swaps < 12; t++) {
    size_t n = 1 + t % 3;
    PauliGraph g = pgtest::rand_graph(rng, n, 4);
    for (size_t k = 0; k + 1 < g.nodes.size(); k++) {
      if (!commutes_nodes(g.nodes[k], g.nodes[k + 1])) {
        continue;
      }
      PauliGraph swapped = g;
      std::swap(swapped.nodes[k], swapped.nodes[k + 1]);
      CHECK(hold_equivalent(g, swapped));
      swaps++;
      break;
    }
  }
  CHECK(swaps >= 5);
}
