// Copyright 2026 The pauligraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "prep_reduction.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "bitvec.hpp"
#include "circuit.hpp"
#include "stabilizer_search.hpp"

namespace pauligraph {

void validate_prep_set(const PrepSet &pi) {
  for (size_t i = 0; i < pi.size(); i++) {
    const PrepPair &a = pi[i];
    if (a.q.num_qubits() != a.p.num_qubits() ||
        a.p.num_qubits() != pi[0].p.num_qubits()) {
      throw std::invalid_argument("prep set: qubit count mismatch");
    }
    if (!a.p.is_hermitian() || !a.q.is_hermitian()) {
      throw std::invalid_argument("prep set: operators must be Hermitian");
    }
    if (a.p.is_identity_word() || a.q.is_identity_word()) {
      throw std::invalid_argument("prep set: identity operator");
    }
    if (!commutator_form(a.p, a.q)) {
      throw std::invalid_argument("prep set: p and q must anti-commute");
    }
    for (size_t j = i + 1; j < pi.size(); j++) {
      const PrepPair &b = pi[j];
      if (commutator_form(a.p, b.p) || commutator_form(a.q, b.q) ||
          commutator_form(a.p, b.q) || commutator_form(a.q, b.p)) {
        throw std::invalid_argument("prep set: distinct pairs must commute");
      }
    }
  }
}

size_t prep_cost(const PrepSet &pi) {
  size_t c = 0;
  for (const PrepPair &pr : pi) {
    c += pr.p.weight() + pr.q.weight();
  }
  return c;
}

std::vector<PauliOperator> destabilizers_from(
    const PrepSet &pi, const std::vector<PauliOperator> &s_prime,
    const PauliFrame &f_ctx) {
  size_t n = f_ctx.num_qubits();
  size_t m = pi.size();
  if (s_prime.size() != m) {
    throw std::invalid_argument("destabilizers_from: size mismatch");
  }
  std::vector<char> seen(n, 0);
  std::vector<PauliOperator> out;
  out.reserve(m);
  for (const PauliOperator &sp : s_prime) {
    PauliOperator w = forward_action(f_ctx, sp);
    if (w.weight() != 1) {
      throw std::runtime_error("destabilizers_from: span mismatch");
    }
    size_t q = w.support()[0];
    if (seen[q]) {
      throw std::runtime_error("destabilizers_from: span mismatch");
    }
    seen[q] = 1;
    // The pre-image of an axis anti-commuting with sp's image anti-commutes
    // with sp and commutes with every other element of s_prime; its pattern
    // against the original stabilizers selects which original destabilizers
    // multiply.
    PauliLetter pl = w.letter_at(q) == PauliLetter::Z ? PauliLetter::X
                                                      : PauliLetter::Z;
    PauliOperator partner =
        backward_action(f_ctx, PauliOperator::single(n, q, pl));
    PauliOperator d(n);
    for (size_t j = 0; j < m; j++) {
      if (commutator_form(partner, pi[j].p)) {
        d = multiply(d, pi[j].q);
      }
    }
    if (d.is_identity_word()) {
      throw std::runtime_error("destabilizers_from: span mismatch");
    }
    if (d.sign() < 0) {
      d.mul_phase(2);  // eigenspace relabeling is sign-blind
    }
    out.push_back(std::move(d));
  }
  for (size_t i = 0; i < m; i++) {
    for (size_t j = 0; j < m; j++) {
      if (commutator_form(s_prime[i], out[j]) != (i == j)) {
        throw std::runtime_error("destabilizers_from: span mismatch");
      }
    }
  }
  return out;
}

namespace {

bool flat_bit(const PauliVector &v, size_t k) {
  size_t n = v.x.num_bits();
  return k < n ? v.x.get(k) : v.z.get(k - n);
}

// GF(2) solver over lifted words with exact product reconstruction. The
// constructor rejects dependent word lists with the given message.
class WordSpan {
 public:
  WordSpan(std::vector<PauliOperator> words, const char *dependent_msg)
      : words_(std::move(words)) {
    size_t m = words_.size();
    for (size_t j = 0; j < m; j++) {
      PauliVector v = lift(words_[j]);
      BitVec c(m);
      c.set(j, true);
      for (size_t r = 0; r < rows_.size(); r++) {
        if (flat_bit(v, pivot_[r])) {
          v.add(rows_[r]);
          c.xor_with(comb_[r]);
        }
      }
      if (v.is_zero()) {
        throw std::invalid_argument(dependent_msg);
      }
      size_t pv = 0;
      while (!flat_bit(v, pv)) {
        pv++;
      }
      rows_.push_back(std::move(v));
      comb_.push_back(std::move(c));
      pivot_.push_back(pv);
    }
  }

  // Product (ascending index order) of the words multiplying to the target
  // word; empty when the target falls outside the span. The product's phase
  // is the group element's, which the lifted solve alone does not pin down.
  std::optional<PauliOperator> express(const PauliOperator &target) const {
    PauliVector v = lift(target);
    BitVec a(words_.size());
    for (size_t r = 0; r < rows_.size(); r++) {
      if (flat_bit(v, pivot_[r])) {
        v.add(rows_[r]);
        a.xor_with(comb_[r]);
      }
    }
    if (!v.is_zero()) {
      return std::nullopt;
    }
    PauliOperator prod(target.num_qubits());
    for (size_t j = 0; j < words_.size(); j++) {
      if (a.get(j)) {
        prod = multiply(prod, words_[j]);
      }
    }
    return prod;
  }

  // Signed membership in the group the words generate. Meaningful when the
  // words pairwise commute, so the product order cannot move the sign.
  bool contains_exact(const PauliOperator &target) const {
    std::optional<PauliOperator> e = express(target);
    return e.has_value() && *e == target;
  }

 private:
  std::vector<PauliOperator> words_;
  std::vector<PauliVector> rows_;
  std::vector<BitVec> comb_;
  std::vector<size_t> pivot_;
};

size_t gf2_rank(std::vector<PauliVector> vs) {
  std::vector<PauliVector> rows;
  std::vector<size_t> pivots;
  for (PauliVector &v : vs) {
    for (size_t r = 0; r < rows.size(); r++) {
      if (flat_bit(v, pivots[r])) {
        v.add(rows[r]);
      }
    }
    if (v.is_zero()) {
      continue;
    }
    size_t pv = 0;
    while (!flat_bit(v, pv)) {
      pv++;
    }
    rows.push_back(std::move(v));
    pivots.push_back(pv);
  }
  return rows.size();
}

bool same_span(const std::vector<PauliVector> &a,
               const std::vector<PauliVector> &b) {
  std::vector<PauliVector> both = a;
  both.insert(both.end(), b.begin(), b.end());
  size_t ra = gf2_rank(a);
  return ra == gf2_rank(b) && ra == gf2_rank(both);
}

// Generating set of the words commuting with every stabilizer and
// destabilizer of pi, realized with positive signs.
std::vector<PauliOperator> commutant_basis(const PrepSet &pi, size_t n) {
  std::vector<PauliVector> basis;
  basis.reserve(2 * n);
  for (size_t k = 0; k < 2 * n; k++) {
    PauliVector v(n);
    if (k < n) {
      v.x.set(k, true);
    } else {
      v.z.set(k - n, true);
    }
    basis.push_back(std::move(v));
  }
  auto strike = [&basis](const PauliVector &c) {
    size_t hit = basis.size();
    for (size_t i = 0; i < basis.size() && hit == basis.size(); i++) {
      if (commutator_form(basis[i], c)) {
        hit = i;
      }
    }
    if (hit == basis.size()) {
      return;
    }
    PauliVector pv = std::move(basis[hit]);
    basis.erase(basis.begin() + static_cast<std::ptrdiff_t>(hit));
    for (PauliVector &v : basis) {
      if (commutator_form(v, c)) {
        v.add(pv);
      }
    }
  };
  for (const PrepPair &pr : pi) {
    strike(lift(pr.p));
    strike(lift(pr.q));
  }
  std::vector<PauliOperator> out;
  out.reserve(basis.size());
  for (const PauliVector &v : basis) {
    out.push_back(embed(v));
  }
  return out;
}

// Exact equality of the prepare-then-conjugate channels of (pi, f) and
// (pi2, f2): the signed stabilizer groups and the prepared subsystem spans
// must match, the conjugated stabilizer groups must match, and every word
// commuting with all of pi must conjugate through both frames to images that
// agree up to an exact conjugated-stabilizer factor.
bool channel_preserving(const PrepSet &pi, const PauliFrame &f,
                        const PrepSet &pi2, const PauliFrame &f2) {
  if (pi2.size() != pi.size()) {
    return false;
  }
  size_t n = f.num_qubits();
  std::vector<PauliOperator> stab, stab2, pushed, pushed2;
  std::vector<PauliVector> sub, sub2;
  for (const PrepPair &pr : pi) {
    stab.push_back(pr.p);
    pushed.push_back(forward_action(f, pr.p));
    sub.push_back(lift(pr.p));
    sub.push_back(lift(pr.q));
  }
  for (const PrepPair &pr : pi2) {
    stab2.push_back(pr.p);
    pushed2.push_back(forward_action(f2, pr.p));
    sub2.push_back(lift(pr.p));
    sub2.push_back(lift(pr.q));
  }
  if (!same_span(sub, sub2)) {
    return false;
  }
  const char *msg = "reduce_frame_by_prep: dependent stabilizers";
  WordSpan group(stab, msg);
  WordSpan group2(stab2, msg);
  WordSpan img(pushed, msg);
  WordSpan img2(pushed2, msg);
  for (size_t k = 0; k < stab.size(); k++) {
    if (!group.contains_exact(stab2[k]) || !group2.contains_exact(stab[k])) {
      return false;
    }
    if (!img.contains_exact(pushed2[k]) || !img2.contains_exact(pushed[k])) {
      return false;
    }
  }
  for (const PauliOperator &r : commutant_basis(pi, n)) {
    PauliOperator shift = multiply(forward_action(f, r), forward_action(f2, r));
    if (!img.contains_exact(shift)) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::pair<PrepSet, PauliFrame> reduce_frame_by_prep(const PrepSet &pi,
                                                    const PauliFrame &f) {
  validate_prep_set(pi);
  if (pi.empty()) {
    return {pi, f};
  }
  size_t n = f.num_qubits();
  if (pi[0].p.num_qubits() != n) {
    throw std::invalid_argument("reduce_frame_by_prep: qubit count mismatch");
  }
  size_t m = pi.size();

  std::vector<PauliOperator> stab_words;
  stab_words.reserve(m);
  for (const PrepPair &pr : pi) {
    stab_words.push_back(pr.p);
  }
  WordSpan span(stab_words, "prep set: dependent stabilizers");

  // Push the stabilizers through the frame and search for a cheap circuit
  // measuring all the images at once.
  std::vector<PauliOperator> pushed;
  pushed.reserve(m);
  for (const PrepPair &pr : pi) {
    pushed.push_back(forward_action(f, pr.p));
  }
  SearchOptions opt;
  opt.mode = SearchMode::Exact;
  SearchResult sr = find_stabilizers(pushed, n, opt);

  std::vector<PauliOperator> axes;  // measured axes in circuit order
  axes.reserve(m);
  for (const Gate &gate : sr.circuit.gates) {
    if (gate.kind == GateKind::MeasSQ) {
      axes.push_back(PauliOperator::single(n, gate.i, gate.sigma));
    }
  }
  if (axes.size() != m) {
    throw std::logic_error("reduce_frame_by_prep: measurement count mismatch");
  }

  // Context frame with the search gates folded out: under it every
  // stabilizer image sits on one measured axis.
  PauliFrame ctx = compose(invert(sr.frame), f);

  // Candidate replacement stabilizers: the axis pre-images re-assembled as
  // exact products over pi, which pins their signs inside the group. The
  // measurement signs themselves are irrelevant here; decoupling handles
  // either orientation of a matched axis.
  std::vector<PauliOperator> s_new;
  s_new.reserve(m);
  for (const PauliOperator &ax : axes) {
    std::optional<PauliOperator> e = span.express(backward_action(ctx, ax));
    if (!e) {
      return {pi, f};  // search drifted off the span; nothing safe to do
    }
    s_new.push_back(std::move(*e));
  }

  // Decouple one pair per measured axis against its current pre-image, then
  // fold the search gates back in.
  auto attempt = [&](const PrepSet &pairs) -> std::optional<PauliFrame> {
    PauliFrame ft = ctx;
    std::vector<char> used(m, 0);
    for (const PauliOperator &ax : axes) {
      PauliVector pre = lift(backward_action(ft, ax));
      size_t match = m;
      for (size_t j = 0; j < m && match == m; j++) {
        if (!used[j] && lift(pairs[j].p) == pre) {
          match = j;
        }
      }
      if (match == m) {
        return std::nullopt;  // no aligned pair; give up on this branch
      }
      used[match] = 1;
      ft = decouple(ft, pairs[match].p, pairs[match].q);
    }
    return compose(sr.frame, ft);
  };

  size_t c_old = prep_cost(pi);

  // Replacement branch: swap in the re-assembled pairs when they are
  // strictly lighter and the frame does not get worse.
  std::vector<PauliOperator> q_new;
  try {
    q_new = destabilizers_from(pi, s_new, ctx);
  } catch (const std::runtime_error &) {
    q_new.clear();  // no usable pairing; keep the original pairs
  }
  if (!q_new.empty()) {
    PrepSet cand;
    cand.reserve(m);
    size_t c_new = 0;
    for (size_t i = 0; i < m; i++) {
      c_new += s_new[i].weight() + q_new[i].weight();
      cand.push_back({s_new[i], q_new[i]});
    }
    if (c_new < c_old) {
      std::optional<PauliFrame> f2 = attempt(cand);
      if (f2 && frame_cost(*f2) <= frame_cost(f) &&
          channel_preserving(pi, f, cand, *f2)) {
        return {std::move(cand), std::move(*f2)};
      }
    }
  }

  // Original pairs: accept only a strictly cheaper frame.
  std::optional<PauliFrame> f2 = attempt(pi);
  if (f2 && frame_cost(*f2) < frame_cost(f) &&
      channel_preserving(pi, f, pi, *f2)) {
    return {pi, std::move(*f2)};
  }
  return {pi, f};
}

namespace {

bool is_singlet(const GraphNode &n) {
  return n.kind == NodeKind::Rotation || n.kind == NodeKind::Measurement;
}

// Forward reachability from i over the derived edges.
std::vector<char> reach_from(const PauliGraph &g, size_t i) {
  std::vector<char> r(g.nodes.size(), 0);
  r[i] = 1;
  for (size_t j = i + 1; j < g.nodes.size(); j++) {
    for (size_t k = i; k < j; k++) {
      if (r[k] && g.edge(k, j)) {
        r[j] = 1;
        break;
      }
    }
  }
  return r;
}

// Backward reachability into j.
std::vector<char> reach_to(const PauliGraph &g, size_t j) {
  std::vector<char> r(g.nodes.size(), 0);
  r[j] = 1;
  for (size_t k = j; k-- > 0;) {
    for (size_t s = k + 1; s <= j; s++) {
      if (r[s] && g.edge(k, s)) {
        r[k] = 1;
        break;
      }
    }
  }
  return r;
}

// Moves nodes[src] to sit immediately after nodes[dst] (dst < src). Window
// ancestors of src hop over dst as a block; legal as long as none of them is
// reachable from dst, which both call sites guarantee. Returns src's new
// index; dst lands directly before it.
size_t relocate_back(PauliGraph &g, size_t dst, size_t src) {
  std::vector<char> to_src(src - dst + 1, 0);
  to_src[src - dst] = 1;
  for (size_t k = src; k-- > dst + 1;) {
    for (size_t s = k + 1; s <= src; s++) {
      if (to_src[s - dst] && g.edge(k, s)) {
        to_src[k - dst] = 1;
        break;
      }
    }
  }
  std::vector<GraphNode> out;
  out.reserve(g.nodes.size());
  for (size_t k = 0; k < dst; k++) {
    out.push_back(std::move(g.nodes[k]));
  }
  for (size_t k = dst + 1; k < src; k++) {
    if (to_src[k - dst]) {
      out.push_back(std::move(g.nodes[k]));
    }
  }
  out.push_back(std::move(g.nodes[dst]));
  size_t at = out.size();
  out.push_back(std::move(g.nodes[src]));
  for (size_t k = dst + 1; k < src; k++) {
    if (!to_src[k - dst]) {
      out.push_back(std::move(g.nodes[k]));
    }
  }
  for (size_t k = src + 1; k < g.nodes.size(); k++) {
    out.push_back(std::move(g.nodes[k]));
  }
  g.nodes = std::move(out);
  return at;
}

// Moves nodes[src] to sit immediately after nodes[dst] (src < dst). Window
// descendants of src hop behind dst as a block; legal as long as dst is not
// reachable from src, which the call site guarantees. Returns src's new
// index; dst lands directly before it.
size_t relocate_forward(PauliGraph &g, size_t src, size_t dst) {
  std::vector<char> from_src(dst - src + 1, 0);
  from_src[0] = 1;
  for (size_t k = src + 1; k < dst; k++) {
    for (size_t s = src; s < k; s++) {
      if (from_src[s - src] && g.edge(s, k)) {
        from_src[k - src] = 1;
        break;
      }
    }
  }
  std::vector<GraphNode> out;
  out.reserve(g.nodes.size());
  for (size_t k = 0; k < src; k++) {
    out.push_back(std::move(g.nodes[k]));
  }
  for (size_t k = src + 1; k < dst; k++) {
    if (!from_src[k - src]) {
      out.push_back(std::move(g.nodes[k]));
    }
  }
  out.push_back(std::move(g.nodes[dst]));
  size_t at = out.size();
  out.push_back(std::move(g.nodes[src]));
  for (size_t k = src + 1; k < dst; k++) {
    if (from_src[k - src]) {
      out.push_back(std::move(g.nodes[k]));
    }
  }
  for (size_t k = dst + 1; k < g.nodes.size(); k++) {
    out.push_back(std::move(g.nodes[k]));
  }
  g.nodes = std::move(out);
  return at;
}

// Multiplies the singlet at jn by the stabilizer of the preparation at ip
// after relocating them adjacent. Commits when the weight drops or when the
// rewritten node merges with a partner right away; the merge is applied
// immediately so the total weight strictly decreases either way.
bool try_rewrite(PauliGraph &g, size_t ip, size_t jn) {
  PauliOperator r2 = multiply(g.nodes[jn].p, g.nodes[ip].p);
  if (r2.is_identity_word()) {
    return false;  // merge rules own the deterministic pair
  }
  bool cheaper = r2.weight() < g.nodes[jn].p.weight();
  PauliGraph trial = g;
  size_t at = jn > ip ? relocate_back(trial, ip, jn)
                      : relocate_forward(trial, jn, ip);
  trial.nodes[at].p = std::move(r2);
  if (cheaper) {
    g = std::move(trial);
    return true;
  }
  for (size_t k = 0; k < trial.nodes.size(); k++) {
    if (k == at) {
      continue;
    }
    size_t a = std::min(at, k), b = std::max(at, k);
    MergeResult res = merge_nodes(trial.nodes[a], trial.nodes[b]);
    if (!res.merged && commutes_nodes(trial.nodes[a], trial.nodes[b])) {
      res = merge_nodes(trial.nodes[b], trial.nodes[a]);
    }
    if (res.merged && mergeable_position(trial, a, b)) {
      apply_merge(trial, a, b, std::move(res));
      g = std::move(trial);
      return true;
    }
  }
  return false;
}

}  // namespace

PauliGraph reduce_nodes_by_prep(PauliGraph g) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t ip = 0; ip < g.nodes.size() && !changed; ip++) {
      if (g.nodes[ip].kind != NodeKind::Preparation) {
        continue;
      }
      // Nodes with no path to or from the preparation can be placed right
      // after it, where its stabilizer acts as identity.
      std::vector<char> down = reach_from(g, ip);
      std::vector<char> up = reach_to(g, ip);
      for (size_t jn = 0; jn < g.nodes.size() && !changed; jn++) {
        if (jn == ip || down[jn] || up[jn] || !is_singlet(g.nodes[jn])) {
          continue;
        }
        changed = try_rewrite(g, ip, jn);
      }
      if (changed) {
        break;
      }
      // Direct successors tied only through the destabilizer commute with
      // the stabilizer and absorb it the same way once made adjacent.
      for (size_t jn = ip + 1; jn < g.nodes.size() && !changed; jn++) {
        if (!is_singlet(g.nodes[jn]) || !g.edge(ip, jn) ||
            commutator_form(g.nodes[ip].p, g.nodes[jn].p) ||
            !mergeable_position(g, ip, jn)) {
          continue;
        }
        changed = try_rewrite(g, ip, jn);
      }
    }
  }
  return g;
}

}  // namespace pauligraph
