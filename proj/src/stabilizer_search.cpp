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

#include "stabilizer_search.hpp"

#include <array>
#include <limits>
#include <set>
#include <stdexcept>
#include <tuple>

namespace pauligraph {

namespace {

std::array<PauliLetter, 2> anticommuting_letters(PauliLetter l) {
  switch (l) {
    case PauliLetter::X:
      return {PauliLetter::Y, PauliLetter::Z};
    case PauliLetter::Y:
      return {PauliLetter::X, PauliLetter::Z};
    case PauliLetter::Z:
      return {PauliLetter::X, PauliLetter::Y};
    default:
      throw std::logic_error("anticommuting_letters: identity letter");
  }
}

using GateKey = std::tuple<size_t, size_t, uint8_t, uint8_t>;

Gate key_gate(const GateKey &k) {
  return Gate::tqe(static_cast<PauliLetter>(std::get<2>(k)),
                   static_cast<PauliLetter>(std::get<3>(k)), std::get<0>(k),
                   std::get<1>(k));
}

}  // namespace

std::optional<PauliLetter> agrees_on_support(const std::vector<PauliOperator> &s,
                                             size_t q) {
  PauliLetter seen = PauliLetter::I;
  for (const PauliOperator &p : s) {
    PauliLetter l = p.letter_at(q);
    if (l == PauliLetter::I) {
      continue;
    }
    if (seen == PauliLetter::I) {
      seen = l;
    } else if (seen != l) {
      return std::nullopt;
    }
  }
  return seen;
}

Gate select_tqe(const std::vector<PauliOperator> &working, const BitVec &active,
                const std::function<double(const Gate &)> &cost) {
  if (working.empty()) {
    throw std::invalid_argument("select_tqe: empty working set");
  }
  size_t n = working[0].num_qubits();
  std::vector<PauliOperator> masks;
  masks.reserve(working.size());
  size_t min_w = std::numeric_limits<size_t>::max();
  for (const PauliOperator &p : working) {
    masks.push_back(mask(p, active));
    min_w = std::min(min_w, masks.back().weight());
  }
  if (min_w < 2) {
    throw std::invalid_argument("select_tqe: masked support below two");
  }

  // Candidates: clear qubit b of a minimum element, anchored at qubit a. The
  // gate with tau equal to the letter at b and sigma anticommuting with the
  // letter at a multiplies the element by tau_b, dropping b from its support.
  std::set<GateKey> candidates;
  for (size_t e = 0; e < masks.size(); e++) {
    if (masks[e].weight() != min_w) {
      continue;
    }
    std::vector<size_t> sup = masks[e].support();
    for (size_t a : sup) {
      for (size_t b : sup) {
        if (a == b) {
          continue;
        }
        PauliLetter tb = masks[e].letter_at(b);
        for (PauliLetter sg : anticommuting_letters(masks[e].letter_at(a))) {
          if (a < b) {
            candidates.insert({a, b, static_cast<uint8_t>(sg),
                               static_cast<uint8_t>(tb)});
          } else {
            candidates.insert({b, a, static_cast<uint8_t>(tb),
                               static_cast<uint8_t>(sg)});
          }
        }
      }
    }
  }

  // Iteration order of the set is the canonical (i, j, sigma, tau) order, so
  // the first strict improvement wins ties.
  double best = std::numeric_limits<double>::infinity();
  const GateKey *pick = nullptr;
  for (const GateKey &k : candidates) {
    Gate g = key_gate(k);
    double c;
    if (cost) {
      c = cost(g);
    } else {
      PauliFrame f = gate_frame(g, n);
      size_t grew = 0;
      for (size_t e = 0; e < working.size(); e++) {
        if (mask(forward_action(f, working[e]), active).weight() >
            masks[e].weight()) {
          grew++;
        }
      }
      c = 1.0 + 0.1 * static_cast<double>(grew);
    }
    if (c < best - 1e-12) {
      best = c;
      pick = &k;
    }
  }
  if (pick == nullptr) {
    throw std::logic_error("select_tqe: no reducing gate");
  }
  return key_gate(*pick);
}

SearchResult find_stabilizers(const std::vector<PauliOperator> &s,
                              size_t n_qubits, const SearchOptions &opt) {
  for (const PauliOperator &p : s) {
    if (p.num_qubits() != n_qubits) {
      throw std::invalid_argument("find_stabilizers: qubit count mismatch");
    }
    if (!p.is_hermitian()) {
      throw std::invalid_argument("find_stabilizers: input must be Hermitian");
    }
    if (p.is_identity_word()) {
      throw std::invalid_argument("find_stabilizers: identity element in input");
    }
  }
  for (size_t i = 0; i < s.size(); i++) {
    for (size_t j = i + 1; j < s.size(); j++) {
      if (!commute(s[i], s[j])) {
        throw std::invalid_argument("find_stabilizers: input set must mutually commute");
      }
    }
  }

  // Sign duplicates carry no extra information for the search.
  std::vector<PauliOperator> work;
  for (const PauliOperator &p : s) {
    bool dup = false;
    for (const PauliOperator &w : work) {
      dup = dup || lift(w) == lift(p);
    }
    if (!dup) {
      work.push_back(p);
    }
  }

  BitVec active(n_qubits);
  for (const PauliOperator &p : work) {
    for (size_t q : p.support()) {
      active.set(q, true);
    }
  }

  Circuit c(n_qubits);
  PauliFrame acc = PauliFrame::origin(n_qubits);

  // Fixpoint pass: drop elements with no active support, measure elements
  // whose active support is a single qubit, retire unsupported qubits, and
  // (when asked) measure full support agreements.
  auto scan = [&](bool with_agreement) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (size_t e = 0; e < work.size();) {
        PauliOperator m = mask(work[e], active);
        if (m.is_identity_word()) {
          work.erase(work.begin() + e);
          changed = true;
          continue;
        }
        if (m.weight() == 1) {
          size_t q = m.support()[0];
          c.append_measurement(m.letter_at(q), q, m.sign() < 0);
          active.set(q, false);
          changed = true;
        }
        e++;
      }
      for (size_t q = 0; q < n_qubits; q++) {
        if (!active.get(q)) {
          continue;
        }
        std::optional<PauliLetter> a = agrees_on_support(work, q);
        if (a && *a == PauliLetter::I) {
          active.set(q, false);  // no remaining support, nothing to measure
          changed = true;
        } else if (with_agreement && a) {
          c.append_measurement(*a, q);
          active.set(q, false);
          changed = true;
        }
      }
    }
  };

  scan(opt.mode == SearchMode::General);
  while (!work.empty() && active.any()) {
    Gate g = select_tqe(work, active, opt.cost);
    c.append(g);
    PauliFrame fg = gate_frame(g, n_qubits);
    for (PauliOperator &p : work) {
      p = forward_action(fg, p);
    }
    acc = compose(fg, acc);
    scan(opt.mode == SearchMode::General && opt.rescan_agreement);
  }
  return {std::move(c), invert(acc)};
}

size_t max_tqe_bound(size_t n_qubits, size_t k) {
  if (k > n_qubits) {
    throw std::invalid_argument("max_tqe_bound: k exceeds qubit count");
  }
  return n_qubits * k - k * (k + 1) / 2;
}

}  // namespace pauligraph
