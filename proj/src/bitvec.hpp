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

#ifndef PAULIGRAPH_BITVEC_H
#define PAULIGRAPH_BITVEC_H

#include <bit>
#include <cstdint>
#include <cstddef>
#include <vector>

namespace pauligraph {

// Fixed-width bit vector over GF(2), packed into 64-bit words.
// All binary operations require equal bit counts.
class BitVec {
 public:
  BitVec() : n_bits_(0) {}
  explicit BitVec(size_t n_bits) : n_bits_(n_bits), words_((n_bits + 63) / 64, 0) {}

  size_t num_bits() const { return n_bits_; }

  bool get(size_t k) const { return (words_[k >> 6] >> (k & 63)) & 1; }
  void set(size_t k, bool v) {
    uint64_t m = uint64_t{1} << (k & 63);
    if (v) {
      words_[k >> 6] |= m;
    } else {
      words_[k >> 6] &= ~m;
    }
  }

  void xor_with(const BitVec &other) {
    for (size_t i = 0; i < words_.size(); i++) {
      words_[i] ^= other.words_[i];
    }
  }

  size_t popcount() const {
    size_t t = 0;
    for (uint64_t w : words_) {
      t += std::popcount(w);
    }
    return t;
  }

  bool any() const {
    for (uint64_t w : words_) {
      if (w) {
        return true;
      }
    }
    return false;
  }

  // Parity of |a AND b|; the word-parallel core of the symplectic form.
  static bool and_parity(const BitVec &a, const BitVec &b) {
    uint64_t acc = 0;
    for (size_t i = 0; i < a.words_.size(); i++) {
      acc ^= a.words_[i] & b.words_[i];
    }
    return std::popcount(acc) & 1;
  }

  static size_t and_popcount(const BitVec &a, const BitVec &b) {
    size_t t = 0;
    for (size_t i = 0; i < a.words_.size(); i++) {
      t += std::popcount(a.words_[i] & b.words_[i]);
    }
    return t;
  }

  bool operator==(const BitVec &other) const {
    return n_bits_ == other.n_bits_ && words_ == other.words_;
  }
  bool operator!=(const BitVec &other) const { return !(*this == other); }

  // Lexicographic by qubit index, for canonical tie-breaking only.
  bool operator<(const BitVec &other) const {
    for (size_t k = 0; k < n_bits_; k++) {
      bool a = get(k), b = other.get(k);
      if (a != b) {
        return b;
      }
    }
    return false;
  }

 private:
  size_t n_bits_;
  std::vector<uint64_t> words_;
};

}  // namespace pauligraph

#endif
