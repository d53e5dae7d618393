#include "doctest.h"

#include <stdexcept>

#include "pauli.hpp"
#include "test_util.hpp"

using namespace pauligraph;
using pgtest::matrices_close;
using pgtest::rand_pauli;

namespace {

PauliOperator from_letters(const std::string &s) { return parse_pauli(s); }

}  // namespace

TEST_CASE("single-qubit letters match their matrices") {
  CHECK(matrices_close(pauli_matrix(from_letters("X")), letter_matrix(PauliLetter::X)));
  CHECK(matrices_close(pauli_matrix(from_letters("Y")), letter_matrix(PauliLetter::Y)));
  CHECK(matrices_close(pauli_matrix(from_letters("Z")), letter_matrix(PauliLetter::Z)));
  CHECK(matrices_close(pauli_matrix(from_letters("I")), Matrix::Identity(2, 2)));
  CHECK(matrices_close(pauli_matrix(from_letters("-Y")), -letter_matrix(PauliLetter::Y)));
}

TEST_CASE("multiply matches dense products exhaustively on one qubit") {
  // All 16 x 16 group element pairs.
  std::vector<PauliOperator> all;
  for (int xb = 0; xb < 2; xb++) {
    for (int zb = 0; zb < 2; zb++) {
      for (int k = 0; k < 4; k++) {
        BitVec x(1), z(1);
        x.set(0, xb);
        z.set(0, zb);
        all.push_back(PauliOperator(static_cast<uint8_t>(k), x, z));
      }
    }
  }
  for (const auto &a : all) {
    for (const auto &b : all) {
      PauliOperator c = multiply(a, b);
      CHECK(matrices_close(pauli_matrix(c), pauli_matrix(a) * pauli_matrix(b)));
    }
  }
}

TEST_CASE("multiply: X*Z = -iY and XX*ZZ = -YY") {
  PauliOperator xz = multiply(from_letters("X"), from_letters("Z"));
  PauliOperator y = from_letters("Y");
  CHECK(xz.x_bits() == y.x_bits());
  CHECK(xz.z_bits() == y.z_bits());
  CHECK(xz.phase() == ((y.phase() + 3) & 3));  // -i * Y adds 3 to the exponent
  CHECK_FALSE(xz.is_hermitian());

  PauliOperator xxzz = multiply(from_letters("XX"), from_letters("ZZ"));
  CHECK(xxzz == from_letters("-YY"));
  CHECK(xxzz.is_hermitian());
  CHECK(xxzz.sign() == -1);
}

TEST_CASE("multiply matches dense products on random 3-qubit pairs") {
  pgtest::Rng rng(0x5eed0001);
  for (int it = 0; it < 200; it++) {
    PauliOperator a = rand_pauli(rng, 3);
    PauliOperator b = rand_pauli(rng, 3);
    CHECK(matrices_close(pauli_matrix(multiply(a, b)), pauli_matrix(a) * pauli_matrix(b)));
  }
}

TEST_CASE("multiply respects the commutator form") {
  pgtest::Rng rng(0x5eed0002);
  for (int it = 0; it < 200; it++) {
    PauliOperator a = rand_pauli(rng, 4);
    PauliOperator b = rand_pauli(rng, 4);
    PauliOperator ab = multiply(a, b);
    PauliOperator ba = multiply(b, a);
    if (commutator_form(a, b)) {
      CHECK(ab == ba.negated());
    } else {
      CHECK(ab == ba);
    }
  }
}

TEST_CASE("identity is neutral for multiply") {
  pgtest::Rng rng(0x5eed0003);
  for (int it = 0; it < 50; it++) {
    PauliOperator a = rand_pauli(rng, 5);
    CHECK(multiply(a, PauliOperator::identity(5)) == a);
    CHECK(multiply(PauliOperator::identity(5), a) == a);
  }
}

TEST_CASE("commutator form is alternating and bilinear") {
  pgtest::Rng rng(0x5eed0004);
  for (int it = 0; it < 200; it++) {
    PauliVector a = lift(rand_pauli(rng, 4));
    PauliVector b = lift(rand_pauli(rng, 4));
    PauliVector c = lift(rand_pauli(rng, 4));
    CHECK_FALSE(commutator_form(a, a));
    CHECK(commutator_form(a, b) == commutator_form(b, a));
    PauliVector bc = b;
    bc.add(c);
    CHECK(commutator_form(a, bc) == (commutator_form(a, b) ^ commutator_form(a, c)));
  }
}

TEST_CASE("commutator form is non-degenerate up to two qubits") {
  for (size_t n = 1; n <= 2; n++) {
    size_t dim = 1u << (2 * n);
    for (size_t code = 1; code < dim; code++) {
      PauliVector v(n);
      for (size_t q = 0; q < n; q++) {
        v.x.set(q, (code >> (2 * q)) & 1);
        v.z.set(q, (code >> (2 * q + 1)) & 1);
      }
      bool found = false;
      for (size_t other = 1; other < dim && !found; other++) {
        PauliVector w(n);
        for (size_t q = 0; q < n; q++) {
          w.x.set(q, (other >> (2 * q)) & 1);
          w.z.set(q, (other >> (2 * q + 1)) & 1);
        }
        found = commutator_form(v, w);
      }
      CHECK(found);
    }
  }
}

TEST_CASE("commute agrees with matrix commutators") {
  pgtest::Rng rng(0x5eed0005);
  for (int it = 0; it < 100; it++) {
    PauliOperator a = rand_pauli(rng, 3);
    PauliOperator b = rand_pauli(rng, 3);
    Matrix ma = pauli_matrix(a), mb = pauli_matrix(b);
    bool mat_commute = pgtest::matrix_dist(ma * mb, mb * ma) < 1e-12;
    CHECK(commute(a, b) == mat_commute);
  }
}

TEST_CASE("mask keeps phase and selected letters") {
  PauliOperator xyz = from_letters("XYZ");
  CHECK(mask(xyz, std::vector<size_t>{0, 2}) == from_letters("XIZ"));
  CHECK(mask(xyz, xyz.support()) == xyz);
  CHECK(mask(from_letters("-XYZ"), std::vector<size_t>{}) ==
        PauliOperator::phase_times_identity(3, 2));
  CHECK(mask(xyz, std::vector<size_t>{}) == PauliOperator::identity(3));
  CHECK(mask(from_letters("-ZZ"), std::vector<size_t>{1}) == from_letters("-IZ"));
}

TEST_CASE("mask composes like set intersection") {
  pgtest::Rng rng(0x5eed0006);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int it = 0; it < 100; it++) {
    PauliOperator p = rand_pauli(rng, 5);
    BitVec a(5), b(5), ab(5);
    for (size_t q = 0; q < 5; q++) {
      a.set(q, coin(rng));
      b.set(q, coin(rng));
      ab.set(q, a.get(q) && b.get(q));
    }
    CHECK(mask(mask(p, a), b) == mask(p, ab));
  }
}

TEST_CASE("hermiticity matches the adjoint in matrix form") {
  pgtest::Rng rng(0x5eed0007);
  for (int it = 0; it < 100; it++) {
    PauliOperator p = rand_pauli(rng, 3);
    Matrix m = pauli_matrix(p);
    CHECK(p.is_hermitian() == matrices_close(m, m.adjoint()));
  }
}

TEST_CASE("sign and the canonical positive form") {
  CHECK(from_letters("Y").sign() == +1);
  CHECK(from_letters("-X").sign() == -1);
  CHECK(from_letters("-YY").sign() == -1);
  CHECK_THROWS_AS(multiply(from_letters("X"), from_letters("Z")).sign(), std::invalid_argument);

  pgtest::Rng rng(0x5eed0008);
  for (int it = 0; it < 100; it++) {
    PauliOperator p = rand_pauli(rng, 4, true);
    CHECK(p.is_hermitian());
    CHECK(embed(lift(p), p.sign()) == p);
  }
}

TEST_CASE("lift discards phase; embed restores the canonical form") {
  PauliOperator y = from_letters("Y");
  PauliOperator minus_i_xz = multiply(from_letters("X"), from_letters("Z"));
  CHECK(lift(y) == lift(minus_i_xz));
  CHECK(embed(lift(y), +1) == y);
  CHECK(embed(lift(y), -1) == from_letters("-Y"));
  CHECK(embed(lift(PauliOperator::identity(2)), -1) ==
        PauliOperator::phase_times_identity(2, 2));
}

TEST_CASE("support and weight") {
  PauliOperator p = from_letters("XIZIY");
  CHECK(p.support() == std::vector<size_t>{0, 2, 4});
  CHECK(p.weight() == 3);
  CHECK(PauliOperator::identity(4).weight() == 0);
}

TEST_CASE("parse and print round-trip") {
  CHECK(to_string(from_letters("-ZZ")) == "-ZZ");
  CHECK(to_string(from_letters("XYZI")) == "XYZI");
  CHECK(parse_pauli("+XX") == parse_pauli("XX"));

  pgtest::Rng rng(0x5eed0009);
  for (int it = 0; it < 100; it++) {
    PauliOperator p = rand_pauli(rng, 6, true);
    CHECK(parse_pauli(to_string(p)) == p);
  }
}

TEST_CASE("parse rejects malformed strings") {
  CHECK_THROWS_AS(parse_pauli(""), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("-"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("XQ"), std::invalid_argument);
  CHECK_THROWS_AS(parse_pauli("XX", 3), std::invalid_argument);
  CHECK_THROWS_AS(commutator_form(parse_pauli("XX"), parse_pauli("X")), std::invalid_argument);
  CHECK_THROWS_AS(multiply(parse_pauli("XX"), parse_pauli("X")), std::invalid_argument);
}

TEST_CASE("single constructor and letter access") {
  PauliOperator p = PauliOperator::single(3, 1, PauliLetter::Y, -1);
  CHECK(p == from_letters("-IYI"));
  CHECK(p.letter_at(0) == PauliLetter::I);
  CHECK(p.letter_at(1) == PauliLetter::Y);
  CHECK_THROWS_AS(PauliOperator::single(3, 5, PauliLetter::X), std::invalid_argument);
  CHECK_THROWS_AS(PauliOperator::single(3, 0, PauliLetter::X, 2), std::invalid_argument);
}

TEST_CASE("set_letter keeps the overall sign") {
  pgtest::Rng rng(0x5eed000a);
  std::uniform_int_distribution<int> letters(0, 3);
  std::uniform_int_distribution<size_t> pos(0, 3);
  for (int it = 0; it < 200; it++) {
    PauliOperator p = rand_pauli(rng, 4, true);
    int s = p.sign();
    size_t q = pos(rng);
    auto l = static_cast<PauliLetter>(letters(rng));
    p.set_letter(q, l);
    CHECK(p.letter_at(q) == l);
    CHECK(p.is_hermitian());
    CHECK(p.sign() == s);
  }
}
