#include <doctest.h>

#include "ovf/linalg.hpp"
#include "ovf/octonion.hpp"
#include "test_support.hpp"

using namespace ovf;
using testing::Rng;

namespace {
int rep(int n) { return ((n - 1) % 7) + 1; }
}  // namespace

TEST_CASE("multiplication table pins the defining products") {
  CHECK(mul(Oct::basis(1), Oct::basis(2)) == Oct::basis(4));
  CHECK(mul(Oct::basis(6), Oct::basis(7)) == Oct::basis(2));
  CHECK(mul(Oct::basis(7), Oct::basis(2)) == Oct::basis(6));
  CHECK(mul(Oct::basis(2), Oct::basis(6)) == Oct::basis(7));
  CHECK(mul(Oct::basis(3), Oct::basis(3)) == -Oct::unit());

  const MultTable& t = mult_table();
  CHECK(t.sign[1][2] == 1);
  CHECK(t.index[1][2] == 4);
  CHECK(t.sign[7][2] == 1);
  CHECK(t.index[7][2] == 6);
  for (int j = 0; j < 8; ++j) {
    CHECK(t.sign[j][0] == 1);
    CHECK(t.index[j][0] == j);
    CHECK(t.sign[0][j] == 1);
    CHECK(t.index[0][j] == j);
  }
  for (int j = 1; j < 8; ++j) {
    CHECK(t.sign[j][j] == -1);
    CHECK(t.index[j][j] == 0);
  }
}

TEST_CASE("index rule with representatives 1..7 generates the table") {
  // e_{1+i} e_{2+i} = e_{4+i} with indices reduced mod 7 into {1,...,7}.
  for (int i = 1; i <= 7; ++i) {
    CHECK(mul(Oct::basis(rep(1 + i)), Oct::basis(rep(2 + i))) ==
          Oct::basis(rep(4 + i)));
  }
}

TEST_CASE("unit element and anticommutativity") {
  Rng rng(11);
  for (int n = 0; n < 50; ++n) {
    const Oct u = rng.roct();
    CHECK(mul(Oct::unit(), u) == u);
    CHECK(mul(u, Oct::unit()) == u);
  }
  for (int i = 1; i < 8; ++i)
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      CHECK(mul(Oct::basis(i), Oct::basis(j)) == -mul(Oct::basis(j), Oct::basis(i)));
    }
}

TEST_CASE("conjugation") {
  CHECK(conj(Oct::unit()) == Oct::unit());
  CHECK(conj(Oct::basis(5)) == -Oct::basis(5));
  Rng rng(12);
  for (int n = 0; n < 50; ++n) {
    const Oct u = rng.roct();
    CHECK(conj(conj(u)) == u);
  }
}

TEST_CASE("real part") {
  CHECK(real_part(Oct::unit()) == Rational(1));
  CHECK(real_part(Oct::basis(3)) == Rational(0));
  const Oct w = Rational(3, 2) * Oct::unit() + Rational(5) * Oct::basis(2);
  CHECK(real_part(w) == Rational(3, 2));
  Rng rng(13);
  for (int n = 0; n < 50; ++n) {
    const Oct u = rng.roct();
    CHECK(Rational(2) * real_part(u) == (u + conj(u))[0]);
  }
}

TEST_CASE("inner product") {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j)
      CHECK(inner(Oct::basis(i), Oct::basis(j)) == Rational(i == j ? 1 : 0));
  Rng rng(14);
  for (int n = 0; n < 100; ++n) {
    const Oct u = rng.roct(), v = rng.roct(), w = rng.roct();
    CHECK(inner(u, v) == real_part(mul(u, conj(v))));
    CHECK(inner(u, v) == inner(v, u));
    Rational ss(0);
    for (int i = 0; i < 8; ++i) ss += u[i] * u[i];
    CHECK(inner(u, u) == ss);
    // adjoint relations for right and left multiplication
    CHECK(inner(mul(v, u), w) == inner(v, mul(w, conj(u))));
    CHECK(inner(mul(u, v), w) == inner(v, mul(conj(u), w)));
  }
}

TEST_CASE("multiplication matrices") {
  CHECK(rmul_matrix(Oct::unit()) == LinOp8::Identity());
  CHECK(lmul_matrix(Oct::unit()) == LinOp8::Identity());

  Rng rng(15);
  for (int n = 0; n < 50; ++n) {
    const Oct u = rng.roct(), v = rng.roct(), x = rng.roct();
    CHECK(Oct(rmul_matrix(u) * x.coords()) == mul(x, u));
    CHECK(Oct(lmul_matrix(u) * x.coords()) == mul(u, x));
    const LinOp8 lhs = rmul_matrix(conj(u)) * rmul_matrix(v) +
                       rmul_matrix(conj(v)) * rmul_matrix(u);
    const LinOp8 lhsL = lmul_matrix(conj(u)) * lmul_matrix(v) +
                        lmul_matrix(conj(v)) * lmul_matrix(u);
    CHECK(lhs == LinOp8(Rational(2) * inner(u, v) * LinOp8::Identity()));
    CHECK(lhsL == lhs);
  }
}

TEST_CASE("unit multiplications are rotations") {
  Rng rng(16);
  for (int n = 0; n < 25; ++n) {
    const Oct u = rng.runit();
    for (const LinOp8& m : {rmul_matrix(u), lmul_matrix(u)}) {
      CHECK(LinOp8(m.transpose() * m) == LinOp8::Identity());
      CHECK(exact_det(MatrixQ(m)) == Rational(1));
    }
  }
}

TEST_CASE("eight-factor right multiplication chain fixes 1") {
  // R_{e4} R_{conj(e5)} R_{e6} R_{conj(e7)} R_{e3} R_{conj(e2)} R_{e1}
  // R_{conj(e0)} applied to 1, rightmost first.
  LinOp8 composite = LinOp8::Identity();
  const int order[8] = {4, 5, 6, 7, 3, 2, 1, 0};
  for (int step = 0; step < 8; ++step) {
    const Oct f = Oct::basis(order[step]);
    composite = composite * rmul_matrix((step % 2 == 0) ? f : conj(f));
  }
  CHECK(Oct(composite * Oct::unit().coords()) == Oct::unit());

  Oct p = Oct::basis(0);
  for (int j = 1; j < 8; ++j) p = mul(p, Oct::basis(j));
  const bool pm1 = (p == Oct::unit()) || (p == -Oct::unit());
  CHECK(pm1);
}

TEST_CASE("Moufang identities") {
  Rng rng(17);
  for (int n = 0; n < 200; ++n) {
    const Oct u = rng.roct(), v = rng.roct(), w = rng.roct();
    const Oct uvu = mul(mul(u, v), u);
    CHECK(uvu == mul(u, mul(v, u)));  // inner bracketing irrelevant
    CHECK(mul(uvu, w) == mul(u, mul(v, mul(u, w))));
    CHECK(mul(w, uvu) == mul(mul(mul(w, u), v), u));
    CHECK(mul(mul(u, v), mul(w, u)) == mul(mul(u, mul(v, w)), u));
  }
}

TEST_CASE("alternativity") {
  Rng rng(18);
  for (int n = 0; n < 200; ++n) {
    const Oct u = rng.roct(), v = rng.roct();
    CHECK(mul(mul(u, u), v) == mul(u, mul(u, v)));
    CHECK(mul(mul(u, v), v) == mul(u, mul(v, v)));
  }
}

TEST_CASE("norm multiplicativity") {
  Rng rng(19);
  for (int n = 0; n < 200; ++n) {
    const Oct u = rng.roct(), v = rng.roct();
    CHECK(norm_sq(mul(u, v)) == norm_sq(u) * norm_sq(v));
  }
}

TEST_CASE("index product is commutative and associative") {
  for (int a = 0; a < 8; ++a) {
    CHECK(basis_index_product(0, a) == a);
    CHECK(basis_index_product(a, a) == 0);
    for (int b = 0; b < 8; ++b) {
      CHECK(basis_index_product(a, b) == basis_index_product(b, a));
      for (int c = 0; c < 8; ++c)
        CHECK(basis_index_product(basis_index_product(a, b), c) ==
              basis_index_product(a, basis_index_product(b, c)));
    }
  }
}

TEST_CASE("double precision instantiation shares the algebra") {
  const OctD a = OctD::basis(1), b = OctD::basis(2);
  CHECK(mul(a, b) == OctD::basis(4));
  CHECK(norm_sq(mul(a, b)) == 1.0);
}
