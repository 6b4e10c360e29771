#include <doctest.h>

#include "ovf/canon.hpp"
#include "ovf/linalg.hpp"
#include "ovf/spin9.hpp"
#include "test_support.hpp"

using namespace ovf;
using testing::Rng;

namespace {

MatrixQ flatten_generators(bool with_witness) {
  MatrixQ stacked(with_witness ? 37 : 36, 256);
  int row = 0;
  for (int j = 0; j <= 8; ++j)
    for (int k = j + 1; k <= 8; ++k) {
      const LinOp16 m = gen_Ijk(j, k);
      for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) stacked(row, 16 * a + b) = m(a, b);
      ++row;
    }
  if (with_witness) {
    for (int a = 0; a < 16; ++a)
      for (int b = 0; b < 16; ++b) stacked(36, 16 * a + b) = Rational(0);
    stacked(36, 16 * 0 + 8) = Rational(1);
    stacked(36, 16 * 8 + 0) = Rational(-1);
  }
  return stacked;
}

}  // namespace

TEST_CASE("generators") {
  LinOp16 i8 = LinOp16::Zero();
  for (int i = 0; i < 8; ++i) {
    i8(i, i) = Rational(1);
    i8(8 + i, 8 + i) = Rational(-1);
  }
  CHECK(gen_I(8) == i8);

  LinOp16 i0 = LinOp16::Zero();
  for (int i = 0; i < 8; ++i) {
    i0(i, 8 + i) = Rational(1);
    i0(8 + i, i) = Rational(1);
  }
  CHECK(gen_I(0) == i0);

  for (int j = 0; j <= 8; ++j) CHECK(gen_I(j) * gen_I(j) == LinOp16::Identity());
  CHECK_THROWS_AS(gen_I(9), std::out_of_range);
}

TEST_CASE("two-index generators are skew with square -id") {
  for (int j = 0; j <= 8; ++j)
    for (int k = 0; k <= 8; ++k) {
      if (j == k) continue;
      const LinOp16 m = gen_Ijk(j, k);
      CHECK(m * m == LinOp16(-LinOp16::Identity()));
      CHECK(LinOp16(m.transpose()) == LinOp16(-m));
      CHECK(gen_Ijk(k, j) == LinOp16(-m));
    }
}

TEST_CASE("commutators close with factor two") {
  // spot checks of each overlap pattern; the full sweep runs in the
  // verification suite
  auto comm = [](const LinOp16& a, const LinOp16& b) { return LinOp16(a * b - b * a); };
  CHECK(comm(gen_Ijk(0, 1), gen_Ijk(2, 3)) == LinOp16(LinOp16::Zero()));
  CHECK(comm(gen_Ijk(0, 1), gen_Ijk(0, 2)) == LinOp16(2 * gen_Ijk(1, 2)));
  CHECK(comm(gen_Ijk(0, 1), gen_Ijk(2, 0)) == LinOp16(-2 * gen_Ijk(1, 2)));
  CHECK(comm(gen_Ijk(1, 8), gen_Ijk(1, 3)) == LinOp16(-2 * gen_Ijk(8, 3)));
}

TEST_CASE("the 36 generators are linearly independent") {
  CHECK(exact_rank(flatten_generators(false)) == 36);
}

TEST_CASE("one parameter rotations") {
  const Rational c(3, 5), s(4, 5);
  CHECK(one_param(0, 8, Rational(1), Rational(0)) == LinOp16::Identity());
  CHECK(one_param(0, 8, c, s) * one_param(0, 8, c, -s) == LinOp16::Identity());
  const LinOp16 g = one_param(2, 7, c, s);
  CHECK(LinOp16(g.transpose() * g) == LinOp16::Identity());
  CHECK_THROWS_AS(one_param(0, 8, Rational(1, 2), Rational(1, 2)),
                  std::invalid_argument);
}

TEST_CASE("spin8 subgroup elements") {
  const Rational c(5, 13), s(12, 13);
  for (int j = 0; j < 4; ++j)
    for (int k = j + 1; k <= 4; ++k)
      CHECK(spin8_element(j, k, c, s) == one_param(j, k, c, s));

  const LinOp16 e = spin8_element(1, 6, c, s);
  const Eigen::Matrix<Rational, 8, 8> zero8 = Eigen::Matrix<Rational, 8, 8>::Zero();
  CHECK(e.block<8, 8>(0, 8) == zero8);
  CHECK(e.block<8, 8>(8, 0) == zero8);
  CHECK(spin8_element(2, 5, Rational(1), Rational(0)) == LinOp16::Identity());
  CHECK_THROWS_AS(spin8_element(3, 3, Rational(1), Rational(0)), std::out_of_range);
  CHECK_THROWS_AS(spin8_element(0, 8, Rational(1), Rational(0)), std::out_of_range);
}

TEST_CASE("lie derivative basics") {
  Rng rng(51);
  // trace-free skew operators kill the volume form
  MatrixQ a = MatrixQ::Zero(16, 16);
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < i; ++j) {
      a(i, j) = rng.rq();
      a(j, i) = -a(i, j);
    }
  CHECK(lie_derivative(a, det_form(16)).is_zero());

  // a diagonal operator scales the volume by its trace
  MatrixQ d = MatrixQ::Zero(16, 16);
  Rational trace(0);
  for (int i = 0; i < 16; ++i) {
    d(i, i) = rng.rq();
    trace += d(i, i);
  }
  CHECK(lie_derivative(d, det_form(16)) == trace * det_form(16));

  // derivation property on products: L_A(f ^ g) = L_A f ^ g + f ^ L_A g
  MatrixQ small = MatrixQ::Zero(6, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) small(i, j) = rng.rq();
  const ExtForm f = rng.rext(6, 2, 3), g = rng.rext(6, 1, 3);
  CHECK(lie_derivative(small, wedge(f, g)) ==
        wedge(lie_derivative(small, f), g) + wedge(f, lie_derivative(small, g)));
}

TEST_CASE("psi8 is annihilated by sampled generators") {
  const ExtForm f8 = psi8(Psi8Grouping::graded_blocks).form;
  for (const auto& jk : {std::pair<int, int>{0, 8}, {0, 1}, {3, 7}, {2, 5}, {6, 8}})
    CHECK(lie_derivative(MatrixQ(gen_Ijk(jk.first, jk.second)), f8).is_zero());
}

TEST_CASE("a plane rotation outside the algebra moves psi8") {
  CHECK(exact_rank(flatten_generators(true)) == 37);
  MatrixQ witness = MatrixQ::Zero(16, 16);
  witness(0, 8) = Rational(1);
  witness(8, 0) = Rational(-1);
  CHECK(!lie_derivative(witness, psi8(Psi8Grouping::graded_blocks).form).is_zero());
}

TEST_CASE("pullback") {
  Rng rng(52);
  const int d = 6;
  for (int n = 0; n < 15; ++n) {
    MatrixQ g(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) g(i, j) = rng.rq();
    const ExtForm phi = rng.rext(d, 2, 3), psi = rng.rext(d, 1, 3);
    CHECK(pullback(g, wedge(phi, psi)) == wedge(pullback(g, phi), pullback(g, psi)));
    CHECK(pullback(MatrixQ(MatrixQ::Identity(d, d)), phi) == phi);
  }

  const ExtForm f8 = psi8(Psi8Grouping::graded_blocks).form;
  CHECK(pullback(MatrixQ(one_param(0, 8, Rational(3, 5), Rational(4, 5))), f8) == f8);
  CHECK(pullback(MatrixQ(spin8_element(0, 1, Rational(3, 5), Rational(4, 5))), f8) == f8);
}

TEST_CASE("projection onto the pure x block") {
  const Psi8Blocks b = psi8_blocks();
  CHECK(project_80(b.psi08).is_zero());
  CHECK(project_80(b.psi80) == b.psi80);

  const Rational c(3, 5), s(4, 5);
  const MatrixQ g = MatrixQ(one_param(0, 8, c, s));
  const Rational c2 = c * c, s2 = s * s;
  CHECK(project_80(pullback(g, b.psi62)) == c2 * c2 * c2 * s2 * b.psi80);
}

TEST_CASE("perturbed block weights break invariance") {
  const Psi8Blocks b = psi8_blocks();
  ExtForm perturbed = b.psi80;
  perturbed += Rational(4) * b.psi62;
  perturbed += Rational(6) * b.psi44;
  perturbed += Rational(4) * b.psi26;
  perturbed += Rational(2) * b.psi08;
  const MatrixQ g = MatrixQ(one_param(0, 8, Rational(3, 5), Rational(4, 5)));
  CHECK(!(pullback(g, perturbed) == perturbed));
}

TEST_CASE("generator two-forms") {
  for (int i = 0; i <= 8; ++i) CHECK(omega_form(i, i).form.is_zero());
  const Omega2 w08 = omega_form(0, 8);
  CHECK(w08.form.term_count() == 8);
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) {
      if (i == j) continue;
      const Omega2 w = omega_form(i, j);
      CHECK(w.form.term_count() == 8);
      for (const auto& [m, c] : w.form.terms()) CHECK(abs(c) == Rational(1));
      CHECK(w.form == -omega_form(j, i).form);
    }
}

TEST_CASE("generator two-forms evaluate as the bilinear maps") {
  Rng rng(53);
  for (const auto& ij : {std::pair<int, int>{0, 8}, {1, 5}, {7, 8}, {2, 3}}) {
    const Omega2 w = omega_form(ij.first, ij.second);
    const LinOp16 m = gen_Ijk(ij.first, ij.second);
    for (int n = 0; n < 10; ++n) {
      const VectorQ u = rng.rvec(16), v = rng.rvec(16);
      const std::vector<VectorQ> args = {u, v};
      const Rational bilinear = (u.transpose() * (m * v))(0, 0);
      CHECK(evaluate(w.form, args) == bilinear);
    }
  }
}
