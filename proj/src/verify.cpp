#include "ovf/verify.hpp"

#include <cmath>
#include <ostream>
#include <random>
#include <stdexcept>

#include "ovf/berger.hpp"
#include "ovf/canon.hpp"
#include "ovf/io.hpp"
#include "ovf/linalg.hpp"
#include "ovf/octoform.hpp"
#include "ovf/spin9.hpp"

namespace ovf {

namespace {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  int geti(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

  Rational rq() { return Rational(geti(-9, 9), geti(1, 9)); }

  Oct roct() {
    Oct u;
    for (int i = 0; i < 8; ++i) u[i] = rq();
    return u;
  }

  Oct rquat() {
    Oct u;
    for (int i : {0, 1, 2, 4}) u[i] = rq();
    return u;
  }

  // Exact unit octonion: a Pythagorean pair on two random slots.
  Oct runit() {
    static const int pats[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {20, 21, 29}};
    const auto& pat = pats[geti(0, 3)];
    Rational c(pat[0], pat[2]);
    Rational s(pat[1], pat[2]);
    if (geti(0, 1)) c = -c;
    if (geti(0, 1)) s = -s;
    const int a = geti(0, 7);
    int b = geti(0, 7);
    while (b == a) b = geti(0, 7);
    Oct u;
    u[a] = c;
    u[b] = s;
    return u;
  }

  Mask rmask(int dim, int degree) {
    Mask m = 0;
    while (mask_degree(m) < degree) m |= Mask(1) << geti(0, dim - 1);
    return m;
  }

  ExtForm rext(int dim, int degree, int nterms) {
    ExtForm f(dim, degree);
    for (int t = 0; t < nterms; ++t) f.add_term(rmask(dim, degree), rq());
    return f;
  }

  OctForm roform(int dim, int degree, int nterms) {
    OctForm f(dim, degree);
    for (int t = 0; t < nterms; ++t) f.add_term(rmask(dim, degree), roct());
    return f;
  }

  OctForm rqform(int dim, int degree, int nterms) {
    OctForm f(dim, degree);
    for (int t = 0; t < nterms; ++t) f.add_term(rmask(dim, degree), rquat());
    return f;
  }

  VectorQ rvec(int dim) {
    VectorQ v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rq();
    return v;
  }
};

void add(std::vector<CheckResult>& out, std::string name, bool pass,
         std::string detail = "") {
  out.push_back({std::move(name), pass, std::move(detail)});
}

MatrixQ swap_xy16() {
  MatrixQ s = MatrixQ::Zero(16, 16);
  for (int i = 0; i < 8; ++i) {
    s(i, 8 + i) = Rational(1);
    s(8 + i, i) = Rational(1);
  }
  return s;
}

bool pure_bidegree(const ExtForm& f, int k, int l) {
  for (const auto& [m, c] : f.terms())
    if (mask_degree(m & 0xFFu) != k || mask_degree(m >> 8) != l) return false;
  return true;
}

// ---------------------------------------------------------------- algebra --

std::vector<CheckResult> suite_algebra() {
  std::vector<CheckResult> out;
  Rng rng(0x5eed0001);

  {
    bool ok = mul(Oct::basis(1), Oct::basis(2)) == Oct::basis(4) &&
              mul(Oct::basis(6), Oct::basis(7)) == Oct::basis(2) &&
              mul(Oct::basis(7), Oct::basis(2)) == Oct::basis(6) &&
              mul(Oct::basis(2), Oct::basis(6)) == Oct::basis(7) &&
              mul(Oct::basis(3), Oct::basis(3)) == -Oct::unit();
    const MultTable& t = mult_table();
    ok = ok && t.sign[1][2] == 1 && t.index[1][2] == 4;
    ok = ok && t.sign[7][2] == 1 && t.index[7][2] == 6;
    for (int j = 0; j < 8; ++j)
      ok = ok && t.sign[j][0] == 1 && t.index[j][0] == j && t.sign[0][j] == 1 &&
           t.index[0][j] == j;
    for (int n = 0; n < 64; ++n) {
      const Oct u = rng.roct();
      ok = ok && mul(Oct::unit(), u) == u && mul(u, Oct::unit()) == u;
    }
    add(out, "multiplication table matches the defining products", ok);
  }
  {
    bool ok = conj(Oct::unit()) == Oct::unit() && conj(Oct::basis(5)) == -Oct::basis(5);
    for (int n = 0; n < 64; ++n) {
      const Oct u = rng.roct();
      ok = ok && conj(conj(u)) == u;
    }
    add(out, "conjugation is the involution fixing the real line", ok);
  }
  {
    bool ok = true;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        ok = ok && inner(Oct::basis(i), Oct::basis(j)) == Rational(i == j ? 1 : 0);
    for (int n = 0; n < 64; ++n) {
      const Oct u = rng.roct(), v = rng.roct();
      ok = ok && inner(u, v) == real_part(mul(u, conj(v)));
      Rational ss(0);
      for (int i = 0; i < 8; ++i) ss += u[i] * u[i];
      ok = ok && norm_sq(u) == ss;
      ok = ok && real_part(u) == (u + conj(u))[0] * Rational(1, 2);
    }
    Oct w = Rational(3, 2) * Oct::unit() + Rational(5) * Oct::basis(2);
    ok = ok && real_part(w) == Rational(3, 2);
    add(out, "inner product is Re(u conj(v)) and the basis is orthonormal", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n < 300 && ok; ++n) {
      const Oct u = rng.roct(), v = rng.roct(), w = rng.roct();
      const Oct uvu = mul(mul(u, v), u);
      ok = ok && mul(uvu, w) == mul(u, mul(v, mul(u, w)));
      ok = ok && mul(w, uvu) == mul(mul(mul(w, u), v), u);
      ok = ok && mul(mul(u, v), mul(w, u)) == mul(mul(u, mul(v, w)), u);
      ok = ok && mul(mul(u, v), u) == mul(u, mul(v, u));
    }
    add(out, "Moufang identities hold on random rational triples", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n < 300 && ok; ++n) {
      const Oct u = rng.roct(), v = rng.roct();
      ok = ok && mul(mul(u, u), v) == mul(u, mul(u, v));
      ok = ok && mul(mul(u, v), v) == mul(u, mul(v, v));
    }
    add(out, "alternativity: two generators associate", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n < 300 && ok; ++n) {
      const Oct u = rng.roct(), v = rng.roct();
      ok = ok && norm_sq(mul(u, v)) == norm_sq(u) * norm_sq(v);
    }
    add(out, "norm multiplicativity |uv|^2 = |u|^2 |v|^2", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n < 200 && ok; ++n) {
      const Oct u = rng.roct(), v = rng.roct(), w = rng.roct();
      ok = ok && inner(mul(v, u), w) == inner(v, mul(w, conj(u)));
      ok = ok && inner(mul(u, v), w) == inner(v, mul(conj(u), w));
    }
    add(out, "right/left multiplications are adjoint to conjugated ones", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n < 100 && ok; ++n) {
      const Oct u = rng.roct(), v = rng.roct();
      const LinOp8 lhs = rmul_matrix(conj(u)) * rmul_matrix(v) +
                         rmul_matrix(conj(v)) * rmul_matrix(u);
      const LinOp8 lhsL = lmul_matrix(conj(u)) * lmul_matrix(v) +
                          lmul_matrix(conj(v)) * lmul_matrix(u);
      const LinOp8 rhs = Rational(2) * inner(u, v) * LinOp8::Identity();
      ok = ok && lhs == rhs && lhsL == rhs;
    }
    add(out, "composition relation R/L form of the polarized norm identity", ok);
  }
  {
    bool ok = rmul_matrix(Oct::unit()) == LinOp8::Identity() &&
              lmul_matrix(Oct::unit()) == LinOp8::Identity();
    for (int n = 0; n < 50 && ok; ++n) {
      const Oct u = rng.runit();
      for (const LinOp8& m : {rmul_matrix(u), lmul_matrix(u)}) {
        ok = ok && m.transpose() * m == LinOp8::Identity();
        ok = ok && exact_det(MatrixQ(m)) == Rational(1);
      }
    }
    add(out, "unit multiplications are rotations (orthogonal, det +1)", ok);
  }
  {
    // The composite R_{e4} R_{conj(e5)} R_{e6} R_{conj(e7)} R_{e3}
    // R_{conj(e2)} R_{e1} R_{conj(e0)} applied to 1; rightmost acts first.
    Oct x = Oct::unit();
    const int order[8] = {0, 1, 2, 3, 7, 6, 5, 4};
    for (int step = 0; step < 8; ++step) {
      const Oct f = Oct::basis(order[step]);
      x = mul(x, (step % 2 == 0) ? conj(f) : f);
    }
    bool ok = x == Oct::unit();
    // Product of all eight basis elements in this fixed order is +-1.
    Oct p = Oct::basis(0);
    for (int j = 1; j < 8; ++j) p = mul(p, Oct::basis(j));
    ok = ok && (p == Oct::unit() || p == -Oct::unit());
    add(out, "eight-factor right-multiplication chain fixes 1", ok);
  }
  return out;
}

// --------------------------------------------------------------- octoform --

std::vector<CheckResult> suite_octoform() {
  std::vector<CheckResult> out;
  Rng rng(0x5eed0002);

  {
    const OctForm a = OctForm::term(16, mask_of({0}), Oct::basis(1));
    const OctForm b = OctForm::term(16, mask_of({1}), Oct::basis(2));
    bool ok = owedge(a, b) == OctForm::term(16, mask_of({0, 1}), Oct::basis(4));
    const ExtForm phi = rng.rext(8, 1, 3), psi = rng.rext(8, 2, 3);
    ok = ok && oreal(owedge(embed(phi), embed(psi))) == wedge(phi, psi);
    add(out, "wedge multiplies coefficients and extends the real wedge", ok);
  }
  {
    const OctForm f1 = OctForm::term(8, mask_of({0}), Oct::basis(1));
    const OctForm f2 = OctForm::term(8, mask_of({1}), Oct::basis(2));
    const OctForm f3 = OctForm::term(8, mask_of({2}), Oct::basis(7));
    bool ok = owedge(owedge(f1, f2), f3) == -owedge(f1, owedge(f2, f3));
    add(out, "associativity fails with the expected sign on (e1,e2,e7)", ok);
  }
  {
    bool ok = true;
    for (int k = 1; k <= 2; ++k)
      for (int l = 1; l <= 2; ++l)
        for (int n = 0; n < 40 && ok; ++n) {
          const OctForm a = rng.roform(6, k, 3), b = rng.roform(6, l, 3);
          OctForm rhs = owedge(obar(b), obar(a));
          if ((k * l) % 2) rhs = -rhs;
          ok = ok && obar(owedge(a, b)) == rhs;
        }
    add(out, "conjugation reverses wedge with the graded sign", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n < 100 && ok; ++n) {
      const Oct u = rng.roct(), v = rng.roct();
      const ExtForm phi = rng.rext(8, 1, 2), psi = rng.rext(8, 2, 2);
      ok = ok && oreal(owedge(tensor(u, phi), obar(tensor(v, psi)))) ==
                     inner(u, v) * wedge(phi, psi);
    }
    add(out, "Re(u phi ^ conj(v psi)) = <u,v> phi ^ psi", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n < 100 && ok; ++n) {
      const OctForm a = rng.roform(6, 2, 3), b = rng.roform(6, 2, 3);
      ok = ok && oreal(owedge(a, obar(b))) == oreal(owedge(obar(a), b));
    }
    add(out, "Re(a ^ conj(b)) = Re(conj(a) ^ b)", ok);
  }
  {
    const OctForm dx = coord_dx(), dy = coord_dy();
    bool ok = dx.term_count() == 8 && dy.term_count() == 8;
    for (int i = 0; i < 8 && ok; ++i)
      ok = dx.coeff(Mask(1) << i) == Oct::basis(i) &&
           dy.coeff(Mask(1) << (8 + i)) == Oct::basis(i);
    for (int n = 0; n < 20 && ok; ++n) {
      const VectorQ v = rng.rvec(16);
      Oct u1, u2;
      for (int i = 0; i < 8; ++i) {
        u1[i] = v[i];
        u2[i] = v[8 + i];
      }
      const VectorQ args[1] = {v};
      ok = ok && evaluate(dx, args) == u1 && evaluate(dy, args) == u2 &&
           evaluate(obar(dx), args) == conj(u1);
    }
    for (int i = 1; i <= 2 && ok; ++i) {
      const OctForm dw = coord_dw(i, 2);
      ok = dw.term_count() == 4;
      const VectorQ v = rng.rvec(8);
      Oct ui;
      static constexpr int kQuatBasis[4] = {0, 1, 2, 4};
      for (int t = 0; t < 4; ++t) ui += v[4 * (i - 1) + t] * Oct::basis(kQuatBasis[t]);
      const VectorQ args[1] = {v};
      ok = ok && evaluate(dw, args) == ui;
    }
    add(out, "coordinate forms evaluate to block components", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n < 50 && ok; ++n) {
      const OctForm a = rng.roform(8, 2, 3);
      ok = ok && apply_linear(LinOp8::Identity(), a) == a;
      const Oct u = rng.roct(), v = rng.roct();
      const LinOp8 comp = rmul_matrix(conj(u)) * rmul_matrix(v) +
                          rmul_matrix(conj(v)) * rmul_matrix(u);
      ok = ok && apply_linear(comp, a) == Rational(2) * inner(u, v) * a;
    }
    add(out, "linear operators extend coefficient-wise", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n < 50 && ok; ++n) {
      const OctForm a = rng.rqform(6, 1, 2), b = rng.rqform(6, 1, 2),
                    c = rng.rqform(6, 2, 2);
      ok = ok && is_quaternionic(owedge(a, b));
      ok = ok && owedge(owedge(a, b), c) == owedge(a, owedge(b, c));
    }
    for (int i = 1; i <= 2 && ok; ++i)
      for (int j = 1; j <= 2 && ok; ++j)
        ok = is_quaternionic(owedge(obar(coord_dw(i, 2)), coord_dw(j, 2)));
    add(out, "H-valued forms close under wedge and associate", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n < 100 && ok; ++n) {
      const OctForm a = rng.rqform(6, rng.geti(1, 2), 3);
      OctForm lhs(a.dim(), a.degree());
      for (int g : {1, 2, 4}) {
        const Oct e = Oct::basis(g);
        lhs += apply_linear(rmul_matrix(e) * lmul_matrix(e), a);
      }
      ok = ok && lhs == -a - Rational(2) * obar(a);
    }
    add(out, "sum of R_g L_g over imaginary quaternion units is -id - 2 conj", ok);
  }
  return out;
}

// ---------------------------------------------------------------- kraines --

std::vector<CheckResult> suite_kraines() {
  std::vector<CheckResult> out;
  Rng rng(0x5eed0003);

  {
    bool ok = true;
    for (int n = 1; n <= 3; ++n) ok = ok && kraines_standard(n) == kraines_octonionic(n);
    add(out, "standard and coordinate-form constructions agree for n = 1,2,3", ok);
  }
  {
    const ExtForm k1 = kraines_standard(1);
    add(out, "the n = 1 form is -6 times the volume form",
        k1 == Rational(-6) * det_form(4));
  }
  {
    // The bilinear maps (u,v) -> sum_i <u_i e_g, v_i> on H^2 are
    // antisymmetric, i.e. genuinely 2-forms.
    static constexpr int kQ[4] = {0, 1, 2, 4};
    auto omega_direct = [](int g, const VectorQ& u, const VectorQ& v) {
      Rational total(0);
      for (int block = 0; block < 2; ++block) {
        Oct ub, vb;
        for (int t = 0; t < 4; ++t) {
          ub[kQ[t]] = u[4 * block + t];
          vb[kQ[t]] = v[4 * block + t];
        }
        total += inner(mul(ub, Oct::basis(g)), vb);
      }
      return total;
    };
    bool ok = true;
    for (int g : {1, 2, 4})
      for (int trial = 0; trial < 30 && ok; ++trial) {
        const VectorQ u = rng.rvec(8), v = rng.rvec(8);
        ok = omega_direct(g, u, v) == -omega_direct(g, v, u);
      }
    add(out, "the three structure bilinear maps are antisymmetric", ok);
  }
  {
    const OctForm dw1 = coord_dw(1, 1);
    const OctForm omega11 = owedge(dw1, obar(dw1));
    add(out, "the (1,1) coordinate pairing squares to a real 4-form",
        is_real(owedge(omega11, obar(omega11))));
  }
  return out;
}

// ----------------------------------------------------------- calibrations --

std::vector<CheckResult> suite_calibrations() {
  std::vector<CheckResult> out;

  const ExtForm phi4 = cayley();
  {
    bool ok = phi4.term_count() == 14;
    for (const auto& [m, c] : phi4.terms()) ok = ok && abs(c) == Rational(1);
    add(out, "Cayley calibration has 14 terms, all +-1", ok);
  }
  add(out, "Cayley calibration is self-dual", hodge_star(phi4) == phi4);
  {
    VectorQ args[4];
    const int plane[4] = {0, 1, 2, 4};
    for (int t = 0; t < 4; ++t) {
      args[t] = VectorQ::Zero(8);
      args[t][plane[t]] = Rational(1);
    }
    const Rational v = evaluate(phi4, args);
    add(out, "Cayley calibration is +-1 on the quaternionic 4-plane",
        abs(v) == Rational(1));
  }

  const ExtForm phi3 = associative();
  {
    bool ok = phi3.term_count() == 7;
    for (const auto& [m, c] : phi3.terms()) ok = ok && abs(c) == Rational(1);
    add(out, "associative calibration has 7 terms, all +-1", ok);
  }
  {
    // phi(e_i, e_j, e_k) = eps * Re((e_i e_j) e_k) for a single global eps.
    int eps = 0;
    bool ok = true;
    for (int i = 1; i <= 7 && ok; ++i)
      for (int j = i + 1; j <= 7 && ok; ++j)
        for (int k = j + 1; k <= 7 && ok; ++k) {
          VectorQ args[3];
          const int idx[3] = {i, j, k};
          for (int t = 0; t < 3; ++t) {
            args[t] = VectorQ::Zero(7);
            args[t][idx[t] - 1] = Rational(1);
          }
          const Rational lhs = evaluate(phi3, args);
          const Rational rhs = real_part(mul(mul(Oct::basis(i), Oct::basis(j)), Oct::basis(k)));
          if (rhs.is_zero()) {
            ok = lhs.is_zero();
          } else if (eps == 0) {
            eps = (lhs == rhs) ? 1 : ((lhs == -rhs) ? -1 : 0);
            ok = eps != 0;
          } else {
            ok = lhs == Rational(eps) * rhs;
          }
        }
    add(out, "associative calibration matches the structure constants", ok && eps != 0);
  }
  {
    bool ok = kaehler(1) == ExtForm::term(2, mask_of({0, 1}), Rational(1));
    const ExtForm w2 = kaehler(2);
    ok = ok && Rational(1, 2) * wedge(w2, w2) == det_form(4);
    add(out, "Kaehler form in real coordinates with unit volume power", ok);
  }
  return out;
}

// ------------------------------------------------------------------- psi8 --

std::vector<CheckResult> suite_psi8() {
  std::vector<CheckResult> out;
  Rng rng(0x5eed0004);

  const PsiComponents p = psi_components();
  const ExtForm det1 = ExtForm::term(16, 0xFFu, Rational(1));
  const ExtForm det2 = ExtForm::term(16, 0xFF00u, Rational(1));

  add(out, "psi40 pairing is 8! times the x-block volume",
      real_checked(owedge(p.psi40, obar(p.psi40))) == Rational(40320) * det1);
  add(out, "psi04 pairing is 8! times the y-block volume",
      real_checked(owedge(p.psi04, obar(p.psi04))) == Rational(40320) * det2);
  add(out, "Re(psi40 ^ psi40) = -3/5 of the pairing",
      oreal(owedge(p.psi40, p.psi40)) == Rational(-3, 5) * Rational(40320) * det1);

  const ExtForm f8 = psi8(Psi8Grouping::graded_blocks).form;
  add(out, "psi8 has 702 terms and coefficient 8! on the x block",
      f8.term_count() == 702 && f8.coeff(0xFFu) == Rational(40320));
  add(out, "both groupings produce the identical form",
      psi8(Psi8Grouping::component_products).form == f8);
  {
    const ExtForm scaled = scaled_psi8();
    bool ok = scaled.term_count() == 702;
    for (const auto& [m, c] : scaled.terms())
      ok = ok && (c == Rational(-14) || abs(c) == Rational(2) || abs(c) == Rational(1));
    ok = ok && scaled.coeff(0xFFu) == Rational(-14) &&
         scaled.coeff(0xFF00u) == Rational(-14);
    add(out, "scaled form has integer coefficients in {-14,-2,-1,1,2}", ok);
  }
  {
    static const long expected[11] = {1, 28, 84, 14, 56, 336, 56, 14, 84, 28, 1};
    const Table3Report report = classify_table3(scaled_psi8());
    bool ok = report.total == 702;
    for (int r = 0; r < 11; ++r) ok = ok && report.rows[r].count == expected[r];
    add(out, "structural classification counts match", ok);
  }
  {
    const Psi8Blocks b = psi8_blocks();
    bool ok = pure_bidegree(b.psi80, 8, 0) && pure_bidegree(b.psi62, 6, 2) &&
              pure_bidegree(b.psi44, 4, 4) && pure_bidegree(b.psi26, 2, 6) &&
              pure_bidegree(b.psi08, 0, 8);
    const MatrixQ swap = swap_xy16();
    ok = ok && pullback(swap, b.psi62) == b.psi26 && pullback(swap, b.psi26) == b.psi62;
    ok = ok && pullback(swap, b.psi44) == b.psi44;
    ok = ok && pullback(swap, f8) == f8;
    add(out, "graded blocks have pure bidegree and swap as expected", ok);
  }
  {
    bool ok = true;
    for (int trial = 0; trial < 8 && ok; ++trial) {
      const Oct u = rng.runit();
      const LinOp8 ru = rmul_matrix(u), rub = rmul_matrix(conj(u));
      OctForm a[8] = {rng.roform(8, 1, 2), rng.roform(8, 1, 2), rng.roform(8, 1, 2),
                      rng.roform(8, 1, 2), rng.roform(8, 1, 2), rng.roform(8, 1, 2),
                      rng.roform(8, 1, 2), rng.roform(8, 1, 2)};
      const OctForm base1 = quad_wedge(a[0], a[1], a[2], a[3]);
      const OctForm base2 = quad_wedge(a[4], a[5], a[6], a[7]);
      const OctForm rot1 = quad_wedge(apply_linear(ru, a[0]), apply_linear(rub, a[1]),
                                      apply_linear(rub, a[2]), apply_linear(rub, a[3]));
      const OctForm rot2 = quad_wedge(apply_linear(ru, a[4]), apply_linear(rub, a[5]),
                                      apply_linear(rub, a[6]), apply_linear(rub, a[7]));
      ok = ok && oreal(owedge(rot1, obar(rot2))) == oreal(owedge(base1, obar(base2)));
      const OctForm rot2m = quad_wedge(apply_linear(rub, a[4]), apply_linear(ru, a[5]),
                                       apply_linear(ru, a[6]), apply_linear(ru, a[7]));
      ok = ok && oreal(owedge(rot1, rot2m)) == oreal(owedge(base1, base2));
    }
    add(out, "unit rotations of the quadruple wedge preserve the real pairings", ok);
  }
  return out;
}

// ------------------------------------------------------------------ spin9 --

using MatI = Eigen::Matrix<long, 16, 16>;

MatI to_int(const LinOp16& m) {
  MatI r;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) r(i, j) = m(i, j).to_long();
  return r;
}

std::vector<CheckResult> suite_spin9() {
  std::vector<CheckResult> out;
  Rng rng(0x5eed0005);

  {
    bool ok = gen_I(8) * gen_I(8) == LinOp16::Identity();
    ok = ok && gen_I(0) == [] {
      LinOp16 m = LinOp16::Zero();
      for (int i = 0; i < 8; ++i) {
        m(i, 8 + i) = Rational(1);
        m(8 + i, i) = Rational(1);
      }
      return m;
    }();
    for (int j = 0; j <= 8 && ok; ++j) {
      ok = gen_I(j) * gen_I(j) == LinOp16::Identity();
      for (int k = 0; k <= 8 && ok; ++k) {
        if (j == k) continue;
        const LinOp16 ijk = gen_Ijk(j, k);
        ok = ijk * ijk == LinOp16(-LinOp16::Identity());
        ok = ok && LinOp16(ijk.transpose()) == LinOp16(-ijk);
        ok = ok && gen_Ijk(k, j) == LinOp16(-ijk);
      }
    }
    add(out, "generator squares, skewness and antisymmetry", ok);
  }
  {
    // All entries are exact small integers, so the sweep runs on plain
    // integer matrices converted from the exact generators.
    std::vector<MatI> gens(81);
    for (int j = 0; j <= 8; ++j)
      for (int k = 0; k <= 8; ++k) gens[9 * j + k] = to_int(gen_Ijk(j, k));
    const auto I = [&gens](int j, int k) -> const MatI& { return gens[9 * j + k]; };
    bool ok = true;
    long checked = 0;
    for (int j = 0; j <= 8 && ok; ++j)
      for (int k = 0; k <= 8 && ok; ++k)
        for (int l = 0; l <= 8 && ok; ++l)
          for (int m = 0; m <= 8 && ok; ++m) {
            const MatI comm = I(j, k) * I(l, m) - I(l, m) * I(j, k);
            MatI expect = MatI::Zero();
            if (j == k || l == m) {
              // I_jj = id commutes with everything.
            } else if ((j == l && k == m) || (j == m && k == l)) {
              // the same element up to sign
            } else if (j != l && j != m && k != l && k != m) {
              // disjoint pairs commute
            } else if (j == l) {
              expect = 2 * I(k, m);
            } else if (j == m) {
              expect = -2 * I(k, l);
            } else if (k == l) {
              expect = -2 * I(j, m);
            } else {  // k == m
              expect = 2 * I(j, l);
            }
            ok = comm == expect;
            ++checked;
          }
    add(out, "commutation table over all 6561 index combinations", ok,
        std::to_string(checked) + " combinations");
  }
  {
    MatrixQ stacked(36, 256);
    int row = 0;
    for (int j = 0; j <= 8; ++j)
      for (int k = j + 1; k <= 8; ++k) {
        const LinOp16 m = gen_Ijk(j, k);
        for (int a = 0; a < 16; ++a)
          for (int b = 0; b < 16; ++b) stacked(row, 16 * a + b) = m(a, b);
        ++row;
      }
    add(out, "the 36 generators are linearly independent",
        exact_rank(stacked) == 36);
  }
  {
    bool ok = true;
    for (int i = 0; i <= 8 && ok; ++i) {
      ok = omega_form(i, i).form.is_zero();
      for (int j = 0; j <= 8 && ok; ++j) {
        if (i == j) continue;
        const Omega2 w = omega_form(i, j);
        ok = w.form.term_count() == 8;
        for (const auto& [m, c] : w.form.terms()) ok = ok && abs(c) == Rational(1);
        ok = ok && w.form == -omega_form(j, i).form;
      }
    }
    add(out, "generator 2-forms: zero diagonal, 8 terms +-1, antisymmetric", ok);
  }
  {
    const Rational c(3, 5), s(4, 5);
    bool ok = one_param(0, 8, Rational(1), Rational(0)) == LinOp16::Identity();
    ok = ok && one_param(0, 8, c, s) * one_param(0, 8, c, -s) == LinOp16::Identity();
    const LinOp16 g = one_param(0, 8, c, s);
    ok = ok && LinOp16(g.transpose() * g) == LinOp16::Identity();
    const Eigen::Matrix<Rational, 8, 8> zero8 = Eigen::Matrix<Rational, 8, 8>::Zero();
    for (int j = 0; j < 3 && ok; ++j)
      for (int k = j + 1; k <= 3 && ok; ++k) {
        ok = spin8_element(j, k, c, s) == one_param(j, k, c, s);
        const LinOp16 e = spin8_element(j, k, c, s);
        ok = ok && e.block<8, 8>(0, 8) == zero8 && e.block<8, 8>(8, 0) == zero8;
      }
    ok = ok && spin8_element(2, 5, Rational(1), Rational(0)) == LinOp16::Identity();
    bool threw = false;
    try {
      one_param(0, 8, Rational(1, 2), Rational(1, 2));
    } catch (const std::invalid_argument&) {
      threw = true;
    }
    add(out, "one-parameter rotations: identity, inverse, orthogonality", ok && threw);
  }

  const ExtForm f8 = psi8(Psi8Grouping::graded_blocks).form;
  {
    bool ok = true;
    int count = 0;
    for (int j = 0; j <= 8 && ok; ++j)
      for (int k = j + 1; k <= 8 && ok; ++k) {
        ok = lie_derivative(MatrixQ(gen_Ijk(j, k)), f8).is_zero();
        ++count;
      }
    add(out, "all 36 infinitesimal generators annihilate psi8", ok,
        std::to_string(count) + " generators");
  }
  {
    MatrixQ witness = MatrixQ::Zero(16, 16);
    witness(0, 8) = Rational(1);
    witness(8, 0) = Rational(-1);
    MatrixQ stacked(37, 256);
    int row = 0;
    for (int j = 0; j <= 8; ++j)
      for (int k = j + 1; k <= 8; ++k) {
        const LinOp16 m = gen_Ijk(j, k);
        for (int a = 0; a < 16; ++a)
          for (int b = 0; b < 16; ++b) stacked(row, 16 * a + b) = m(a, b);
        ++row;
      }
    for (int a = 0; a < 16; ++a)
      for (int b = 0; b < 16; ++b) stacked(36, 16 * a + b) = witness(a, b);
    const bool outside = exact_rank(stacked) == 37;
    const bool nonzero = !lie_derivative(witness, f8).is_zero();
    add(out, "a rotation outside the algebra moves psi8", outside && nonzero);
  }
  {
    static const int pairs[][2] = {{0, 8}, {1, 8}, {7, 8}, {0, 1}, {0, 7}, {1, 2},
                                   {2, 3}, {3, 4}, {5, 6}, {6, 7}, {2, 5}};
    bool ok = true;
    for (const auto& jk : pairs) {
      ok = ok && pullback(MatrixQ(one_param(jk[0], jk[1], Rational(3, 5), Rational(4, 5))), f8) == f8;
    }
    ok = ok && pullback(MatrixQ(one_param(0, 8, Rational(5, 13), Rational(12, 13))), f8) == f8;
    add(out, "finite rotations fix psi8 (11 generator pairs)", ok);
  }
  {
    bool ok = true;
    for (int n = 0; n < 20 && ok; ++n) {
      const int d = 6;
      MatrixQ g(d, d);
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) g(a, b) = rng.rq();
      const ExtForm phi = rng.rext(d, 2, 3), psi = rng.rext(d, 1, 3);
      ok = pullback(g, wedge(phi, psi)) == wedge(pullback(g, phi), pullback(g, psi));
      ok = ok && pullback(MatrixQ(MatrixQ::Identity(d, d)), phi) == phi;
    }
    add(out, "pullback is multiplicative over the wedge", ok);
  }
  {
    const Psi8Blocks blocks = psi8_blocks();
    const ExtForm* levels[5] = {&blocks.psi80, &blocks.psi62, &blocks.psi44,
                                &blocks.psi26, &blocks.psi08};
    bool ok = project_80(blocks.psi08).is_zero() && project_80(blocks.psi80) == blocks.psi80;
    for (const auto& [c, s] : {std::pair<Rational, Rational>{Rational(3, 5), Rational(4, 5)},
                               {Rational(5, 13), Rational(12, 13)}}) {
      const MatrixQ g = MatrixQ(one_param(0, 8, c, s));
      for (int i = 0; i < 5 && ok; ++i) {
        Rational factor(1);
        for (int t = 0; t < 8 - 2 * i; ++t) factor *= c;
        for (int t = 0; t < 2 * i; ++t) factor *= s;
        ok = project_80(pullback(g, *levels[i])) == factor * blocks.psi80;
      }
    }
    add(out, "projection of rotated blocks gives the binomial weights", ok);
  }
  {
    const Psi8Blocks b = psi8_blocks();
    ExtForm perturbed = b.psi80;
    perturbed += Rational(4) * b.psi62;
    perturbed += Rational(6) * b.psi44;
    perturbed += Rational(4) * b.psi26;
    perturbed += Rational(2) * b.psi08;
    const MatrixQ g = MatrixQ(one_param(0, 8, Rational(3, 5), Rational(4, 5)));
    add(out, "perturbing the block weights to (1,4,6,4,2) breaks invariance",
        !(pullback(g, perturbed) == perturbed));
  }
  {
    const ExtForm sum = omega_quad_sum();
    bool ok = !sum.is_zero() && sum.degree() == 8 &&
              sum.term_count() == f8.term_count();
    Rational lambda(0);
    if (ok) {
      lambda = sum.coeff(0xFFu) / f8.coeff(0xFFu);
      ok = !lambda.is_zero() && sum == lambda * f8;
    }
    add(out, "the generator 2-form quadruple sum is proportional to psi8", ok,
        ok ? "lambda = " + lambda.str() : "");
  }
  return out;
}

// ----------------------------------------------------------------- berger --

std::vector<CheckResult> suite_berger_sanity() {
  std::vector<CheckResult> out;
  {
    bool ok = true;
    double worst = 0.0;
    for (long idx = 0; idx < 200; ++idx) {
      const OctLine line = line_from_point(sample_unit16(42, idx));
      const Eigen::Matrix<double, 8, 8> gram =
          line.basis.transpose() * line.basis;
      const double dev = (gram - Eigen::Matrix<double, 8, 8>::Identity())
                             .cwiseAbs()
                             .maxCoeff();
      worst = std::max(worst, dev);
      ok = ok && dev < 1e-12;
    }
    add(out, "sampled line bases are orthonormal within 1e-12", ok,
        "max deviation " + std::to_string(worst));
  }
  {
    const std::vector<Mask> monomials = {0xFFu, 0xFF00u};
    const MonteCarloStats stats = monte_carlo(4000, 7, monomials);
    const double gap = std::abs(stats.mean[0] - stats.mean[1]);
    const double sigma = std::sqrt(stats.std_error[0] * stats.std_error[0] +
                                   stats.std_error[1] * stats.std_error[1]);
    add(out, "x-block and y-block averages agree within 3 sigma", gap <= 3 * sigma,
        "gap " + std::to_string(gap) + ", sigma " + std::to_string(sigma));
  }
  return out;
}

}  // namespace

std::vector<std::string> verify_suite_names() {
  return {"algebra", "octoform", "kraines", "calibrations", "psi8", "spin9", "all"};
}

std::vector<CheckResult> verify_suite(const std::string& suite) {
  if (suite == "algebra") return suite_algebra();
  if (suite == "octoform") return suite_octoform();
  if (suite == "kraines") return suite_kraines();
  if (suite == "calibrations") return suite_calibrations();
  if (suite == "psi8") return suite_psi8();
  if (suite == "spin9") return suite_spin9();
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const auto& name : {"algebra", "octoform", "kraines", "calibrations", "psi8", "spin9"}) {
      auto part = verify_suite(name);
      all.insert(all.end(), part.begin(), part.end());
    }
    auto part = suite_berger_sanity();
    all.insert(all.end(), part.begin(), part.end());
    return all;
  }
  throw std::invalid_argument("unknown verify suite: " + suite);
}

int run_verify(const std::string& suite, std::ostream& out) {
  const auto results = verify_suite(suite);
  int failures = 0;
  for (const auto& r : results) {
    out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.detail.empty()) out << " (" << r.detail << ")";
    out << "\n";
    if (!r.pass) ++failures;
  }
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed")
      << " [" << results.size() << " total]\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace ovf
