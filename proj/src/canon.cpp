#include "ovf/canon.hpp"

#include <stdexcept>

namespace ovf {

OctForm quad_wedge(const OctForm& a1, const OctForm& a2, const OctForm& a3,
                   const OctForm& a4) {
  return owedge(owedge(owedge(obar(a1), a2), obar(a3)), a4);
}

// The psi pipeline is cached: the components and both assemblies are pure
// values, computed once per process and handed out by copy.

PsiComponents psi_components() {
  static const PsiComponents cached = [] {
    const OctForm dx = coord_dx();
    const OctForm dy = coord_dy();
    return PsiComponents{
        quad_wedge(dx, dx, dx, dx),
        quad_wedge(dy, dx, dx, dx),
        quad_wedge(dx, dy, dy, dy),
        quad_wedge(dy, dy, dy, dy),
    };
  }();
  return cached;
}

Psi8Blocks psi8_blocks() {
  static const Psi8Blocks cached = [] {
    const PsiComponents p = psi_components();
    return Psi8Blocks{
        real_checked(owedge(p.psi40, obar(p.psi40))),
        real_checked(owedge(p.psi31, obar(p.psi31))),
        real_checked(Rational(-5, 6) * (owedge(p.psi31, p.psi13) +
                                        owedge(obar(p.psi13), obar(p.psi31)))),
        real_checked(owedge(p.psi13, obar(p.psi13))),
        real_checked(owedge(p.psi04, obar(p.psi04))),
    };
  }();
  return cached;
}

Psi8Form psi8(Psi8Grouping grouping) {
  if (grouping == Psi8Grouping::component_products) {
    static const ExtForm cached = [] {
      const PsiComponents p = psi_components();
      OctForm total = owedge(p.psi40, obar(p.psi40));
      total += Rational(4) * owedge(p.psi31, obar(p.psi31));
      total -= Rational(5) *
               (owedge(p.psi31, p.psi13) + owedge(obar(p.psi13), obar(p.psi31)));
      total += Rational(4) * owedge(p.psi13, obar(p.psi13));
      total += owedge(p.psi04, obar(p.psi04));
      return real_checked(total);
    }();
    return Psi8Form{cached, grouping};
  }
  static const ExtForm cached = [] {
    const Psi8Blocks b = psi8_blocks();
    ExtForm total = b.psi80;
    total += Rational(4) * b.psi62;
    total += Rational(6) * b.psi44;
    total += Rational(4) * b.psi26;
    total += b.psi08;
    return total;
  }();
  return Psi8Form{cached, grouping};
}

ExtForm scaled_psi8() {
  static const ExtForm cached = [] {
    ExtForm f = psi8(Psi8Grouping::graded_blocks).form * Rational(-1, 4 * 720);
    for (const auto& [m, c] : f.terms())
      if (!c.is_integer())
        throw std::logic_error("scaled_psi8: non-integer coefficient");
    return f;
  }();
  return cached;
}

ExtForm kaehler(int n) {
  if (n < 1 || 2 * n > kMaxDim) throw std::out_of_range("kaehler: invalid n");
  const int dim = 2 * n;
  OctForm sum(dim, 2);
  for (int j = 0; j < n; ++j) {
    OctForm dz(dim, 1);
    dz.add_term(Mask(1) << (2 * j), Oct::unit());
    dz.add_term(Mask(1) << (2 * j + 1), Oct::basis(1));
    sum += owedge(dz, obar(dz));
  }
  const OctForm omega =
      Rational(1, 2) * apply_linear(lmul_matrix(Oct::basis(1)), sum);
  return real_checked(omega);
}

namespace {

// 2-form (u,v) -> sum_i <u_i e_g, v_i> on H^n, g in {1,2,4}.
ExtForm sp_structure_form(int n, int g) {
  static constexpr int kQuatBasis[4] = {0, 1, 2, 4};
  ExtForm f(4 * n, 2);
  const Oct eg = Oct::basis(g);
  for (int block = 0; block < n; ++block) {
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        const Oct ea = Oct::basis(kQuatBasis[a]);
        const Oct eb = Oct::basis(kQuatBasis[b]);
        // Alternating part of the bilinear map; the map is already
        // antisymmetric, so this is only a safeguard.
        const Rational c =
            Rational(1, 2) * (inner(mul(ea, eg), eb) - inner(mul(eb, eg), ea));
        f.add_term((Mask(1) << (4 * block + a)) | (Mask(1) << (4 * block + b)), c);
      }
    }
  }
  return f;
}

}  // namespace

ExtForm kraines_standard(int n) {
  if (n < 1 || 4 * n > kMaxDim) throw std::out_of_range("kraines_standard: invalid n");
  ExtForm total(4 * n, 4);
  for (int g : {1, 2, 4}) {
    const ExtForm omega = sp_structure_form(n, g);
    total += wedge(omega, omega);
  }
  return total;
}

ExtForm kraines_octonionic(int n) {
  if (n < 1 || 4 * n > kMaxDim) throw std::out_of_range("kraines_octonionic: invalid n");
  OctForm total(4 * n, 4);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      const OctForm omega_ij = owedge(coord_dw(i, n), obar(coord_dw(j, n)));
      total += owedge(omega_ij, obar(omega_ij));
    }
  }
  return real_checked(Rational(-1, 4) * total);
}

ExtForm cayley() {
  OctForm dx(8, 1);
  for (int i = 0; i < 8; ++i) dx.add_term(Mask(1) << i, Oct::basis(i));
  const OctForm pair = owedge(dx, obar(dx));
  return real_checked(Rational(-1, 24) * owedge(pair, pair));
}

ExtForm associative() {
  OctForm dx(7, 1);
  for (int i = 1; i < 8; ++i) dx.add_term(Mask(1) << (i - 1), Oct::basis(i));
  const OctForm sq = owedge(dx, dx);
  return real_checked(Rational(-1, 12) * (owedge(sq, dx) + owedge(dx, sq)));
}

}  // namespace ovf
