#include "ovf/spin9.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace ovf {

namespace {

void check_unit_pair(const Rational& c, const Rational& s) {
  if (!(c * c + s * s == Rational(1)))
    throw std::invalid_argument("expected an exact unit pair with c^2 + s^2 = 1");
}

}  // namespace

LinOp16 gen_I(int j) {
  if (j < 0 || j > 8) throw std::out_of_range("gen_I: index out of range");
  LinOp16 m = LinOp16::Zero();
  if (j == 8) {
    for (int i = 0; i < 8; ++i) {
      m(i, i) = Rational(1);
      m(8 + i, 8 + i) = Rational(-1);
    }
    return m;
  }
  const Oct e = Oct::basis(j);
  m.block<8, 8>(0, 8) = rmul_matrix(e);
  m.block<8, 8>(8, 0) = rmul_matrix(conj(e));
  return m;
}

LinOp16 gen_Ijk(int j, int k) { return gen_I(j) * gen_I(k); }

LinOp16 one_param(int j, int k, const Rational& c, const Rational& s) {
  check_unit_pair(c, s);
  return c * LinOp16::Identity() + s * gen_Ijk(j, k);
}

LinOp16 spin8_element(int j, int k, const Rational& c, const Rational& s) {
  if (!(0 <= j && j < k && k <= 7))
    throw std::out_of_range("spin8_element: need 0 <= j < k <= 7");
  check_unit_pair(c, s);
  const Oct u = c * Oct::basis(j) + s * Oct::basis(k);
  const Oct ej = Oct::basis(j);
  LinOp16 m = LinOp16::Zero();
  m.block<8, 8>(0, 0) = rmul_matrix(ej) * rmul_matrix(conj(u));
  m.block<8, 8>(8, 8) = rmul_matrix(conj(ej)) * rmul_matrix(u);
  return m;
}

ExtForm lie_derivative(const MatrixQ& a, const ExtForm& f) {
  const int d = f.dim();
  if (a.rows() != d || a.cols() != d)
    throw std::invalid_argument("lie_derivative: operator dimension mismatch");
  const int k = f.degree();
  ExtForm r(d, k);
  for (const auto& [m, c] : f.terms()) {
    const auto idx = mask_indices(m);
    for (int p = 0; p < k; ++p) {
      const Mask rest = m & ~(Mask(1) << idx[p]);
      // Replace factor dx^{s_p} by the 1-form v -> dx^{s_p}(A v), i.e. row
      // s_p of A, then re-sort the new factor into ascending order.
      for (int t = 0; t < d; ++t) {
        const Rational& entry = a(idx[p], t);
        if (entry.is_zero()) continue;
        if (rest & (Mask(1) << t)) continue;
        int swaps = 0;
        for (int q = 0; q < k; ++q) {
          if (q == p) continue;
          if (q < p && idx[q] > t) ++swaps;
          if (q > p && idx[q] < t) ++swaps;
        }
        const Rational contribution = (swaps & 1) ? -(c * entry) : c * entry;
        r.add_term(rest | (Mask(1) << t), contribution);
      }
    }
  }
  return r;
}

ExtForm pullback(const MatrixQ& g, const ExtForm& f) {
  const int d = f.dim();
  if (g.rows() != d || g.cols() != d)
    throw std::invalid_argument("pullback: operator dimension mismatch");
  ExtForm r(d, f.degree());
  for (const auto& [m, c] : f.terms()) {
    ExtForm partial = ExtForm::term(d, 0, c);
    for (int s : mask_indices(m)) {
      ExtForm row(d, 1);
      for (int t = 0; t < d; ++t)
        if (!g(s, t).is_zero()) row.add_term(Mask(1) << t, g(s, t));
      partial = wedge(partial, row);
      if (partial.is_zero()) break;
    }
    r += partial;
  }
  return r;
}

ExtForm project_80(const ExtForm& f) {
  if (f.dim() != 16) throw std::invalid_argument("project_80: ambient must be R^16");
  ExtForm r(16, f.degree());
  for (const auto& [m, c] : f.terms())
    if ((m & 0xFF00u) == 0) r.add_term(m, c);
  return r;
}

Omega2 omega_form(int i, int j) {
  const LinOp16 m = gen_Ijk(i, j);
  ExtForm f(16, 2);
  for (int a = 0; a < 16; ++a)
    for (int b = a + 1; b < 16; ++b)
      f.add_term((Mask(1) << a) | (Mask(1) << b),
                 Rational(1, 2) * (m(a, b) - m(b, a)));
  return Omega2{i, j, f};
}

ExtForm omega_quad_sum() {
  std::vector<ExtForm> omega;
  omega.reserve(81);
  for (int i = 0; i <= 8; ++i)
    for (int j = 0; j <= 8; ++j) omega.push_back(omega_form(i, j).form);
  const auto w = [&omega](int i, int j) -> const ExtForm& { return omega[9 * i + j]; };

  ExtForm total(16, 8);
  for (int i = 0; i <= 8; ++i) {
    for (int j = 0; j <= 8; ++j) {
      if (w(i, j).is_zero()) continue;
      for (int k = 0; k <= 8; ++k) {
        if (w(i, k).is_zero()) continue;
        const ExtForm front = wedge(w(i, j), w(i, k));
        if (front.is_zero()) continue;
        for (int l = 0; l <= 8; ++l) {
          if (w(j, l).is_zero() || w(k, l).is_zero()) continue;
          total += wedge(wedge(front, w(j, l)), w(k, l));
        }
      }
    }
  }
  return total;
}

}  // namespace ovf
