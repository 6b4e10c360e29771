#pragma once

#include "ovf/exterior.hpp"
#include "ovf/octonion.hpp"

namespace ovf {

using LinOp16 = Eigen::Matrix<Rational, 16, 16>;

// The nine generating reflections of spin(9) inside so(16), acting on
// O^2 coordinates: I_j = [[0, R_{e_j}], [R_{conj(e_j)}, 0]] for j <= 7 and
// I_8 = diag(id, -id). Each squares to the identity.
LinOp16 gen_I(int j);

// I_jk = I_j I_k; skew-adjoint with square -id whenever j != k. The 36
// operators {I_jk : j < k} span the Lie algebra spin(9).
LinOp16 gen_Ijk(int j, int k);

// cos/sin rotation c*id + s*I_jk on the one-parameter subgroup generated by
// I_jk; requires an exact Pythagorean pair c^2 + s^2 = 1.
LinOp16 one_param(int j, int k, const Rational& c, const Rational& s);

// Spin(8) subgroup element diag(R_{e_j} R_{conj(u)}, R_{conj(e_j)} R_u) with
// u = c e_j + s e_k; requires j < k <= 7 and c^2 + s^2 = 1. Coincides with
// one_param(j, k, c, s).
LinOp16 spin8_element(int j, int k, const Rational& c, const Rational& s);

// Infinitesimal action (A.f)(v_1,...,v_k) = sum_i f(v_1,...,A v_i,...,v_k);
// vanishes exactly when f is invariant under exp(tA) for all t.
ExtForm lie_derivative(const MatrixQ& a, const ExtForm& f);

// (g^* f)(v_1,...,v_k) = f(g v_1,...,g v_k).
ExtForm pullback(const MatrixQ& g, const ExtForm& f);

// Keeps only monomials of bidegree (8,0), i.e. masks inside the x block.
ExtForm project_80(const ExtForm& f);

// The 2-form <., I_ij .> on O^2 (alternating part; for i != j the bilinear
// map is already antisymmetric, for i = j it alternates to zero).
struct Omega2 {
  int i, j;
  ExtForm form;
};
Omega2 omega_form(int i, int j);

// sum_{i,j,k,l=0}^{8} omega_ij ^ omega_ik ^ omega_jl ^ omega_kl, associated
// left to right. A nonzero rational multiple of psi8; serves as an
// independent construction of the invariant 8-form.
ExtForm omega_quad_sum();

}  // namespace ovf
