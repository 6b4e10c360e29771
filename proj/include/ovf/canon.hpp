#pragma once

#include "ovf/octoform.hpp"

namespace ovf {

// ((conj(a1) ^ a2) ^ conj(a3)) ^ a4, with exactly this bracketing; the
// product is not associative, so the grouping is part of the definition.
OctForm quad_wedge(const OctForm& a1, const OctForm& a2, const OctForm& a3,
                   const OctForm& a4);

// The four octonion-valued 4-forms on O^2 built from the coordinate 1-forms:
// psi40 = Q(dx,dx,dx,dx), psi31 = Q(dy,dx,dx,dx), psi13 = Q(dx,dy,dy,dy),
// psi04 = Q(dy,dy,dy,dy), where Q is quad_wedge.
struct PsiComponents {
  OctForm psi40, psi31, psi13, psi04;
};
PsiComponents psi_components();

// The five real graded pieces of psi8, of pure bidegree (8,0),(6,2),(4,4),
// (2,6),(0,8) with respect to the x/y block split.
struct Psi8Blocks {
  ExtForm psi80, psi62, psi44, psi26, psi08;
};
Psi8Blocks psi8_blocks();

// The two equivalent ways of assembling the Spin(9)-invariant 8-form:
// component_products sums the pairings of the four psi components directly;
// graded_blocks sums the five real pieces with binomial weights 1,4,6,4,1.
enum class Psi8Grouping { component_products, graded_blocks };

struct Psi8Form {
  ExtForm form;
  Psi8Grouping grouping;
};

// The invariant 8-form (integer multiple); both groupings yield the
// identical real form, which is asserted to be real before extraction.
Psi8Form psi8(Psi8Grouping grouping);

// -1/(4*6!) * psi8; all 702 coefficients are integers in {-14,-2,-1,1,2}.
ExtForm scaled_psi8();

// Kaehler 2-form on C^n (ambient R^{2n}, coordinates x_j, y_j interleaved:
// bit 2j = dx^j, bit 2j+1 = dy^j); equals sum_j dx^j ^ dy^j.
ExtForm kaehler(int n);

// Kraines 4-form on H^n from the three almost-complex structures:
// Omega_I^2 + Omega_J^2 + Omega_K^2 with Omega_I(u,v) = sum_i <u_i e1, v_i>.
ExtForm kraines_standard(int n);

// The same form assembled from quaternionic coordinate 1-forms:
// -1/4 sum_{i,j} (dw_i ^ conj(dw_j)) ^ conj(dw_i ^ conj(dw_j)).
ExtForm kraines_octonionic(int n);

// Cayley calibration on O = R^8: -1/24 (dx ^ conj(dx)) ^ (dx ^ conj(dx)).
ExtForm cayley();

// Associative calibration on Im O = R^7 (bit i = coordinate of e_{i+1}):
// -1/12 [(dx ^ dx) ^ dx + dx ^ (dx ^ dx)] with dx = sum e_i dx^i.
ExtForm associative();

}  // namespace ovf
