#pragma once

#include <cstdint>
#include <vector>

#include "ovf/exterior.hpp"
#include "ovf/octonion.hpp"

namespace ovf {

// An octonionic line in O^2: the 8-plane {(u, ua)} for finite parameter a,
// or {(0, u)} for the line at infinity. The basis columns are
// b_i = (e_i, e_i a)/sqrt(1+|a|^2), orthonormal by construction; their order
// fixes the orientation of the line.
struct OctLine {
  bool infinite = false;
  OctD a;
  Eigen::Matrix<double, 16, 8> basis;
};

OctLine line_from_a(const OctD& a);
OctLine line_infinity();

// The line through a unit vector p = (u1, u2): parameter a = u1^{-1} u2,
// or the line at infinity when u1 = 0.
OctLine line_from_point(const Eigen::Matrix<double, 16, 1>& p);

// Coefficient of the pulled-back line volume form on the degree-8 basis
// monomial m: the determinant of the 8x8 submatrix of basis^T selecting the
// columns in m.
double line_pullback_coeff(const OctLine& line, Mask m);

// Uniform point on S^15 from the deterministic per-sample stream
// (seed, index); normalized standard Gaussian 16-vector.
Eigen::Matrix<double, 16, 1> sample_unit16(std::uint64_t seed, long index);

struct MonteCarloStats {
  std::vector<Mask> monomials;
  std::vector<double> mean;
  std::vector<double> std_error;
  long samples = 0;
  std::uint64_t seed = 0;
};

// Averages line_pullback_coeff over lines induced by uniform samples on
// S^15 (the pushforward along the Hopf map is the invariant measure on the
// projective line). Deterministic for fixed (seed, samples): the per-sample
// streams depend only on (seed, index) and accumulation runs in index order.
MonteCarloStats monte_carlo(long samples, std::uint64_t seed,
                            const std::vector<Mask>& monomials);

}  // namespace ovf
