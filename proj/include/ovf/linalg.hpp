#pragma once

#include "ovf/rational.hpp"

namespace ovf {

// Exact determinant by Gaussian elimination with explicit zero-pivot
// handling; works on singular input.
Rational exact_det(MatrixQ m);

// Exact rank by Gaussian elimination.
int exact_rank(MatrixQ m);

}  // namespace ovf
