#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>

#include "ovf/rational.hpp"

namespace ovf {

// Multiplication table of the standard basis {1, e1, ..., e7} of O:
// e_i e_j = sign[i][j] * e_{index[i][j]}.
struct MultTable {
  std::array<std::array<std::int8_t, 8>, 8> sign;
  std::array<std::array<std::uint8_t, 8>, 8> index;
};

// The table is generated once from the seven quaternionic triples
// (1,2,4),(2,3,5),(3,4,6),(4,5,7),(5,6,1),(6,7,2),(7,1,3): cyclic products
// e_a e_b = e_c, anticommutativity of distinct imaginary units, e_j^2 = -1,
// e_0 = 1 two-sided unit. Throws std::logic_error if the triples ever fail
// to fill the table consistently.
const MultTable& mult_table();

// Index of the basis element with e_a e_b = +-e_{ab}; the sign is dropped.
// This index product is commutative and associative.
int basis_index_product(int a, int b);

// Octonion with coordinates in Scalar over the standard basis; index 0 is
// the real unit, index j (1 <= j <= 7) is e_j. Instantiated with Rational
// for the exact modules and with double for the Monte Carlo module.
template <typename Scalar>
class Octonion {
 public:
  using Coords = Eigen::Matrix<Scalar, 8, 1>;

  Octonion() : c_(Coords::Zero()) {}
  explicit Octonion(Coords c) : c_(std::move(c)) {}

  static Octonion zero() { return Octonion(); }
  static Octonion unit() { return basis(0); }
  static Octonion basis(int j) {
    Octonion u;
    u.c_[j] = Scalar(1);
    return u;
  }

  const Coords& coords() const { return c_; }
  Scalar& operator[](int i) { return c_[i]; }
  const Scalar& operator[](int i) const { return c_[i]; }

  bool is_zero() const {
    for (int i = 0; i < 8; ++i)
      if (!(c_[i] == Scalar(0))) return false;
    return true;
  }

  Octonion& operator+=(const Octonion& o) { c_ += o.c_; return *this; }
  Octonion& operator-=(const Octonion& o) { c_ -= o.c_; return *this; }
  Octonion& operator*=(const Scalar& s) { c_ *= s; return *this; }

  friend Octonion operator+(Octonion a, const Octonion& b) { a += b; return a; }
  friend Octonion operator-(Octonion a, const Octonion& b) { a -= b; return a; }
  friend Octonion operator*(Octonion a, const Scalar& s) { a *= s; return a; }
  friend Octonion operator*(const Scalar& s, Octonion a) { a *= s; return a; }
  friend Octonion operator-(Octonion a) { a.c_ = -a.c_; return a; }

  friend bool operator==(const Octonion& a, const Octonion& b) {
    for (int i = 0; i < 8; ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }

 private:
  Coords c_;
};

// Bilinear product over the multiplication table.
template <typename Scalar>
Octonion<Scalar> mul(const Octonion<Scalar>& u, const Octonion<Scalar>& v) {
  const MultTable& t = mult_table();
  Octonion<Scalar> r;
  for (int i = 0; i < 8; ++i) {
    if (u[i] == Scalar(0)) continue;
    for (int j = 0; j < 8; ++j) {
      if (v[j] == Scalar(0)) continue;
      Scalar p = u[i] * v[j];
      if (t.sign[i][j] < 0)
        r[t.index[i][j]] -= p;
      else
        r[t.index[i][j]] += p;
    }
  }
  return r;
}

template <typename Scalar>
Octonion<Scalar> conj(const Octonion<Scalar>& u) {
  Octonion<Scalar> r = -u;
  r[0] = u[0];
  return r;
}

template <typename Scalar>
Scalar real_part(const Octonion<Scalar>& u) {
  return u[0];
}

// <u,v> = Re(u conj(v)); the standard Euclidean product, the basis is
// orthonormal.
template <typename Scalar>
Scalar inner(const Octonion<Scalar>& u, const Octonion<Scalar>& v) {
  return u.coords().dot(v.coords());
}

template <typename Scalar>
Scalar norm_sq(const Octonion<Scalar>& u) {
  return inner(u, u);
}

// Matrix of R_u : x -> xu on coordinate vectors.
template <typename Scalar>
Eigen::Matrix<Scalar, 8, 8> rmul_matrix(const Octonion<Scalar>& u) {
  Eigen::Matrix<Scalar, 8, 8> m;
  for (int j = 0; j < 8; ++j)
    m.col(j) = mul(Octonion<Scalar>::basis(j), u).coords();
  return m;
}

// Matrix of L_u : x -> ux.
template <typename Scalar>
Eigen::Matrix<Scalar, 8, 8> lmul_matrix(const Octonion<Scalar>& u) {
  Eigen::Matrix<Scalar, 8, 8> m;
  for (int j = 0; j < 8; ++j)
    m.col(j) = mul(u, Octonion<Scalar>::basis(j)).coords();
  return m;
}

using Oct = Octonion<Rational>;
using OctD = Octonion<double>;
using LinOp8 = Eigen::Matrix<Rational, 8, 8>;

}  // namespace ovf
