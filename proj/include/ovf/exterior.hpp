#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "ovf/rational.hpp"

namespace ovf {

// A basis monomial of degree k on R^d is a k-subset of {0,...,d-1} stored as
// a bitmask; the wedge factors are ordered by ascending bit index. On
// R^16 = O^2, bits 0-7 are the x block and bits 8-15 the y block.
using Mask = std::uint32_t;

constexpr int kMaxDim = 16;

inline int mask_degree(Mask m) { return std::popcount(m); }

std::vector<int> mask_indices(Mask m);
Mask mask_of(std::initializer_list<int> indices);

// Shuffle sign of e_S wedge e_T: 0 when the masks overlap, otherwise
// (-1)^inversions with inversions = #{(i,j) : i in S, j in T, i > j}.
int basis_sign(Mask a, Mask b);

// Sparse exact exterior form of a single degree on R^dim. Zero coefficients
// are never stored; all stored masks share one popcount.
class ExtForm {
 public:
  ExtForm(int dim, int degree);
  static ExtForm term(int dim, Mask m, const Rational& c);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mask, Rational>& terms() const { return terms_; }
  Rational coeff(Mask m) const;

  // Accumulates c onto monomial m, pruning the entry when it cancels.
  void add_term(Mask m, const Rational& c);

  ExtForm& operator+=(const ExtForm& o);
  ExtForm& operator-=(const ExtForm& o);
  ExtForm& operator*=(const Rational& s);

  friend ExtForm operator+(ExtForm a, const ExtForm& b) { a += b; return a; }
  friend ExtForm operator-(ExtForm a, const ExtForm& b) { a -= b; return a; }
  friend ExtForm operator*(ExtForm a, const Rational& s) { a *= s; return a; }
  friend ExtForm operator*(const Rational& s, ExtForm a) { a *= s; return a; }
  friend ExtForm operator-(ExtForm a) { a *= Rational(-1); return a; }

  // Zero forms compare equal regardless of their nominal degree.
  friend bool operator==(const ExtForm& a, const ExtForm& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  int dim_;
  int degree_;
  std::map<Mask, Rational> terms_;
};

// Graded-commutative wedge product. Degrees beyond dim yield the zero form.
ExtForm wedge(const ExtForm& a, const ExtForm& b);

// Hodge star on R^8 with the Euclidean metric and orientation e_0^...^e_7.
ExtForm hodge_star(const ExtForm& f);

// The top-degree basis form with coefficient 1.
ExtForm det_form(int dim);

// f(v_1,...,v_k) as a sum of k x k minors; args.size() must equal degree.
Rational evaluate(const ExtForm& f, std::span<const VectorQ> args);

}  // namespace ovf
