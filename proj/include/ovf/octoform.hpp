#pragma once

#include <map>
#include <span>

#include "ovf/exterior.hpp"
#include "ovf/octonion.hpp"

namespace ovf {

// Octonion-valued exterior form: element of O (x) Lambda^k (R^dim)*. The
// wedge product (u phi) ^ (v psi) = (uv)(phi ^ psi) is bilinear but not
// associative; real forms embed as the coefficient span of 1.
class OctForm {
 public:
  OctForm(int dim, int degree);
  static OctForm term(int dim, Mask m, const Oct& u);

  int dim() const { return dim_; }
  int degree() const { return degree_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Mask, Oct>& terms() const { return terms_; }
  Oct coeff(Mask m) const;

  void add_term(Mask m, const Oct& u);

  OctForm& operator+=(const OctForm& o);
  OctForm& operator-=(const OctForm& o);
  OctForm& operator*=(const Rational& s);

  friend OctForm operator+(OctForm a, const OctForm& b) { a += b; return a; }
  friend OctForm operator-(OctForm a, const OctForm& b) { a -= b; return a; }
  friend OctForm operator*(OctForm a, const Rational& s) { a *= s; return a; }
  friend OctForm operator*(const Rational& s, OctForm a) { a *= s; return a; }
  friend OctForm operator-(OctForm a) { a *= Rational(-1); return a; }

  friend bool operator==(const OctForm& a, const OctForm& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }

 private:
  int dim_;
  int degree_;
  std::map<Mask, Oct> terms_;
};

// (u phi) ^ (v psi) = (uv)(phi ^ psi), extended bilinearly. Restricts to the
// real wedge on real forms; not associative in general.
OctForm owedge(const OctForm& a, const OctForm& b);

// Octonion conjugation applied to every coefficient.
OctForm obar(const OctForm& a);

// Real parts of all coefficients, as a real form.
ExtForm oreal(const OctForm& a);

// True when every coefficient lies in span{1}.
bool is_real(const OctForm& a);

// Extracts the real form, throwing std::logic_error if any coefficient has
// a nonzero imaginary component.
ExtForm real_checked(const OctForm& a);

// True when every coefficient lies in H = span{1, e1, e2, e4}.
bool is_quaternionic(const OctForm& a);

// Coefficient-wise application of a linear operator on O.
OctForm apply_linear(const LinOp8& f, const OctForm& a);

// 1 (x) f.
OctForm embed(const ExtForm& f);

// u (x) f.
OctForm tensor(const Oct& u, const ExtForm& f);

// Octonionic coordinate 1-forms on R^16 = O^2: dx(u1,u2) = u1, dy(u1,u2) = u2.
OctForm coord_dx();
OctForm coord_dy();

// Quaternionic coordinate 1-form dw_i on H^n (ambient R^{4n}, H spanned by
// {1, e1, e2, e4}, coordinate block 4(i-1)..4(i-1)+3); 1-indexed i <= n.
OctForm coord_dw(int i, int n);

Oct evaluate(const OctForm& f, std::span<const VectorQ> args);

}  // namespace ovf
