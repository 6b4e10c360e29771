#include "ovf/octoform.hpp"

#include <stdexcept>

#include "ovf/linalg.hpp"

namespace ovf {

OctForm::OctForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > kMaxDim) throw std::out_of_range("OctForm: dim out of range");
  if (degree < 0) throw std::out_of_range("OctForm: negative degree");
}

OctForm OctForm::term(int dim, Mask m, const Oct& u) {
  OctForm f(dim, mask_degree(m));
  f.add_term(m, u);
  return f;
}

Oct OctForm::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Oct::zero() : it->second;
}

void OctForm::add_term(Mask m, const Oct& u) {
  if (u.is_zero()) return;
  if (m >> dim_) throw std::out_of_range("OctForm: monomial outside ambient dimension");
  if (mask_degree(m) != degree_)
    throw std::invalid_argument("OctForm: monomial degree mismatch");
  auto [it, inserted] = terms_.try_emplace(m, u);
  if (!inserted) {
    it->second += u;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

OctForm& OctForm::operator+=(const OctForm& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("OctForm: dimension mismatch");
  if (o.terms_.empty()) return *this;
  if (terms_.empty())
    degree_ = o.degree_;
  else if (degree_ != o.degree_)
    throw std::invalid_argument("OctForm: cannot add forms of different degree");
  for (const auto& [m, u] : o.terms_) add_term(m, u);
  return *this;
}

OctForm& OctForm::operator-=(const OctForm& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("OctForm: dimension mismatch");
  if (o.terms_.empty()) return *this;
  if (terms_.empty())
    degree_ = o.degree_;
  else if (degree_ != o.degree_)
    throw std::invalid_argument("OctForm: cannot subtract forms of different degree");
  for (const auto& [m, u] : o.terms_) add_term(m, -u);
  return *this;
}

OctForm& OctForm::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, u] : terms_) u *= s;
  return *this;
}

OctForm owedge(const OctForm& a, const OctForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("owedge: dimension mismatch");
  OctForm r(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ua] : a.terms()) {
    for (const auto& [mb, ub] : b.terms()) {
      if (ma & mb) continue;
      const int s = basis_sign(ma, mb);
      const Oct c = mul(ua, ub);
      r.add_term(ma | mb, s < 0 ? -c : c);
    }
  }
  return r;
}

OctForm obar(const OctForm& a) {
  OctForm r(a.dim(), a.degree());
  for (const auto& [m, u] : a.terms()) r.add_term(m, conj(u));
  return r;
}

ExtForm oreal(const OctForm& a) {
  ExtForm r(a.dim(), a.degree());
  for (const auto& [m, u] : a.terms()) r.add_term(m, real_part(u));
  return r;
}

bool is_real(const OctForm& a) {
  for (const auto& [m, u] : a.terms())
    for (int i = 1; i < 8; ++i)
      if (!u[i].is_zero()) return false;
  return true;
}

ExtForm real_checked(const OctForm& a) {
  if (!is_real(a))
    throw std::logic_error("real_checked: form has nonzero imaginary components");
  return oreal(a);
}

bool is_quaternionic(const OctForm& a) {
  static constexpr int outside[4] = {3, 5, 6, 7};
  for (const auto& [m, u] : a.terms())
    for (int i : outside)
      if (!u[i].is_zero()) return false;
  return true;
}

OctForm apply_linear(const LinOp8& f, const OctForm& a) {
  OctForm r(a.dim(), a.degree());
  for (const auto& [m, u] : a.terms()) r.add_term(m, Oct(f * u.coords()));
  return r;
}

OctForm embed(const ExtForm& f) {
  OctForm r(f.dim(), f.degree());
  for (const auto& [m, c] : f.terms()) r.add_term(m, c * Oct::unit());
  return r;
}

OctForm tensor(const Oct& u, const ExtForm& f) {
  OctForm r(f.dim(), f.degree());
  for (const auto& [m, c] : f.terms()) r.add_term(m, c * u);
  return r;
}

OctForm coord_dx() {
  OctForm f(16, 1);
  for (int i = 0; i < 8; ++i) f.add_term(Mask(1) << i, Oct::basis(i));
  return f;
}

OctForm coord_dy() {
  OctForm f(16, 1);
  for (int i = 0; i < 8; ++i) f.add_term(Mask(1) << (8 + i), Oct::basis(i));
  return f;
}

OctForm coord_dw(int i, int n) {
  if (n < 1 || 4 * n > kMaxDim) throw std::out_of_range("coord_dw: invalid block count");
  if (i < 1 || i > n) throw std::out_of_range("coord_dw: index out of range");
  static constexpr int kQuatBasis[4] = {0, 1, 2, 4};
  OctForm f(4 * n, 1);
  for (int t = 0; t < 4; ++t)
    f.add_term(Mask(1) << (4 * (i - 1) + t), Oct::basis(kQuatBasis[t]));
  return f;
}

Oct evaluate(const OctForm& f, std::span<const VectorQ> args) {
  const int k = f.degree();
  if (static_cast<int>(args.size()) != k)
    throw std::invalid_argument("evaluate: argument count must equal degree");
  for (const auto& v : args)
    if (v.size() != f.dim()) throw std::invalid_argument("evaluate: vector dimension mismatch");
  Oct total;
  MatrixQ minor(k, k);
  for (const auto& [m, u] : f.terms()) {
    const auto rows = mask_indices(m);
    for (int r = 0; r < k; ++r)
      for (int col = 0; col < k; ++col) minor(r, col) = args[col][rows[r]];
    total += exact_det(minor) * u;
  }
  return total;
}

}  // namespace ovf
