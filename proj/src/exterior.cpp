#include "ovf/exterior.hpp"

#include <stdexcept>

#include "ovf/linalg.hpp"

namespace ovf {

std::vector<int> mask_indices(Mask m) {
  std::vector<int> idx;
  idx.reserve(mask_degree(m));
  while (m) {
    idx.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return idx;
}

Mask mask_of(std::initializer_list<int> indices) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 0 || i >= kMaxDim) throw std::out_of_range("mask_of: index out of range");
    m |= Mask(1) << i;
  }
  return m;
}

int basis_sign(Mask a, Mask b) {
  if (a & b) return 0;
  int inversions = 0;
  for (Mask bb = b; bb; bb &= bb - 1) {
    const int j = std::countr_zero(bb);
    inversions += std::popcount(a >> (j + 1));
  }
  return (inversions & 1) ? -1 : 1;
}

ExtForm::ExtForm(int dim, int degree) : dim_(dim), degree_(degree) {
  if (dim < 0 || dim > kMaxDim) throw std::out_of_range("ExtForm: dim out of range");
  if (degree < 0) throw std::out_of_range("ExtForm: negative degree");
}

ExtForm ExtForm::term(int dim, Mask m, const Rational& c) {
  ExtForm f(dim, mask_degree(m));
  f.add_term(m, c);
  return f;
}

Rational ExtForm::coeff(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void ExtForm::add_term(Mask m, const Rational& c) {
  if (c.is_zero()) return;
  if (m >> dim_) throw std::out_of_range("ExtForm: monomial outside ambient dimension");
  if (mask_degree(m) != degree_)
    throw std::invalid_argument("ExtForm: monomial degree mismatch");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

ExtForm& ExtForm::operator+=(const ExtForm& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("ExtForm: dimension mismatch");
  if (o.terms_.empty()) return *this;
  if (terms_.empty())
    degree_ = o.degree_;
  else if (degree_ != o.degree_)
    throw std::invalid_argument("ExtForm: cannot add forms of different degree");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ExtForm& ExtForm::operator-=(const ExtForm& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("ExtForm: dimension mismatch");
  if (o.terms_.empty()) return *this;
  if (terms_.empty())
    degree_ = o.degree_;
  else if (degree_ != o.degree_)
    throw std::invalid_argument("ExtForm: cannot subtract forms of different degree");
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ExtForm& ExtForm::operator*=(const Rational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

ExtForm wedge(const ExtForm& a, const ExtForm& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
  ExtForm r(a.dim(), a.degree() + b.degree());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma & mb) continue;
      const int s = basis_sign(ma, mb);
      r.add_term(ma | mb, s < 0 ? -(ca * cb) : ca * cb);
    }
  }
  return r;
}

ExtForm hodge_star(const ExtForm& f) {
  if (f.dim() != 8) throw std::invalid_argument("hodge_star: only dimension 8 is supported");
  ExtForm r(8, 8 - f.degree());
  for (const auto& [m, c] : f.terms()) {
    const Mask comp = ~m & Mask(0xFF);
    const int s = basis_sign(m, comp);
    r.add_term(comp, s < 0 ? -c : c);
  }
  return r;
}

ExtForm det_form(int dim) {
  if (dim < 1 || dim > kMaxDim) throw std::out_of_range("det_form: dim out of range");
  return ExtForm::term(dim, (Mask(1) << dim) - 1, Rational(1));
}

Rational evaluate(const ExtForm& f, std::span<const VectorQ> args) {
  const int k = f.degree();
  if (static_cast<int>(args.size()) != k)
    throw std::invalid_argument("evaluate: argument count must equal degree");
  for (const auto& v : args)
    if (v.size() != f.dim()) throw std::invalid_argument("evaluate: vector dimension mismatch");
  Rational total(0);
  MatrixQ minor(k, k);
  for (const auto& [m, c] : f.terms()) {
    const auto rows = mask_indices(m);
    for (int r = 0; r < k; ++r)
      for (int col = 0; col < k; ++col) minor(r, col) = args[col][rows[r]];
    total += c * exact_det(minor);
  }
  return total;
}

}  // namespace ovf
