#pragma once

#include <random>
#include <vector>

#include "ovf/octoform.hpp"

namespace ovf::testing {

struct Rng {
  std::mt19937_64 gen;
  explicit Rng(std::uint64_t seed) : gen(seed) {}

  int geti(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); }

  Rational rq() { return Rational(geti(-9, 9), geti(1, 9)); }

  Oct roct() {
    Oct u;
    for (int i = 0; i < 8; ++i) u[i] = rq();
    return u;
  }

  Oct rquat() {
    Oct u;
    for (int i : {0, 1, 2, 4}) u[i] = rq();
    return u;
  }

  Oct runit() {
    static const int pats[][3] = {{3, 4, 5}, {5, 12, 13}, {8, 15, 17}, {20, 21, 29}};
    const auto& pat = pats[geti(0, 3)];
    Rational c(pat[0], pat[2]);
    Rational s(pat[1], pat[2]);
    if (geti(0, 1)) c = -c;
    if (geti(0, 1)) s = -s;
    const int a = geti(0, 7);
    int b = geti(0, 7);
    while (b == a) b = geti(0, 7);
    Oct u;
    u[a] = c;
    u[b] = s;
    return u;
  }

  Mask rmask(int dim, int degree) {
    Mask m = 0;
    while (mask_degree(m) < degree) m |= Mask(1) << geti(0, dim - 1);
    return m;
  }

  ExtForm rext(int dim, int degree, int nterms) {
    ExtForm f(dim, degree);
    for (int t = 0; t < nterms; ++t) f.add_term(rmask(dim, degree), rq());
    return f;
  }

  OctForm roform(int dim, int degree, int nterms) {
    OctForm f(dim, degree);
    for (int t = 0; t < nterms; ++t) f.add_term(rmask(dim, degree), roct());
    return f;
  }

  OctForm rqform(int dim, int degree, int nterms) {
    OctForm f(dim, degree);
    for (int t = 0; t < nterms; ++t) f.add_term(rmask(dim, degree), rquat());
    return f;
  }

  VectorQ rvec(int dim) {
    VectorQ v(dim);
    for (int i = 0; i < dim; ++i) v[i] = rq();
    return v;
  }
};

// Independent wedge oracle: evaluates (a ^ b)(v_1,...,v_{k+l}) as the
// shuffle sum over splittings, never touching the wedge kernel.
inline Rational shuffle_wedge_eval(const ExtForm& a, const ExtForm& b,
                                   const std::vector<VectorQ>& args) {
  const int k = a.degree(), l = b.degree();
  const int n = k + l;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  Rational total(0);
  while (true) {
    std::vector<bool> in_a(n, false);
    for (int i : pick) in_a[i] = true;
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      if (in_a[i])
        for (int j = 0; j < i; ++j)
          if (!in_a[j]) ++inversions;
    std::vector<VectorQ> left, right;
    for (int i = 0; i < n; ++i) (in_a[i] ? left : right).push_back(args[i]);
    const Rational term = evaluate(a, left) * evaluate(b, right);
    total += (inversions & 1) ? -term : term;
    // next k-combination of {0,...,n-1}
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
  return total;
}

// The octonion-valued analogue; coefficient order is a(...) * b(...).
inline Oct shuffle_owedge_eval(const OctForm& a, const OctForm& b,
                               const std::vector<VectorQ>& args) {
  const int k = a.degree(), l = b.degree();
  const int n = k + l;
  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  Oct total;
  while (true) {
    std::vector<bool> in_a(n, false);
    for (int i : pick) in_a[i] = true;
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      if (in_a[i])
        for (int j = 0; j < i; ++j)
          if (!in_a[j]) ++inversions;
    std::vector<VectorQ> left, right;
    for (int i = 0; i < n; ++i) (in_a[i] ? left : right).push_back(args[i]);
    const Oct term = mul(evaluate(a, left), evaluate(b, right));
    total += (inversions & 1) ? -term : term;
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == n - k + pos) --pos;
    if (pos < 0) break;
    ++pick[pos];
    for (int i = pos + 1; i < k; ++i) pick[i] = pick[i - 1] + 1;
  }
  return total;
}

// Swap of the two octonion blocks on O^2 applied to an octonion-valued
// form; each monomial picks up the sign of moving its y factors past its
// x factors.
inline OctForm swap_blocks(const OctForm& f) {
  OctForm r(f.dim(), f.degree());
  for (const auto& [m, u] : f.terms()) {
    const int k = mask_degree(m & 0xFFu);
    const int l = mask_degree(m >> 8);
    const Mask swapped = ((m & 0xFFu) << 8) | (m >> 8);
    r.add_term(swapped, ((k * l) & 1) ? -u : u);
  }
  return r;
}

}  // namespace ovf::testing
