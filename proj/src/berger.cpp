#include "ovf/berger.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ovf {

namespace {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline double uniform_open(std::uint64_t bits) {
  // (0, 1]; never 0, so log() is safe.
  return static_cast<double>((bits >> 11) + 1) * 0x1.0p-53;
}

}  // namespace

OctLine line_from_a(const OctD& a) {
  OctLine line;
  line.infinite = false;
  line.a = a;
  const double scale = 1.0 / std::sqrt(1.0 + norm_sq(a));
  for (int i = 0; i < 8; ++i) {
    const OctD top = OctD::basis(i);
    const OctD bottom = mul(top, a);
    for (int r = 0; r < 8; ++r) {
      line.basis(r, i) = top[r] * scale;
      line.basis(8 + r, i) = bottom[r] * scale;
    }
  }
  return line;
}

OctLine line_infinity() {
  OctLine line;
  line.infinite = true;
  line.basis.setZero();
  for (int i = 0; i < 8; ++i) line.basis(8 + i, i) = 1.0;
  return line;
}

OctLine line_from_point(const Eigen::Matrix<double, 16, 1>& p) {
  OctD u1, u2;
  for (int i = 0; i < 8; ++i) {
    u1[i] = p[i];
    u2[i] = p[8 + i];
  }
  const double n1 = norm_sq(u1);
  if (n1 == 0.0) return line_infinity();
  return line_from_a(mul(conj(u1), u2) * (1.0 / n1));
}

double line_pullback_coeff(const OctLine& line, Mask m) {
  if (mask_degree(m) != 8)
    throw std::invalid_argument("line_pullback_coeff: monomial degree must be 8");
  Eigen::Matrix<double, 8, 8> sub;
  int r = 0;
  for (int idx : mask_indices(m)) sub.row(r++) = line.basis.row(idx);
  return sub.determinant();
}

Eigen::Matrix<double, 16, 1> sample_unit16(std::uint64_t seed, long index) {
  std::uint64_t state =
      seed + static_cast<std::uint64_t>(index + 1) * 0x9E3779B97F4A7C15ull;
  Eigen::Matrix<double, 16, 1> v;
  for (int i = 0; i < 16; i += 2) {
    const double u1 = uniform_open(splitmix64(state));
    const double u2 = uniform_open(splitmix64(state));
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    v[i] = radius * std::cos(angle);
    v[i + 1] = radius * std::sin(angle);
  }
  const double norm = v.norm();
  if (norm == 0.0) return sample_unit16(seed ^ 0xD1B54A32D192ED03ull, index);
  return v / norm;
}

MonteCarloStats monte_carlo(long samples, std::uint64_t seed,
                            const std::vector<Mask>& monomials) {
  if (samples < 1) throw std::invalid_argument("monte_carlo: samples must be >= 1");
  if (monomials.empty()) throw std::invalid_argument("monte_carlo: empty monomial set");

  const std::size_t n = monomials.size();
  std::vector<double> sum(n, 0.0), sum_sq(n, 0.0);
  for (long idx = 0; idx < samples; ++idx) {
    const OctLine line = line_from_point(sample_unit16(seed, idx));
    for (std::size_t t = 0; t < n; ++t) {
      const double c = line_pullback_coeff(line, monomials[t]);
      sum[t] += c;
      sum_sq[t] += c * c;
    }
  }

  MonteCarloStats stats;
  stats.monomials = monomials;
  stats.samples = samples;
  stats.seed = seed;
  stats.mean.resize(n);
  stats.std_error.resize(n);
  for (std::size_t t = 0; t < n; ++t) {
    const double mean = sum[t] / static_cast<double>(samples);
    stats.mean[t] = mean;
    if (samples > 1) {
      const double var =
          (sum_sq[t] - static_cast<double>(samples) * mean * mean) /
          static_cast<double>(samples - 1);
      stats.std_error[t] = std::sqrt(std::max(var, 0.0) / static_cast<double>(samples));
    } else {
      stats.std_error[t] = 0.0;
    }
  }
  return stats;
}

}  // namespace ovf
