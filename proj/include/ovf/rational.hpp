#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>

namespace ovf {

// Exact rational scalar used throughout the exact modules. Thin value
// wrapper over GMP's mpq_class: every operator returns a plain Rational,
// so the type composes with Eigen and the sparse form containers without
// gmpxx expression templates leaking into deduced types.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }
  explicit Rational(const std::string& s) : v_(s) {
    if (v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::invalid_argument("Rational: division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }
  Rational operator-() const { return Rational(mpq_class(-v_)); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return cmp(a.v_, b.v_) <=> 0;
  }

  friend Rational abs(const Rational& a) { return Rational(mpq_class(::abs(a.v_))); }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  // Requires an integer value that fits in long.
  long to_long() const {
    if (!is_integer() || !v_.get_num().fits_slong_p())
      throw std::range_error("Rational: not a small integer");
    return v_.get_num().get_si();
  }
  double to_double() const { return v_.get_d(); }

  // "p" for integers, "p/q" otherwise.
  std::string str() const { return v_.get_str(); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.v_;
  }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline Rational frac(long num, long den) { return Rational(num, den); }

using VectorQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using MatrixQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

}  // namespace ovf

namespace Eigen {

template <>
struct NumTraits<ovf::Rational> : GenericNumTraits<ovf::Rational> {
  typedef ovf::Rational Real;
  typedef ovf::Rational NonInteger;
  typedef ovf::Rational Nested;
  static inline Real epsilon() { return ovf::Rational(0); }
  static inline Real dummy_precision() { return ovf::Rational(0); }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen
