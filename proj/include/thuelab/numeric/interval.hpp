#pragma once

#include "thuelab/numeric/real.hpp"

#include <string>

namespace thuelab {

/// Closed interval [lo, hi] with outward (directed) rounding on every
/// operation, so the exact result of the real operation on any points of the
/// operands is always enclosed.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128);
  Interval(long v, mpfr_prec_t prec);
  Interval(const Integer& v, mpfr_prec_t prec);
  Interval(const Rational& v, mpfr_prec_t prec);
  /// Exact point interval from an mpfr value (widened if prec is smaller).
  static Interval point(const Real& v, mpfr_prec_t prec);
  /// Hull of two reals given as bounds; requires lo <= hi.
  static Interval bounds(const Real& lo, const Real& hi, mpfr_prec_t prec);
  static Interval pi(mpfr_prec_t prec);

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  mpfr_prec_t precision() const { return lo_.precision(); }

  double lower() const { return mpfr_get_d(lo_.raw(), MPFR_RNDD); }
  double upper() const { return mpfr_get_d(hi_.raw(), MPFR_RNDU); }
  double mid() const;

  /// hi - lo, rounded up.
  Real width() const;
  /// hi / lo - 1 for a positive interval, rounded up.
  Real relative_width() const;

  bool contains(const Rational& q) const;
  bool contains(const Interval& o) const;
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  bool positive() const { return lo_.sign() > 0; }
  bool negative() const { return hi_.sign() < 0; }

  Interval& operator+=(const Interval& b);
  Interval& operator-=(const Interval& b);
  Interval& operator*=(const Interval& b);
  Interval& operator/=(const Interval& b);

  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(Interval a, const Interval& b) { return a *= b; }
  friend Interval operator/(Interval a, const Interval& b) { return a /= b; }
  friend Interval operator-(const Interval& a);

  std::string to_string(int digits = 17) const;

 private:
  Real lo_;
  Real hi_;
};

Interval sqr(const Interval& a);
Interval sqrt(const Interval& a);
Interval log(const Interval& a);
Interval exp(const Interval& a);
/// a^n for integer n >= 0.
Interval pow(const Interval& a, unsigned long n);
/// a^b = exp(b log a) for positive a.
Interval pow(const Interval& a, const Interval& b);
Interval abs(const Interval& a);
Interval max(const Interval& a, const Interval& b);
Interval hull(const Interval& a, const Interval& b);

/// a is certainly smaller than b (a.hi < b.lo).
inline bool certainly_less(const Interval& a, const Interval& b) { return a.hi() < b.lo(); }
inline bool certainly_less_equal(const Interval& a, const Interval& b) { return a.hi() <= b.lo(); }

/// floor of the enclosed value; throws ComputationError when the interval
/// straddles an integer.
Integer certified_floor(const Interval& a);

/// Enclosing rectangle in the complex plane.
struct ComplexInterval {
  Interval re;
  Interval im;

  explicit ComplexInterval(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  ComplexInterval(Interval r, Interval i) : re(std::move(r)), im(std::move(i)) {}
  static ComplexInterval point(const Complex& z, mpfr_prec_t prec);

  ComplexInterval& operator+=(const ComplexInterval& b);
  ComplexInterval& operator-=(const ComplexInterval& b);
  ComplexInterval& operator*=(const ComplexInterval& b);

  friend ComplexInterval operator+(ComplexInterval a, const ComplexInterval& b) { return a += b; }
  friend ComplexInterval operator-(ComplexInterval a, const ComplexInterval& b) { return a -= b; }
  friend ComplexInterval operator*(ComplexInterval a, const ComplexInterval& b) { return a *= b; }
};

/// Enclosure of |z| over the rectangle.
Interval abs(const ComplexInterval& z);

}  // namespace thuelab
