#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace thuelab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Owning wrapper around an mpfr_t. Arithmetic rounds to nearest; results
/// carry the larger of the operand precisions.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 53);
  Real(long v, mpfr_prec_t prec);
  Real(double v, mpfr_prec_t prec);
  Real(const Integer& v, mpfr_prec_t prec);
  Real(const Rational& v, mpfr_prec_t prec);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  mpfr_ptr raw() { return value_; }
  mpfr_srcptr raw() const { return value_; }
  mpfr_prec_t precision() const { return mpfr_get_prec(value_); }

  /// Changes precision, rounding the current value to nearest.
  void set_precision(mpfr_prec_t prec);

  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }
  std::string to_string(int digits = 20) const;

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }

  Real& operator+=(const Real& b);
  Real& operator-=(const Real& b);
  Real& operator*=(const Real& b);
  Real& operator/=(const Real& b);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }
  friend Real operator-(Real a) {
    mpfr_neg(a.value_, a.value_, MPFR_RNDN);
    return a;
  }

  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.value_, b.value_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.value_, b.value_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.value_, b.value_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.value_, b.value_) != 0; }
  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.value_, b.value_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }

 private:
  mpfr_t value_;
};

Real abs(const Real& a);
Real sqrt(const Real& a);
Real log(const Real& a);
Real exp(const Real& a);
Real pow(const Real& a, long n);
Real max(const Real& a, const Real& b);
Real pi(mpfr_prec_t prec);
/// 2^e at the given precision.
Real ldexp_one(long e, mpfr_prec_t prec);

struct Complex {
  Real re;
  Real im;

  explicit Complex(mpfr_prec_t prec = 53) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  mpfr_prec_t precision() const { return re.precision(); }
  void set_precision(mpfr_prec_t prec) {
    re.set_precision(prec);
    im.set_precision(prec);
  }

  Complex& operator+=(const Complex& b);
  Complex& operator-=(const Complex& b);
  Complex& operator*=(const Complex& b);
  Complex& operator/=(const Complex& b);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
};

/// |z|^2
Real norm(const Complex& z);
Real abs(const Complex& z);
/// exp(i*theta)
Complex polar_unit(const Real& theta);

}  // namespace thuelab
