#include "thuelab/numeric/real.hpp"

#include <algorithm>
#include <memory>

namespace thuelab {

Real::Real(mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_zero(value_, 1);
}

Real::Real(long v, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_si(value_, v, MPFR_RNDN);
}

Real::Real(double v, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_d(value_, v, MPFR_RNDN);
}

Real::Real(const Integer& v, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_z(value_, v.get_mpz_t(), MPFR_RNDN);
}

Real::Real(const Rational& v, mpfr_prec_t prec) {
  mpfr_init2(value_, prec);
  mpfr_set_q(value_, v.get_mpq_t(), MPFR_RNDN);
}

Real::Real(const Real& other) {
  mpfr_init2(value_, other.precision());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(value_, other.precision());
  mpfr_swap(value_, other.value_);
}

Real& Real::operator=(const Real& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

Real::~Real() { mpfr_clear(value_); }

void Real::set_precision(mpfr_prec_t prec) { mpfr_prec_round(value_, prec, MPFR_RNDN); }

std::string Real::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg", digits, value_);
  std::unique_ptr<char, decltype(&mpfr_free_str)> guard(buf, &mpfr_free_str);
  return std::string(buf);
}

namespace {

void widen_to(Real& a, const Real& b) {
  if (b.precision() > a.precision()) a.set_precision(b.precision());
}

}  // namespace

Real& Real::operator+=(const Real& b) {
  widen_to(*this, b);
  mpfr_add(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator-=(const Real& b) {
  widen_to(*this, b);
  mpfr_sub(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator*=(const Real& b) {
  widen_to(*this, b);
  mpfr_mul(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

Real& Real::operator/=(const Real& b) {
  widen_to(*this, b);
  mpfr_div(value_, value_, b.value_, MPFR_RNDN);
  return *this;
}

Real abs(const Real& a) {
  Real r(a.precision());
  mpfr_abs(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real sqrt(const Real& a) {
  Real r(a.precision());
  mpfr_sqrt(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real log(const Real& a) {
  Real r(a.precision());
  mpfr_log(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real exp(const Real& a) {
  Real r(a.precision());
  mpfr_exp(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real pow(const Real& a, long n) {
  Real r(a.precision());
  mpfr_pow_si(r.raw(), a.raw(), n, MPFR_RNDN);
  return r;
}

Real max(const Real& a, const Real& b) { return a < b ? b : a; }

Real pi(mpfr_prec_t prec) {
  Real r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}

Real ldexp_one(long e, mpfr_prec_t prec) {
  Real r(1L, prec);
  mpfr_mul_2si(r.raw(), r.raw(), e, MPFR_RNDN);
  return r;
}

Complex& Complex::operator+=(const Complex& b) {
  re += b.re;
  im += b.im;
  return *this;
}

Complex& Complex::operator-=(const Complex& b) {
  re -= b.re;
  im -= b.im;
  return *this;
}

Complex& Complex::operator*=(const Complex& b) {
  Real r = re * b.re - im * b.im;
  Real i = re * b.im + im * b.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Complex& Complex::operator/=(const Complex& b) {
  Real den = norm(b);
  Real r = (re * b.re + im * b.im) / den;
  Real i = (im * b.re - re * b.im) / den;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z) {
  Real r(z.precision());
  mpfr_hypot(r.raw(), z.re.raw(), z.im.raw(), MPFR_RNDN);
  return r;
}

Complex polar_unit(const Real& theta) {
  Real c(theta.precision());
  Real s(theta.precision());
  mpfr_sin_cos(s.raw(), c.raw(), theta.raw(), MPFR_RNDN);
  return Complex(std::move(c), std::move(s));
}

}  // namespace thuelab
