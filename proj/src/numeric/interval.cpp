#include "thuelab/numeric/interval.hpp"

#include "thuelab/error.hpp"

#include <algorithm>

namespace thuelab {

namespace {

mpfr_prec_t wider(const Interval& a, const Interval& b) {
  return std::max(a.precision(), b.precision());
}

// min/max over four directed products or quotients.
using BinaryOp = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_srcptr, mpfr_rnd_t);

void four_way(BinaryOp op, const Real& al, const Real& ah, const Real& bl, const Real& bh, Real& lo,
              Real& hi) {
  const mpfr_prec_t prec = lo.precision();
  Real t(prec);
  const Real* as[2] = {&al, &ah};
  const Real* bs[2] = {&bl, &bh};
  bool first = true;
  for (const Real* x : as) {
    for (const Real* y : bs) {
      op(t.raw(), x->raw(), y->raw(), MPFR_RNDD);
      if (first || t < lo) lo = t;
      op(t.raw(), x->raw(), y->raw(), MPFR_RNDU);
      if (first || t > hi) hi = t;
      first = false;
    }
  }
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) : lo_(prec), hi_(prec) {}

Interval::Interval(long v, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
  mpfr_set_si(lo_.raw(), v, MPFR_RNDD);
  mpfr_set_si(hi_.raw(), v, MPFR_RNDU);
}

Interval::Interval(const Integer& v, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
  mpfr_set_z(lo_.raw(), v.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_.raw(), v.get_mpz_t(), MPFR_RNDU);
}

Interval::Interval(const Rational& v, mpfr_prec_t prec) : lo_(prec), hi_(prec) {
  mpfr_set_q(lo_.raw(), v.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_.raw(), v.get_mpq_t(), MPFR_RNDU);
}

Interval Interval::point(const Real& v, mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_set(r.lo_.raw(), v.raw(), MPFR_RNDD);
  mpfr_set(r.hi_.raw(), v.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::bounds(const Real& lo, const Real& hi, mpfr_prec_t prec) {
  if (hi < lo) throw DomainError("interval bounds out of order");
  Interval r(prec);
  mpfr_set(r.lo_.raw(), lo.raw(), MPFR_RNDD);
  mpfr_set(r.hi_.raw(), hi.raw(), MPFR_RNDU);
  return r;
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_.raw(), MPFR_RNDD);
  mpfr_const_pi(r.hi_.raw(), MPFR_RNDU);
  return r;
}

double Interval::mid() const {
  Real m = lo_ + hi_;
  mpfr_div_2ui(m.raw(), m.raw(), 1, MPFR_RNDN);
  return m.to_double();
}

Real Interval::width() const {
  Real w(precision());
  mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  return w;
}

Real Interval::relative_width() const {
  if (!positive()) throw DomainError("relative width requires a positive interval");
  Real w(precision());
  mpfr_div(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
  mpfr_sub_ui(w.raw(), w.raw(), 1, MPFR_RNDU);
  return w;
}

bool Interval::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_.raw(), q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_.raw(), q.get_mpq_t()) >= 0;
}

bool Interval::contains(const Interval& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }

Interval& Interval::operator+=(const Interval& b) {
  const mpfr_prec_t prec = wider(*this, b);
  Real lo(prec), hi(prec);
  mpfr_add(lo.raw(), lo_.raw(), b.lo_.raw(), MPFR_RNDD);
  mpfr_add(hi.raw(), hi_.raw(), b.hi_.raw(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator-=(const Interval& b) {
  const mpfr_prec_t prec = wider(*this, b);
  Real lo(prec), hi(prec);
  mpfr_sub(lo.raw(), lo_.raw(), b.hi_.raw(), MPFR_RNDD);
  mpfr_sub(hi.raw(), hi_.raw(), b.lo_.raw(), MPFR_RNDU);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator*=(const Interval& b) {
  const mpfr_prec_t prec = wider(*this, b);
  Real lo(prec), hi(prec);
  four_way(&mpfr_mul, lo_, hi_, b.lo_, b.hi_, lo, hi);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval& Interval::operator/=(const Interval& b) {
  if (b.contains_zero()) throw ComputationError("interval division by an interval containing zero");
  const mpfr_prec_t prec = wider(*this, b);
  Real lo(prec), hi(prec);
  four_way(&mpfr_div, lo_, hi_, b.lo_, b.hi_, lo, hi);
  lo_ = std::move(lo);
  hi_ = std::move(hi);
  return *this;
}

Interval operator-(const Interval& a) { return Interval::bounds(-a.hi(), -a.lo(), a.precision()); }

std::string Interval::to_string(int digits) const {
  return "[" + lo_.to_string(digits) + ", " + hi_.to_string(digits) + "]";
}

Interval sqr(const Interval& a) {
  Interval m = abs(a);
  const mpfr_prec_t prec = a.precision();
  Real lo(prec), hi(prec);
  mpfr_sqr(lo.raw(), m.lo().raw(), MPFR_RNDD);
  mpfr_sqr(hi.raw(), m.hi().raw(), MPFR_RNDU);
  return Interval::bounds(lo, hi, prec);
}

Interval sqrt(const Interval& a) {
  if (a.negative()) throw DomainError("sqrt of a negative interval");
  const mpfr_prec_t prec = a.precision();
  Real lo(prec), hi(prec);
  if (a.lo().sign() > 0) mpfr_sqrt(lo.raw(), a.lo().raw(), MPFR_RNDD);
  mpfr_sqrt(hi.raw(), a.hi().raw(), MPFR_RNDU);
  return Interval::bounds(lo, hi, prec);
}

Interval log(const Interval& a) {
  if (!a.positive()) throw DomainError("log of a non-positive interval");
  const mpfr_prec_t prec = a.precision();
  Real lo(prec), hi(prec);
  mpfr_log(lo.raw(), a.lo().raw(), MPFR_RNDD);
  mpfr_log(hi.raw(), a.hi().raw(), MPFR_RNDU);
  return Interval::bounds(lo, hi, prec);
}

Interval exp(const Interval& a) {
  const mpfr_prec_t prec = a.precision();
  Real lo(prec), hi(prec);
  mpfr_exp(lo.raw(), a.lo().raw(), MPFR_RNDD);
  mpfr_exp(hi.raw(), a.hi().raw(), MPFR_RNDU);
  return Interval::bounds(lo, hi, prec);
}

Interval pow(const Interval& a, unsigned long n) {
  Interval result(1L, a.precision());
  Interval base = a;
  while (n > 0) {
    if (n & 1UL) result *= base;
    n >>= 1;
    if (n > 0) base = sqr(base);
  }
  return result;
}

Interval pow(const Interval& a, const Interval& b) { return exp(b * log(a)); }

Interval abs(const Interval& a) {
  const mpfr_prec_t prec = a.precision();
  if (a.lo().sign() >= 0) return a;
  if (a.hi().sign() <= 0) return -a;
  Real zero(prec);
  return Interval::bounds(zero, max(-a.lo(), a.hi()), prec);
}

Interval max(const Interval& a, const Interval& b) {
  return Interval::bounds(max(a.lo(), b.lo()), max(a.hi(), b.hi()), wider(a, b));
}

Interval hull(const Interval& a, const Interval& b) {
  const Real& lo = a.lo() < b.lo() ? a.lo() : b.lo();
  return Interval::bounds(lo, max(a.hi(), b.hi()), wider(a, b));
}

Integer certified_floor(const Interval& a) {
  Integer lo, hi;
  mpfr_get_z(lo.get_mpz_t(), a.lo().raw(), MPFR_RNDD);
  mpfr_get_z(hi.get_mpz_t(), a.hi().raw(), MPFR_RNDD);
  if (lo != hi) throw ComputationError("floor undecided: interval straddles an integer; increase precision");
  return lo;
}

ComplexInterval ComplexInterval::point(const Complex& z, mpfr_prec_t prec) {
  return ComplexInterval(Interval::point(z.re, prec), Interval::point(z.im, prec));
}

ComplexInterval& ComplexInterval::operator+=(const ComplexInterval& b) {
  re += b.re;
  im += b.im;
  return *this;
}

ComplexInterval& ComplexInterval::operator-=(const ComplexInterval& b) {
  re -= b.re;
  im -= b.im;
  return *this;
}

ComplexInterval& ComplexInterval::operator*=(const ComplexInterval& b) {
  Interval r = re * b.re - im * b.im;
  Interval i = re * b.im + im * b.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

Interval abs(const ComplexInterval& z) { return sqrt(sqr(z.re) + sqr(z.im)); }

}  // namespace thuelab
