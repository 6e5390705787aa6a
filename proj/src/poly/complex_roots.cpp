#include "thuelab/poly/complex_roots.hpp"

#include "thuelab/error.hpp"

#include <algorithm>

namespace thuelab {

Interval RootBall::modulus() const {
  const mpfr_prec_t prec = center.precision();
  Interval c = abs(ComplexInterval::point(center, prec));
  Real lo(prec), hi(prec);
  mpfr_sub(lo.raw(), c.lo().raw(), radius.raw(), MPFR_RNDD);
  mpfr_add(hi.raw(), c.hi().raw(), radius.raw(), MPFR_RNDU);
  if (lo.sign() < 0) lo = Real(prec);
  return Interval::bounds(lo, hi, prec);
}

namespace {

// Horner evaluation of f and f' at z, plus the Horner sum of |c_i| |z|^i
// that bounds the rounding error of the value.
void eval_with_derivative(const std::vector<Real>& c, const Complex& z, Complex& value, Complex& deriv,
                          Real& magnitude) {
  const mpfr_prec_t prec = z.precision();
  value = Complex(prec);
  deriv = Complex(prec);
  magnitude = Real(prec);
  const Real r = abs(z);
  for (std::size_t i = c.size(); i-- > 0;) {
    deriv = deriv * z + value;
    value = value * z;
    value.re += c[i];
    magnitude = magnitude * r + abs(c[i]);
  }
}

Real initial_radius(const ZPoly& f, mpfr_prec_t prec) {
  const int n = f.degree();
  if (f[0] == 0) return Real(1L, prec);
  Real ratio = abs(Real(f[0], prec) / Real(f.leading(), prec));
  Real r(prec);
  mpfr_rootn_ui(r.raw(), ratio.raw(), static_cast<unsigned long>(n), MPFR_RNDN);
  return r;
}

// Aberth-Ehrlich iteration. A root is frozen once its correction is below
// the working precision or |f(z)| is within the rounding noise of Horner's rule.
void aberth(const std::vector<Real>& c, std::vector<Complex>& z, mpfr_prec_t prec, int max_iter) {
  const std::size_t n = z.size();
  const Real tol = ldexp_one(-(static_cast<long>(prec) - 6), prec);
  const Real noise_scale = ldexp_one(-(static_cast<long>(prec) - 4), prec) * Real(static_cast<long>(4 * n + 4), prec);
  const Complex one(Real(1L, prec), Real(prec));
  Complex value(prec), deriv(prec);
  Real magnitude(prec);
  std::vector<char> frozen(n, 0);
  for (int iter = 0; iter < max_iter; ++iter) {
    bool active = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (frozen[i]) continue;
      eval_with_derivative(c, z[i], value, deriv, magnitude);
      if (abs(value) <= noise_scale * magnitude) {
        frozen[i] = 1;
        continue;
      }
      active = true;
      if (deriv.re.is_zero() && deriv.im.is_zero()) {
        // Nudge off a critical point.
        z[i].re += ldexp_one(-20, prec);
        continue;
      }
      Complex ratio = value / deriv;
      Complex sum(prec);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        Complex diff = z[i] - z[j];
        if (diff.re.is_zero() && diff.im.is_zero()) diff.re = ldexp_one(-static_cast<long>(prec) / 2, prec);
        sum += one / diff;
      }
      Complex w = ratio / (one - ratio * sum);
      z[i] -= w;
      if (abs(w) / max(Real(1L, prec), abs(z[i])) < tol) frozen[i] = 1;
    }
    if (!active) return;
  }
}

}  // namespace

std::vector<Complex> approximate_roots(const ZPoly& f, mpfr_prec_t prec, const std::vector<Complex>* start) {
  const int n = f.degree();
  if (n < 1) throw DomainError("root finding needs positive degree");

  mpfr_prec_t work = start ? prec : std::min<mpfr_prec_t>(prec, 64);
  std::vector<Complex> z;
  if (start && start->size() == static_cast<std::size_t>(n)) {
    z = *start;
    for (auto& w : z) w.set_precision(work);
  } else {
    work = std::min<mpfr_prec_t>(prec, 64);
    Real r = initial_radius(f, work);
    Real two_pi = pi(work) * Real(2L, work);
    for (int k = 0; k < n; ++k) {
      Real theta = two_pi * Real(static_cast<long>(k), work) / Real(static_cast<long>(n), work) + Real(0.7, work);
      Complex u = polar_unit(theta);
      z.emplace_back(u.re * r, u.im * r);
    }
  }
  for (;;) {
    std::vector<Real> c;
    c.reserve(f.coeffs().size());
    for (const auto& a : f.coeffs()) c.emplace_back(a, work);
    aberth(c, z, work, work <= 64 ? 500 + 20 * n : 100);
    if (work >= prec) break;
    work = std::min<mpfr_prec_t>(prec, 2 * work);
    for (auto& w : z) w.set_precision(work);
  }
  return z;
}

std::optional<std::vector<RootBall>> certify_roots(const ZPoly& f, const std::vector<Complex>& approx,
                                                   mpfr_prec_t prec) {
  const std::size_t n = approx.size();
  if (static_cast<int>(n) != f.degree()) return std::nullopt;
  std::vector<Interval> coeffs;
  for (const auto& a : f.coeffs()) coeffs.emplace_back(a, prec);
  const Interval lead = abs(coeffs.back());

  std::vector<ComplexInterval> pts;
  pts.reserve(n);
  for (const auto& z : approx) pts.push_back(ComplexInterval::point(z, prec));

  std::vector<Real> radius;
  radius.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ComplexInterval value(Interval(0L, prec), Interval(0L, prec));
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      value = value * pts[i];
      value.re += coeffs[k];
    }
    Interval den = lead;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      den *= abs(pts[i] - pts[j]);
    }
    if (!den.positive()) return std::nullopt;
    Interval w = abs(value) / den * Interval(static_cast<long>(n), prec);
    radius.push_back(w.hi());
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      Interval gap = abs(pts[i] - pts[j]);
      Real sum(prec);
      mpfr_add(sum.raw(), radius[i].raw(), radius[j].raw(), MPFR_RNDU);
      if (!(gap.lo() > sum)) return std::nullopt;
    }
  }
  std::vector<RootBall> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({approx[i], radius[i]});
  return out;
}

std::vector<RootBall> isolate_roots(const ZPoly& f, mpfr_prec_t prec, mpfr_prec_t max_prec) {
  std::vector<Complex> z;
  for (mpfr_prec_t p = std::max<mpfr_prec_t>(prec, 32); p <= max_prec; p *= 2) {
    z = approximate_roots(f, p, z.empty() ? nullptr : &z);
    if (auto balls = certify_roots(f, z, p)) return *balls;
  }
  throw ComputationError("root isolation did not certify within the precision cap");
}

}  // namespace thuelab
