#include "thuelab/bounds.hpp"

#include "thuelab/arith.hpp"
#include "thuelab/error.hpp"

#include <functional>

namespace thuelab {

namespace {

constexpr mpfr_prec_t kStartPrec = 64;
constexpr mpfr_prec_t kMaxPrec = 1 << 14;

// Evaluates fn at doubling precision until the width is at most tol times
// max(1, |value|).
Interval refine(const std::function<Interval(mpfr_prec_t)>& fn, const Rational& tol, const char* what) {
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    Interval v = fn(prec);
    const Real scale = max(Real(1L, prec), max(abs(v.lo()), abs(v.hi())));
    if (v.width() <= Real(tol, prec) * scale) return v;
  }
  throw ComputationError(std::string(what) + ": enclosure did not reach the requested width");
}

Interval inner_at(const Integer& d, const Rational& lambda, mpfr_prec_t prec) {
  const Rational mu = mu_of(d, lambda);
  const Rational gap = mu - Rational(d, 2);
  const Interval num = Interval(Rational(1151, 100), prec) + Interval(Rational(3, 2), prec) * log(Interval(d, prec)) +
                       log(Interval(mu, prec));
  return Interval(1L, prec) + num / log(Interval(gap, prec));
}

void require_inner_domain(const Integer& d, const Rational& lambda) {
  if (d < 7) throw DomainError("Theorem 2 needs d >= 7");
  if (lambda < 0) throw DomainError("lambda must be non-negative");
  if (lambda >= theorem2_lambda_limit(d)) throw DomainError("lambda must be below 1 - 8.1/(d + 2)");
}

}  // namespace

const Rational& default_bound_tolerance() {
  static const Rational tol(Integer(1), ipow(Integer(10), 30));
  return tol;
}

Interval f_of_d(const Integer& d, const Rational& tol) {
  if (d < 7) throw DomainError("f(d) needs d >= 7");
  return refine(
      [&d](mpfr_prec_t prec) {
        const Interval id(d, prec);
        const Interval lead(Rational(20 * d - 41, 80), prec);
        const Interval root = sqrt(Interval(Integer(d * d + 16 * d), prec)) / id;
        return lead * (root - Interval(1L, prec)) - Interval(1L, prec);
      },
      tol, "f(d)");
}

Rational mu_of(const Integer& d, const Rational& lambda) {
  if (d < 3) throw DomainError("mu needs d >= 3");
  if (lambda < 0) throw DomainError("lambda must be non-negative");
  Rational mu = (Rational(d) - Rational(41, 20)) / (1 + lambda);
  mu.canonicalize();
  return mu;
}

Rational theorem2_lambda_limit(const Integer& d) {
  Rational r = 1 - Rational(Integer(81), Integer(10 * (d + 2)));
  r.canonicalize();
  return r;
}

Rational g_lambda(const Integer& d) {
  Rational r = Rational(1, 2) - Rational(Integer(81), Integer(20 * (d + 2)));
  r.canonicalize();
  return r;
}

Interval theorem2_inner(const Integer& d, const Rational& lambda, const Rational& tol) {
  require_inner_domain(d, lambda);
  return refine([&](mpfr_prec_t prec) { return inner_at(d, lambda, prec); }, tol, "Theorem 2 bound");
}

Interval g_of_d(const Integer& d, const Rational& tol) { return theorem2_inner(d, g_lambda(d), tol); }

Integer theorem2_bound(const Integer& d, const Rational& lambda, const Integer& aut) {
  require_inner_domain(d, lambda);
  if (aut < 1) throw DomainError("automorphism group cardinality must be at least 1");
  for (mpfr_prec_t prec = kStartPrec; prec <= kMaxPrec; prec *= 2) {
    try {
      return aut * certified_floor(inner_at(d, lambda, prec));
    } catch (const ComputationError&) {
    }
  }
  throw ComputationError("Theorem 2 bound straddles an integer; increase precision");
}

Interval compute_C0(int d, const Interval& mahler, const Integer& disc) {
  if (d < 2) throw DomainError("C0 needs degree at least 2");
  if (disc == 0) throw DomainError("C0 needs a nonzero discriminant");
  const mpfr_prec_t prec = mahler.precision();
  Interval c = pow(Interval(2L, prec), static_cast<unsigned long>(d - 1));
  c *= pow(sqrt(Interval(static_cast<long>(d), prec)), static_cast<unsigned long>(d - 1));
  c *= pow(mahler, static_cast<unsigned long>(d - 2));
  return c / sqrt(Interval(Integer(abs(disc)), prec));
}

namespace {

void require_C0_form(const BinaryForm& F) {
  if (content(F) != 1) throw DomainError("content must be one");
  if (F.leading() == 0 || F.trailing() == 0) throw DomainError("C0 needs c_0 c_d != 0");
  if (is_irreducible(F).status == Irreducibility::Reducible) throw DomainError("C0 needs an irreducible form");
}

}  // namespace

Interval compute_C0(const BinaryForm& F) {
  require_C0_form(F);
  return compute_C0(F.degree(), mahler_measure(F), discriminant(F));
}

Interval compute_A(int d, const Interval& mahler) {
  const mpfr_prec_t prec = mahler.precision();
  return Interval(250000L, prec) * (log(mahler) + Interval(Rational(d, 2), prec));
}

Interval compute_A(const BinaryForm& F) {
  require_C0_form(F);
  return compute_A(F.degree(), mahler_measure(F));
}

Interval evertse_log10(const Integer& d, const Integer& t, const Rational& tol) {
  if (d < 3) throw DomainError("Evertse bound needs d >= 3");
  if (t < 0) throw DomainError("t must be non-negative");
  const Integer e = d * d * d * (2 * t + 3);
  return refine(
      [&e](mpfr_prec_t prec) {
        const Interval ln10 = log(Interval(10L, prec));
        return (log(Interval(2L, prec)) + Interval(e, prec) * log(Interval(7L, prec))) / ln10;
      },
      tol, "Evertse bound");
}

BoundReport make_bound_report(const Integer& d, const Rational& lambda, const Integer& aut, const BinaryForm* F) {
  BoundReport r;
  r.d = d;
  r.lambda = lambda;
  r.aut_cardinality = aut;
  r.mu = mu_of(d, lambda);
  r.lambda_limit = theorem2_lambda_limit(d);
  r.lambda_in_range = lambda >= 0 && lambda < r.lambda_limit;
  r.mu_gap = Rational(d, 2) + 1 < r.mu && r.mu < Rational(d);
  r.evertse_log10 = evertse_log10(d, 1);
  if (d >= 7) {
    r.f_d = f_of_d(d);
    if (r.lambda_in_range) {
      r.g_like = theorem2_inner(d, lambda);
      r.theorem2_count = theorem2_bound(d, lambda, aut);
    } else {
      r.notes.push_back("lambda is not below 1 - 8.1/(d + 2); Theorem 2 does not apply");
    }
  } else {
    r.notes.push_back("d < 7: f(d) and the Theorem 2 count are not defined");
  }
  if (F != nullptr) {
    if (F->degree() != d) throw DomainError("form degree differs from d");
    r.A = compute_A(*F);
  }
  return r;
}

Corollary2Check corollary2_discrepancy(const Integer& d) {
  Corollary2Check c;
  c.with_g_lambda = theorem2_bound(d, g_lambda(d), 2);
  Rational stated = 1 - Rational(Integer(17), Integer(2 * (d + 2)));
  stated.canonicalize();
  c.with_stated_lambda = theorem2_bound(d, stated, 2);
  c.inner_stated = theorem2_inner(d, stated);
  return c;
}

}  // namespace thuelab
