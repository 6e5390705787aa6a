#include "thuelab/proof_chain.hpp"

#include "thuelab/arith.hpp"
#include "thuelab/error.hpp"
#include "thuelab/poly/complex_roots.hpp"

namespace thuelab {

namespace {

Interval min_of(const Interval& a, const Interval& b) { return -max(-a, -b); }

// a < b certainly, a >= b certainly, or neither.
Truth less_than(const Interval& a, const Interval& b) {
  if (certainly_less(a, b)) return Truth::True;
  if (certainly_less_equal(b, a)) return Truth::False;
  return Truth::Unknown;
}

// exp(e log h) for h >= 1.
Interval rpow(const Integer& h, const Rational& e, mpfr_prec_t prec) {
  if (h == 1) return Interval(1L, prec);
  return exp(Interval(e, prec) * log(Interval(h, prec)));
}

}  // namespace

std::string to_string(Truth t) {
  switch (t) {
    case Truth::True: return "true";
    case Truth::False: return "false";
    case Truth::Unknown: return "unknown";
    case Truth::Skipped: return "skipped";
    case Truth::NotApplicable: return "n/a";
  }
  return "unknown";
}

bool ChainReport::implication_violated() const {
  return (roth_branch == Truth::True && bound_on_H == Truth::False) ||
         (bound_on_H == Truth::True && to_be_applied == Truth::False);
}

ChainReport check_proof_chain(const BinaryForm& F, std::uint64_t p, const Rational& lambda, const Solution& sol,
                              const Interval& C0, mpfr_prec_t prec) {
  if (F.leading() == 0 || F.trailing() == 0) throw DomainError("proof chain needs c_0 c_d != 0");
  if (lambda < 0) throw DomainError("lambda must be non-negative");
  const int d = F.degree();
  const Integer pz = static_cast<unsigned long>(p);
  const Integer H = height_point(sol.x, sol.y);
  if (H == 0) throw DomainError("(0, 0) is not a solution");
  const Rational exponent = Rational(d) - Rational(41, 20);

  ChainReport rep;
  rep.mu = exponent / (1 + lambda);
  rep.C0 = C0;

  const ZPoly f = F.dehomogenize();
  const Interval one(1L, prec);
  const Interval ix(sol.x, prec), iy(sol.y, prec);
  const Interval ax = abs(ix), ay = abs(iy);
  const Interval N(sol.N, prec);
  const Interval roth_threshold = one / rpow(H, Rational(41, 20), prec);
  const bool lm_defined = sol.x != 0 && sol.y != 0;
  const Interval lm_bound = lm_defined ? C0 * N / pow(Interval(H, prec), static_cast<unsigned long>(d)) : one;

  bool all_above = true, some_below = false, lm_all_above = true, lm_some_below = false;
  for (const auto& ball : isolate_roots(f, prec)) {
    const Interval r = Interval::bounds(-ball.radius, ball.radius, prec);
    ComplexInterval alpha = ComplexInterval::point(ball.center, prec);
    alpha.re += r;
    alpha.im += r;
    // |alpha - x/y| = |x - alpha y| / |y| and |1/alpha - y/x| = |x - alpha y| / (|x| |alpha|).
    const Interval dist = abs(ComplexInterval(ix, Interval(0L, prec)) - alpha * ComplexInterval(iy, Interval(0L, prec)));
    std::optional<Interval> m;
    if (sol.y != 0) m = dist / ay;
    if (sol.x != 0) {
      const Interval other = dist / (ax * abs(alpha));
      m = m ? min_of(*m, other) : other;
    }
    if (!m) throw DomainError("(0, 0) is not a solution");
    if (!certainly_less(roth_threshold, *m)) all_above = false;
    if (certainly_less_equal(*m, roth_threshold)) some_below = true;
    if (lm_defined) {
      if (certainly_less_equal(*m, lm_bound)) lm_some_below = true;
      if (!certainly_less(lm_bound, *m)) lm_all_above = false;
    }
  }
  rep.roth_branch = some_below ? Truth::False : all_above ? Truth::True : Truth::Unknown;
  rep.lewis_mahler = !lm_defined      ? Truth::NotApplicable
                     : lm_some_below  ? Truth::True
                     : lm_all_above   ? Truth::False
                                      : Truth::Unknown;

  const Interval pk = pow(Interval(pz, prec), static_cast<unsigned long>(sol.z));
  const Interval C0_root = pow(C0, Interval(1 / (1 + lambda), prec));
  if (rep.roth_branch == Truth::False) {
    rep.bound_on_H = Truth::Skipped;
    rep.to_be_applied = Truth::Skipped;
  } else {
    rep.bound_on_H = less_than(rpow(H, exponent, prec), C0 * N);
    rep.to_be_applied = less_than(rpow(H, rep.mu, prec), C0_root * pk);
  }

  const Integer D = discriminant(F);
  rep.C1_stated = C0_root * Interval(Integer(abs(F.leading())), prec) * sqrt(Interval(Integer(abs(D)), prec));
  const unsigned long vc = vp_unchecked(F.leading(), pz);
  const unsigned long vD = vp_unchecked(D, pz);
  const Interval lp = log(Interval(pz, prec));
  rep.C1_tight = C0_root * exp(Interval(Rational(static_cast<long>(2 * vc + vD), 2), prec) * lp);

  try {
    const NearestRoot nr = thunder_nearest_root(F, p, sol.x, sol.y, static_cast<int>(std::max(1L, sol.z)));
    rep.thunder_valuation = nr.valuation;
    if (nr.valuation.is_infinite()) {
      rep.thunder_stated = rep.thunder_tight = Truth::True;
    } else {
      // p^(-v) < C1 / H^mu  <=>  H^mu < C1 p^v.
      const Interval pv = exp(Interval(nr.valuation.value(), prec) * lp);
      const Interval hmu = rpow(H, rep.mu, prec);
      rep.thunder_stated = less_than(hmu, rep.C1_stated * pv);
      rep.thunder_tight = less_than(hmu, rep.C1_tight * pv);
    }
  } catch (const DomainError& e) {
    rep.thunder_note = e.what();
  }
  return rep;
}

}  // namespace thuelab
