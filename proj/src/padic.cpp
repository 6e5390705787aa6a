#include "thuelab/padic.hpp"

#include "thuelab/arith.hpp"
#include "thuelab/error.hpp"
#include "thuelab/poly/fppoly.hpp"

#include <algorithm>

namespace thuelab {

Integer Valuation::floor() const {
  if (infinite_) throw DomainError("floor of an infinite valuation");
  Integer q;
  mpz_fdiv_q_2exp(q.get_mpz_t(), twice_.get_mpz_t(), 1);
  return q;
}

Rational Valuation::value() const {
  if (infinite_) throw DomainError("value of an infinite valuation");
  Rational v(twice_, 2);
  v.canonicalize();
  return v;
}

std::string Valuation::to_string() const {
  if (infinite_) return "inf";
  return thuelab::to_string(value());
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.infinite_ || b.infinite_) return Valuation::infinity();
  return Valuation(a.twice_ + b.twice_, false);
}

Valuation operator-(const Valuation& a, const Valuation& b) {
  if (b.infinite_) throw DomainError("cannot subtract an infinite valuation");
  if (a.infinite_) return a;
  return Valuation(a.twice_ - b.twice_, false);
}

Valuation half_of(const Valuation& a) {
  if (a.infinite_) return a;
  // value / 2 must stay a half-integer, so twice must be even.
  if (a.twice_ % 2 != 0) throw DomainError("half of a half-integer valuation is not representable");
  return Valuation(a.twice_ / 2, false);
}

bool operator<(const Valuation& a, const Valuation& b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.twice_ < b.twice_;
}

unsigned long vp_unchecked(const Integer& n, const Integer& p) {
  if (n == 0) return 0;
  Integer m = n;
  return mpz_remove(m.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
}

Valuation vp(const Integer& n, const Integer& p) {
  if (!is_prime(p)) throw DomainError("p = " + to_string(p) + " is not prime");
  if (n == 0) return Valuation::infinity();
  return Valuation::integer(vp_unchecked(n, p));
}

Integer PadicRoot::modulus() const { return ipow(p, static_cast<unsigned long>(k)); }

namespace {

void require_prime(std::uint64_t p) {
  if (p >= (1ULL << 63)) throw DomainError("prime must be below 2^63");
  if (!is_prime(Integer(std::to_string(p)))) throw DomainError("p = " + std::to_string(p) + " is not prime");
}

Integer to_integer(std::uint64_t v) { return Integer(std::to_string(v)); }

Integer mod_positive(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

}  // namespace

std::vector<std::uint64_t> roots_mod_p(const BinaryForm& F, std::uint64_t p) {
  require_prime(p);
  if (content(F) % to_integer(p) == 0) throw DomainError("p divides the content of F");
  fp::Poly f = fp::reduce(F.dehomogenize(), p);
  if (fp::degree(f) < 1) return {};
  auto r = fp::roots(f, p);
  std::sort(r.begin(), r.end());
  return r;
}

PadicRoot hensel_lift(const BinaryForm& F, std::uint64_t p, const Integer& r0, int k) {
  require_prime(p);
  if (k < 1) throw DomainError("precision k must be at least 1");
  const Integer P = to_integer(p);
  const ZPoly f = F.dehomogenize();
  const ZPoly df = derivative(f);
  Integer r = mod_positive(r0, P);
  if (evaluate(f, r) % P != 0) throw DomainError("r0 is not a root of F(x, 1) modulo p");
  if (evaluate(df, r) % P == 0) throw DomainError("singular root; Hensel inapplicable");
  int have = 1;
  while (have < k) {
    const int next = std::min(2 * have, k);
    const Integer m = ipow(P, static_cast<unsigned long>(next));
    Integer inv;
    const Integer d = mod_positive(evaluate(df, r), m);
    mpz_invert(inv.get_mpz_t(), d.get_mpz_t(), m.get_mpz_t());
    r = mod_positive(r - evaluate(f, r) * inv, m);
    have = next;
  }
  return {P, k, r, true};
}

NearestRoot thunder_nearest_root(const BinaryForm& F, std::uint64_t p, const Integer& x, const Integer& y, int k) {
  require_prime(p);
  if (k < 1) throw DomainError("precision k must be at least 1");
  if (gcd(x, y) != 1) throw DomainError("(x, y) must be primitive");
  const Integer P = to_integer(p);
  const BinaryForm G = F.leading() != 0 ? F : unimodular_shift(F).form;
  if (discriminant(G) % P == 0) throw DomainError("p divides D(F); uniqueness not guaranteed");
  const Integer value = evaluate(F, x, y);
  if (value % P != 0) throw DomainError("precondition violated: p does not divide F(x, y)");
  if (y % P == 0) {
    // Then F(x, y) = c_d x^d mod p with p not dividing x.
    throw DomainError("p divides y and c_d; no finite nearest root");
  }
  Integer yinv;
  mpz_invert(yinv.get_mpz_t(), Integer(mod_positive(y, P)).get_mpz_t(), P.get_mpz_t());
  const Integer r0 = mod_positive(x * yinv, P);

  const long vF = value == 0 ? -1 : static_cast<long>(vp_unchecked(value, P));
  long K = std::max<long>(k, vF < 0 ? 2L * k : vF + 1);
  // vp(x - alpha y) is finite unless x / y is itself a root; cap the search.
  const long cap = std::max<long>(4 * K, 256);
  for (;;) {
    PadicRoot lifted = hensel_lift(F, p, r0, static_cast<int>(K));
    const Integer m = lifted.modulus();
    const Integer diff = mod_positive(x - lifted.r * y, m);
    if (diff != 0) {
      const unsigned long v = vp_unchecked(diff, P);
      PadicRoot out{P, k, mod_positive(lifted.r, ipow(P, static_cast<unsigned long>(k))), true};
      return {out, Valuation::integer(v)};
    }
    if (K >= cap) {
      PadicRoot out{P, k, mod_positive(lifted.r, ipow(P, static_cast<unsigned long>(k))), true};
      return {out, Valuation::infinity()};
    }
    K *= 2;
  }
}

}  // namespace thuelab
