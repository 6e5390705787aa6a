#pragma once

#include "thuelab/forms.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace thuelab {

/// Non-negative half-integer or +infinity, stored as twice its value.
class Valuation {
 public:
  Valuation() = default;
  static Valuation integer(const Integer& v) { return Valuation(2 * v, false); }
  static Valuation half(const Integer& twice) { return Valuation(twice, false); }
  static Valuation infinity() { return Valuation(0, true); }

  bool is_infinite() const { return infinite_; }
  /// 2 * value; meaningless when infinite.
  const Integer& twice() const { return twice_; }
  bool is_integer() const { return !infinite_ && twice_ % 2 == 0; }
  /// Value rounded down; requires finite.
  Integer floor() const;
  Rational value() const;
  std::string to_string() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  /// a - b for finite b <= a.
  friend Valuation operator-(const Valuation& a, const Valuation& b);
  friend Valuation half_of(const Valuation& a);
  friend bool operator==(const Valuation& a, const Valuation& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.twice_ == b.twice_);
  }
  friend bool operator<(const Valuation& a, const Valuation& b);
  friend bool operator<=(const Valuation& a, const Valuation& b) { return !(b < a); }
  friend bool operator>(const Valuation& a, const Valuation& b) { return b < a; }
  friend bool operator>=(const Valuation& a, const Valuation& b) { return !(a < b); }

 private:
  Valuation(Integer twice, bool inf) : twice_(std::move(twice)), infinite_(inf) {}
  Integer twice_ = 0;
  bool infinite_ = false;
};

/// Exact p-adic valuation; vp(0) is infinite. Throws DomainError when p is not prime.
Valuation vp(const Integer& n, const Integer& p);
/// Same without the primality check, for hot loops over known primes.
unsigned long vp_unchecked(const Integer& n, const Integer& p);

/// r in [0, p^k) with f(r) = 0 mod p^k, f = F(x, 1).
struct PadicRoot {
  Integer p;
  int k = 1;
  Integer r;
  bool simple = true;
  Integer modulus() const;
};

/// Residues r in [0, p) with F(r, 1) = 0 mod p, ascending. Requires p prime, p < 2^63,
/// and p not dividing content(F).
std::vector<std::uint64_t> roots_mod_p(const BinaryForm& F, std::uint64_t p);

/// Newton lift of a simple root r0 mod p to precision p^k.
PadicRoot hensel_lift(const BinaryForm& F, std::uint64_t p, const Integer& r0, int k);

struct NearestRoot {
  PadicRoot root;
  Valuation valuation;  // vp(x - alpha y)
};

/// The unique p-adic root alpha of F(x, 1) nearest to x / y, lifted to
/// precision k, with vp(x - alpha y). Requires gcd(x, y) = 1, p not dividing
/// D(F) and vp(F(x, y)) >= 1.
NearestRoot thunder_nearest_root(const BinaryForm& F, std::uint64_t p, const Integer& x, const Integer& y, int k);

}  // namespace thuelab
