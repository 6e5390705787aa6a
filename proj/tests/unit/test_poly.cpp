#include <doctest.h>

#include "thuelab/arith.hpp"
#include "thuelab/error.hpp"
#include "thuelab/numeric/interval.hpp"
#include "thuelab/poly/complex_roots.hpp"
#include "thuelab/poly/factor.hpp"
#include "thuelab/poly/fppoly.hpp"
#include "thuelab/poly/zpoly.hpp"

#include <random>

using namespace thuelab;

TEST_CASE("interval arithmetic encloses exact values") {
  Interval third(Rational(1, 3), 64);
  CHECK(third.contains(Rational(1, 3)));
  Interval s = sqrt(Interval(2L, 128));
  CHECK(certainly_less(Interval(Rational(14142, 10000), 128), s));
  CHECK(certainly_less(s, Interval(Rational(14143, 10000), 128)));
  CHECK(sqr(s).contains(Rational(2)));
  CHECK(certified_floor(Interval(Rational(7, 2), 64)) == 3);
  CHECK_THROWS_AS(certified_floor(Interval::bounds(Real(2.9, 64), Real(3.1, 64), 64)), ComputationError);
}

TEST_CASE("arith helpers") {
  CHECK(gcd(Integer(-12), Integer(18)) == 6);
  CHECK(isqrt(Integer(99)) == 9);
  CHECK(primes_in_range(1, 30) == std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19, 23, 29});
  CHECK(parse_rational("0.05") == Rational(1, 20));
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == Rational(-4));
}

TEST_CASE("zpoly basics") {
  ZPoly f{-1, 0, 1};  // x^2 - 1
  ZPoly g{1, 1};
  CHECK(f.degree() == 2);
  CHECK(evaluate(f, 3) == 8);
  auto q = divide_exact(f, g);
  REQUIRE(q);
  CHECK(*q == ZPoly{-1, 1});
  CHECK(gcd(f, ZPoly{1, 2, 1}) == g);
  CHECK(resultant(ZPoly{-2, 0, 0, 1}, derivative(ZPoly{-2, 0, 0, 1})) == 108);
}

TEST_CASE("squarefree decomposition reassembles f") {
  // (x-1)^3 (x+2)^2 (2x+3)
  ZPoly a{-1, 1}, b{2, 1}, c{3, 2};
  ZPoly f = a * a * a * b * b * c * Integer(6);
  auto parts = squarefree_decomposition(f);
  ZPoly prod{1};
  for (const auto& [g, k] : parts)
    for (int i = 0; i < k; ++i) prod = prod * g;
  CHECK(divide_exact(f, prod).has_value());
  CHECK(divide_exact(f, prod)->degree() == 0);
  CHECK(squarefree_part(f) == primitive_part(a * b * c));
}

TEST_CASE("finite field factorisation") {
  std::mt19937_64 rng(1);
  const fp::u64 p = 101;
  fp::Poly f = fp::reduce(ZPoly{1, 0, 0, 0, 1}, p);  // x^4 + 1
  auto fac = fp::factor_squarefree(f, p, rng);
  fp::Poly prod{1};
  for (const auto& h : fac) prod = fp::mul(prod, h, p);
  CHECK(prod == f);
  CHECK(fac.size() >= 2);
  CHECK(fp::is_irreducible(fp::reduce(ZPoly{1, 1, 1}, 2), 2));
  CHECK_FALSE(fp::is_irreducible(fp::reduce(ZPoly{1, 0, 0, 0, 1}, 3), 3));
  auto r = fp::roots(fp::reduce(ZPoly{-4, 0, 1}, 7), 7);
  CHECK(r == std::vector<fp::u64>{2, 5});
}

TEST_CASE("Zassenhaus factorisation agrees with Kronecker on random products") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-4, 4);
  for (int trial = 0; trial < 40; ++trial) {
    auto random_poly = [&](int deg) {
      std::vector<Integer> c(static_cast<std::size_t>(deg) + 1);
      for (auto& v : c) v = coef(rng);
      if (c.back() == 0) c.back() = 1;
      if (c.front() == 0) c.front() = 1;
      return primitive_part(ZPoly(c));
    };
    const int da = 1 + trial % 3, db = 1 + (trial / 3) % 3;
    ZPoly f = random_poly(da) * random_poly(db);
    if (gcd(f, derivative(f)).degree() > 0) continue;
    auto fac = factor_squarefree_zassenhaus(f);
    ZPoly prod{1};
    for (const auto& h : fac) prod = prod * h;
    CHECK(primitive_part(prod) == primitive_part(f));
    CHECK(fac.size() >= 2);
    auto k = kronecker_find_factor(f, f.degree() / 2);
    REQUIRE(k.has_value());
    CHECK(k->degree() == fac.front().degree());
    for (const auto& h : fac) CHECK_FALSE(kronecker_find_factor(h, h.degree() / 2).has_value());
  }
}

TEST_CASE("Zassenhaus on x^4 + 1 and a swinnerton-dyer style polynomial") {
  CHECK(factor_squarefree_zassenhaus(ZPoly{1, 0, 0, 0, 1}).size() == 1);
  // x^4 - 10x^2 + 1: reducible mod every prime, irreducible over Q.
  CHECK(factor_squarefree_zassenhaus(ZPoly{1, 0, -10, 0, 1}).size() == 1);
  auto fac = factor_squarefree_zassenhaus(ZPoly{-1, 0, 0, 0, 0, 0, 1});  // x^6 - 1
  CHECK(fac.size() == 4);
}

TEST_CASE("certified roots of x^2 - 2") {
  auto balls = isolate_roots(ZPoly{-2, 0, 1}, 64);
  REQUIRE(balls.size() == 2);
  for (const auto& b : balls) CHECK(b.modulus().contains(Interval(Rational(141421356, 100000000), 64)) == false);
  for (const auto& b : balls) {
    Interval m = b.modulus();
    CHECK(m.lower() < 1.41421357);
    CHECK(m.upper() > 1.41421356);
  }
}
