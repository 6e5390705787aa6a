#include <doctest.h>

#include "thuelab/arith.hpp"
#include "thuelab/cyclotomic.hpp"
#include "thuelab/error.hpp"
#include "thuelab/padic.hpp"

#include <random>

using namespace thuelab;

TEST_CASE("valuations") {
  CHECK(vp(54, 3) == Valuation::integer(3));
  CHECK(vp(54, 5) == Valuation::integer(0));
  CHECK(vp(0, 7).is_infinite());
  CHECK_THROWS_AS(vp(10, 4), DomainError);
  Valuation h = Valuation::half(3);
  CHECK(h.to_string() == "3/2");
  CHECK(h + h == Valuation::integer(3));
  CHECK(h < Valuation::integer(2));
  CHECK(Valuation::integer(100) < Valuation::infinity());
  CHECK(h.floor() == 1);
}

TEST_CASE("roots modulo p") {
  CHECK(roots_mod_p(BinaryForm{1, 0, 1}, 5) == std::vector<std::uint64_t>{2, 3});
  CHECK(roots_mod_p(BinaryForm{1, 1, -1}, 11) == std::vector<std::uint64_t>{3, 7});
  CHECK(roots_mod_p(BinaryForm{1, 0, 1}, 7).empty());
  // Large prime goes through the factorisation path.
  CHECK(roots_mod_p(BinaryForm{1, 0, 1}, 1000000007).empty());
  const std::uint64_t big = 1000000009;
  auto r = roots_mod_p(BinaryForm{1, 0, 1}, big);
  REQUIRE(r.size() == 2);
  for (auto v : r) CHECK((Integer(std::to_string(v)) * Integer(std::to_string(v)) + 1) % Integer(std::to_string(big)) == 0);
  CHECK_THROWS_AS(roots_mod_p(BinaryForm{5, 10}, 5), DomainError);
}

TEST_CASE("Hensel lifting") {
  CHECK(hensel_lift(BinaryForm{1, 0, 1}, 5, 2, 2).r == 7);
  CHECK(hensel_lift(BinaryForm{1, 1, -1}, 11, 3, 1).r == 3);
  auto l = hensel_lift(BinaryForm{1, 1, -1}, 11, 3, 3);
  CHECK((l.r * l.r + l.r - 1) % 1331 == 0);
  CHECK_THROWS_WITH_AS(hensel_lift(BinaryForm{1, 0, -1} * BinaryForm{1, -1}, 3, 1, 4),
                       doctest::Contains("singular root; Hensel inapplicable"), DomainError);

  std::mt19937_64 rng(17);
  const auto primes = primes_in_range(3, 400);
  int lifted = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Integer> c(4 + trial % 4);
    for (auto& v : c) v = static_cast<long>(rng() % 41) - 20;
    c.front() = 1;
    BinaryForm F(c);
    const std::uint64_t p = primes[rng() % primes.size()];
    const ZPoly f = F.dehomogenize();
    for (auto r0 : roots_mod_p(F, p)) {
      if (evaluate(derivative(f), Integer(std::to_string(r0))) % Integer(std::to_string(p)) == 0) continue;
      for (int k : {1, 2, 3, 7, 16, 33, 64}) {
        auto L = hensel_lift(F, p, Integer(std::to_string(r0)), k);
        CHECK(evaluate(f, L.r) % L.modulus() == 0);
        CHECK(L.r % Integer(std::to_string(p)) == Integer(std::to_string(r0)));
      }
      ++lifted;
    }
  }
  CHECK(lifted > 50);
}

TEST_CASE("Thunder nearest root") {
  const BinaryForm psi5{1, 1, -1};
  auto a = thunder_nearest_root(psi5, 11, 3, 1, 4);
  CHECK(a.root.r % 11 == 3);
  CHECK(a.valuation >= Valuation::integer(1));
  auto b = thunder_nearest_root(psi5, 11, 1, 4, 4);
  CHECK(b.root.r % 11 == 3);
  CHECK(b.valuation >= Valuation::integer(1));
  CHECK_THROWS_WITH_AS(thunder_nearest_root(psi5, 11, 1, 1, 3), doctest::Contains("precondition"), DomainError);
  // p = 5 divides D(Psi_5) = 5.
  CHECK_THROWS_WITH_AS(thunder_nearest_root(psi5, 5, 2, 1, 3), doctest::Contains("uniqueness not guaranteed"),
                       DomainError);
  // 3x^2 + xy + y^2 with p = 3 dividing c_d and y.
  CHECK_THROWS_WITH_AS(thunder_nearest_root(BinaryForm{3, 1, 1}, 3, 1, 3, 2),
                       doctest::Contains("no finite nearest root"), DomainError);
}

TEST_CASE("Thunder inequality on random solutions") {
  const BinaryForm F = psi_form(17).form;
  const Integer D = discriminant(F);
  std::mt19937_64 rng(23);
  const auto primes = primes_in_range(3, 200);
  int cases = 0;
  for (int trial = 0; cases < 100 && trial < 200000; ++trial) {
    const std::uint64_t p = primes[rng() % primes.size()];
    const Integer P(std::to_string(p));
    if (D % P == 0) continue;
    Integer x = static_cast<long>(rng() % 2001) - 1000, y = static_cast<long>(rng() % 1000) + 1;
    if (gcd(x, y) != 1 || y % P == 0) continue;
    const Integer N = evaluate(F, x, y);
    if (N % P != 0) continue;
    auto res = thunder_nearest_root(F, p, x, y, 8);
    CHECK(res.valuation >= vp(N, P));
    CHECK(res.valuation == vp(N, P));
    ++cases;
  }
  CHECK(cases == 100);
}

TEST_CASE("sum rule on fully split forms") {
  // F = (x - 1 y)(x - 4 y)(x + 6 y)(x - 9 y), roots distinct modulo 13.
  const std::vector<long> a{1, 4, -6, 9};
  BinaryForm F{1, -a[0]};
  for (std::size_t i = 1; i < a.size(); ++i) F = F * BinaryForm{1, -a[i]};
  const std::uint64_t p = 13;
  std::mt19937_64 rng(4);
  int checked = 0;
  for (int trial = 0; trial < 5000 && checked < 50; ++trial) {
    Integer x = static_cast<long>(rng() % 20001) - 10000, y = static_cast<long>(rng() % 10000) + 1;
    if (gcd(x, y) != 1 || y % 13 == 0) continue;
    const Integer N = evaluate(F, x, y);
    if (N == 0) continue;
    Integer total = 0;
    for (auto r : roots_mod_p(F, p)) {
      auto L = hensel_lift(F, p, Integer(std::to_string(r)), 40);
      Integer diff = x - L.r * y;
      diff %= L.modulus();
      total += diff == 0 ? 40 : vp_unchecked(diff, 13);
    }
    CHECK(Valuation::integer(total) == vp(N, 13));
    ++checked;
  }
  CHECK(checked == 50);
}
