#include <doctest.h>

#include "thuelab/arith.hpp"
#include "thuelab/automorphism.hpp"
#include "thuelab/cyclotomic.hpp"
#include "thuelab/error.hpp"

#include <random>

using namespace thuelab;

TEST_CASE("exact automorphism test") {
  const BinaryForm x4y4{1, 0, 0, 0, 1};
  CHECK(is_enhanced_automorphism(x4y4, IntMatrix2::identity()));
  CHECK(is_enhanced_automorphism(x4y4, IntMatrix2(0, 1, 1, 0)));
  CHECK(is_enhanced_automorphism(psi_form(17).form, IntMatrix2::identity()));
  CHECK_FALSE(is_enhanced_automorphism(psi_form(17).form, IntMatrix2(1, 1, 0, 1)));
}

TEST_CASE("best rational approximation") {
  CHECK(best_rational(Rational(355, 113), 1000) == Rational(355, 113));
  CHECK(best_rational(Rational(314159265, 100000000), 10) == Rational(22, 7));
  CHECK(best_rational(Rational(-7, 3), 100) == Rational(-7, 3));
}

TEST_CASE("apply_mobius") {
  auto a = apply_mobius(IntMatrix2::identity(), 3, 1);
  CHECK((a.x == 3 && a.y == 1 && a.factor == 1));
  auto b = apply_mobius(IntMatrix2(0, 1, 1, 0), 3, 1);
  CHECK((b.x == 1 && b.y == 3));
  auto c = apply_mobius(IntMatrix2(-1, 0, 0, -1), 3, 1);
  CHECK((c.x == 3 && c.y == 1 && c.factor == -1));
  CHECK_THROWS_AS(apply_mobius(IntMatrix2::identity(), 0, 0), DomainError);
}

TEST_CASE("Aut' of Psi_n is {+-I} for d >= 5") {
  for (std::uint64_t n : {11, 13, 17, 19, 23}) {
    const BinaryForm F = psi_form(n).form;
    auto G = compute_aut_group(F);
    REQUIRE(G.classes.size() == 1);
    CHECK(G.classes[0].matrix == IntMatrix2::identity());
    CHECK(G.cardinality() == 2);
    CHECK(G.closed);
    CHECK(G.warnings.empty());
    auto orb = orbit_counts(F, G);
    CHECK(orb.gamma == 1);
    for (int c : orb.per_root) CHECK(c == 1);
  }
}

TEST_CASE("Aut' of x^4 + y^4") {
  const BinaryForm F{1, 0, 0, 0, 1};
  auto G = compute_aut_group(F);
  CHECK(G.cardinality() >= 8);
  CHECK(G.cardinality() <= 24);
  CHECK(G.contains(IntMatrix2(0, 1, 1, 0)));
  CHECK(G.contains(IntMatrix2(1, 0, 0, -1)));
  CHECK(G.contains(IntMatrix2(-1, 0, 0, -1)));
  CHECK(G.closed);
  for (const auto& M : G.elements()) {
    CHECK(is_enhanced_automorphism(F, M));
    CHECK(automorphism_determinant_law(F, M));
  }
  CHECK(orbit_counts(F, G).gamma >= 2);
}

TEST_CASE("Aut' of the cubic Psi_7 contains an order-3 map") {
  const BinaryForm F = psi_form(7).form;
  auto G = compute_aut_group(F);
  CHECK(G.cardinality() >= 6);
  CHECK(G.cardinality() <= 24);
  CHECK(G.closed);
  // theta -> -1 / (1 + theta)
  CHECK(G.contains(IntMatrix2(0, -1, 1, 1)));
  CHECK(orbit_counts(F, G).gamma == 3);
}

TEST_CASE("solution transport under automorphisms") {
  const BinaryForm F{1, 0, 0, 0, 1};
  auto G = compute_aut_group(F);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 30; ++i) {
    Integer x = static_cast<long>(rng() % 201) - 100, y = static_cast<long>(rng() % 201) - 100;
    if (x == 0 && y == 0) continue;
    const Integer N = abs(evaluate(F, x, y));
    for (const auto& M : G.elements()) {
      const Integer img = abs(evaluate(F, M.s() * x + M.u() * y, M.t() * x + M.v() * y));
      CHECK(img * img == ipow(abs(M.det()), 4) * N * N);
    }
  }
}
