#include <doctest.h>

#include "thuelab/error.hpp"
#include "thuelab/forms.hpp"
#include "thuelab/json_io.hpp"

#include <random>

using namespace thuelab;

namespace {

// Independent oracle: b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd.
Integer cubic_discriminant(const Integer& a, const Integer& b, const Integer& c, const Integer& d) {
  return b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d;
}

BinaryForm random_form(std::mt19937_64& rng, int d, long range) {
  std::uniform_int_distribution<long> dist(-range, range);
  std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
  for (auto& v : c) v = dist(rng);
  if (c.front() == 0) c.front() = 1;
  return BinaryForm(c);
}

IntMatrix2 random_unimodular(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> dist(-3, 3);
  IntMatrix2 M = IntMatrix2::identity();
  for (int i = 0; i < 4; ++i) {
    long j = dist(rng);
    M = M * (i % 2 ? IntMatrix2(1, j, 0, 1) : IntMatrix2(1, 0, j, 1));
  }
  if (dist(rng) > 0) M = M * IntMatrix2(0, 1, 1, 0);
  return M;
}

}  // namespace

TEST_CASE("evaluate") {
  CHECK(evaluate(BinaryForm{1, 1, -1}, 2, 1) == 5);
  CHECK(evaluate(BinaryForm{1, 1, -2, -1}, 1, 1) == -1);
  CHECK(evaluate(BinaryForm{7, 3, 2}, 1, 0) == 7);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 50; ++i) {
    BinaryForm F = random_form(rng, 1 + i % 6, 20);
    Integer x = static_cast<long>(rng() % 41) - 20, y = static_cast<long>(rng() % 41) - 20;
    Integer sign = F.degree() % 2 ? -1 : 1;
    CHECK(evaluate(F, -x, -y) == sign * evaluate(F, x, y));
  }
}

TEST_CASE("content and height") {
  CHECK(content(BinaryForm{6, 0, 9, 3}) == 3);
  CHECK(content(BinaryForm{1, 1, -1}) == 1);
  CHECK(content(BinaryForm{-4, -8}) == 4);
  CHECK_THROWS_WITH_AS(content(BinaryForm{0, 0}), doctest::Contains("zero form has no content"), DomainError);
  CHECK(height(BinaryForm{3, -7, 2}) == 7);
  CHECK(height_point(-5, 3) == 5);
  CHECK(height_point(0, 1) == 1);
}

TEST_CASE("discriminant") {
  CHECK(discriminant(BinaryForm{1, 1, -1}) == 5);
  CHECK(discriminant(BinaryForm{1, 1, -2, -1}) == cubic_discriminant(1, 1, -2, -1));
  CHECK(discriminant(BinaryForm{1, 1, -2, -1}) == 49);
  CHECK(discriminant(BinaryForm{1, 0, 0, -2}) == -108);
  CHECK(discriminant(BinaryForm{3, 5}) == 1);
  CHECK_THROWS_WITH_AS(discriminant(BinaryForm{0, 1, 1}), doctest::Contains("apply unimodular shift first"),
                       DomainError);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 30; ++i) {
    BinaryForm F = random_form(rng, 3, 9);
    CHECK(discriminant(F) == cubic_discriminant(F.coeffs()[0], F.coeffs()[1], F.coeffs()[2], F.coeffs()[3]));
  }
}

TEST_CASE("unimodular invariance of content and discriminant") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    BinaryForm F = random_form(rng, 2 + i % 4, 6);
    IntMatrix2 M = random_unimodular(rng);
    REQUIRE(abs(M.det()) == 1);
    BinaryForm G = transform(F, M);
    CHECK(content(G) == content(F));
    if (G.leading() != 0) CHECK(discriminant(G) == discriminant(F));
    CHECK(evaluate(G, 2, -3) == evaluate(F, M.s() * 2 + M.u() * -3, M.t() * 2 + M.v() * -3));
  }
}

TEST_CASE("unimodular shift") {
  BinaryForm F{2, 1, 1};
  auto a = unimodular_shift(F);
  CHECK(a.form == F);
  CHECK(a.matrix == IntMatrix2::identity());
  auto b = unimodular_shift(BinaryForm{0, 1, 0});  // x*y
  CHECK(b.form.leading() == 1);
  CHECK(abs(b.matrix.det()) == 1);
  auto c = unimodular_shift(BinaryForm{0, 0, 1});  // y^2
  CHECK(c.form.leading() == c.matrix.t() * c.matrix.t());
  CHECK(c.form.leading() != 0);
}

TEST_CASE("Mahler measure") {
  auto m1 = mahler_measure(BinaryForm{1, -1});
  CHECK(m1.contains(Rational(1)));
  auto m2 = mahler_measure(BinaryForm{1, 0, -2});
  CHECK(m2.contains(Rational(2)));
  BinaryForm lehmer{1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1};
  auto m3 = mahler_measure(lehmer);
  CHECK(m3.lower() <= 1.1762808182599176);
  CHECK(m3.upper() >= 1.1762808182599174);
  CHECK(m3.relative_width().to_double() <= 1e-12);
  // Product forms multiply.
  BinaryForm A{3, 1, -5}, B{2, 0, 1, 7};
  auto mp = mahler_measure(A * B);
  auto prod = mahler_measure(A) * mahler_measure(B);
  CHECK(mp.lower() <= prod.upper());
  CHECK(prod.lower() <= mp.upper());
  CHECK(mp.lower() <= landau_bound(A * B).upper());
  // Repeated roots through the squarefree decomposition.
  auto mr = mahler_measure(BinaryForm{1, 0, -2} * BinaryForm{1, 0, -2});
  CHECK(mr.contains(Rational(4)));
}

TEST_CASE("irreducibility") {
  auto r = is_irreducible(BinaryForm{1, 0, -1});
  CHECK(r.status == Irreducibility::Reducible);
  REQUIRE(r.witness);
  CHECK(*r.witness == BinaryForm{1, -1});
  CHECK(irreducible_fast_path(BinaryForm{1, 1, -2, -1}).status == Irreducibility::Irreducible);
  CHECK(*irreducible_fast_path(BinaryForm{1, 1, -2, -1}).certifying_prime == 2);
  CHECK(irreducible_fast_path(BinaryForm{1, 0, 0, 0, 1}).status == Irreducibility::Undetermined);
  CHECK(is_irreducible(BinaryForm{1, 0, 0, 0, 1}).status == Irreducibility::Irreducible);
  CHECK_THROWS_WITH_AS(is_irreducible(BinaryForm{2, 4}), doctest::Contains("content must be one"), DomainError);
  auto rep = is_irreducible(BinaryForm{1, 0, 0, 0, 0, 0, -1});
  CHECK(rep.status == Irreducibility::Reducible);
  auto sq = is_irreducible(BinaryForm{1, 0, -2} * BinaryForm{1, 0, -2});
  CHECK(sq.status == Irreducibility::Reducible);
  CHECK(*sq.witness == BinaryForm{1, 0, -2});
}

TEST_CASE("irreducible implies nonzero discriminant") {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 40; ++i) {
    BinaryForm F = random_form(rng, 2 + i % 5, 5);
    if (content(F) != 1) continue;
    if (is_irreducible(F).status == Irreducibility::Irreducible) CHECK(discriminant(F) != 0);
  }
}

TEST_CASE("expression parser") {
  CHECK(parse_form("x^3 + x^2*y - 2*x*y^2 - y^3") == BinaryForm{1, 1, -2, -1});
  CHECK(parse_form("- y^2 + x*y") == BinaryForm{0, 1, -1});
  CHECK(parse_form("  x * y * 3 ") == BinaryForm{0, 3, 0});
  CHECK(parse_form("x^4+y^4") == BinaryForm{1, 0, 0, 0, 1});
  CHECK(parse_form("[1, -2, \"123456789012345678901234567890\"]").coeffs()[2] ==
        Integer("123456789012345678901234567890"));
  CHECK_THROWS_AS(parse_form("2x^2 + y^2"), DomainError);
  CHECK_THROWS_AS(parse_form("x^2 + y"), DomainError);
  CHECK_THROWS_AS(parse_form("x^2 + + y^2"), DomainError);
  CHECK_THROWS_AS(parse_form("x^2 y"), DomainError);
  CHECK_THROWS_AS(parse_form("[1, 2"), DomainError);
  CHECK_THROWS_AS(parse_form(""), DomainError);
  BinaryForm G{3, -1, 0, 4};
  CHECK(parse_form(G.to_string()) == G);
}

TEST_CASE("json encoding of big integers") {
  CHECK(to_json(Integer(5)).is_number());
  CHECK(to_json(Integer("9007199254740993")).is_string());
  CHECK(integer_from_json(Json("-9007199254740993")) == Integer("-9007199254740993"));
}
