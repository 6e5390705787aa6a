#include <doctest.h>

#include "../support/generators.hpp"
#include "thuelab/bounds.hpp"
#include "thuelab/cyclotomic.hpp"
#include "thuelab/error.hpp"
#include "thuelab/proof_chain.hpp"

using namespace thuelab;

namespace {

bool has_pair(const std::vector<Solution>& s, long x, long y) {
  for (const auto& v : s)
    if (v.x == x && v.y == y) return true;
  return false;
}

Query psi5_query() {
  Query Q;
  Q.F = psi_form(5).form;
  Q.p = 11;
  Q.k = 1;
  Q.height = 10;
  return Q;
}

}  // namespace

TEST_CASE("lambda check") {
  CHECK(lambda_check(7, 7, 2, Rational(1, 2)));
  CHECK_FALSE(lambda_check(8, 7, 2, Rational(1, 2)));
  CHECK(lambda_check(1, 3, 1, 0));
  CHECK_FALSE(lambda_check(2, 3, 5, 0));
  CHECK(lambda_check(2, 11, 6, Rational(1, 20)) == (ipow(2, 20) <= ipow(11, 6)));
  CHECK_FALSE(lambda_check(2, 2, 19, Rational(1, 20)));
  CHECK(lambda_check(2, 2, 20, Rational(1, 20)));
  CHECK_THROWS_AS(lambda_check(0, 3, 1, 0), DomainError);
}

TEST_CASE("Psi5 small box") {
  const Query Q = psi5_query();
  const auto brute = solve_bruteforce(Q);
  CHECK(has_pair(brute, 3, 1));
  CHECK(has_pair(brute, 1, 4));
  for (const auto& s : brute) {
    CHECK(s.N == 11);
    CHECK(s.t == 1);
  }
  CHECK(solve_sieved(Q) == brute);
  Query empty = Q;
  empty.height = 0;
  CHECK(solve_bruteforce(empty).empty());
  CHECK(solve_sieved(empty).empty());
}

TEST_CASE("Psi7 and p = 2") {
  Query Q;
  Q.F = psi_form(7).form;
  Q.p = 2;
  Q.height = 3;
  const auto brute = solve_bruteforce(Q);
  // Direct evaluation: no primitive pair in the box has |Psi7| = 2 (2 is inert).
  for (long y = 0; y <= 3; ++y)
    for (long x = -3; x <= 3; ++x)
      if (gcd(Integer(x), Integer(y)) == 1 && (y > 0 || x > 0)) {
        const bool hit = abs(evaluate(Q.F, x, y)) == 2;
        CHECK(has_pair(brute, x, y) == hit);
      }
  CHECK_FALSE(has_pair(brute, 1, 1));
  CHECK(solve_sieved(Q) == brute);
  Q.mode = SolveMode::AnyZ;
  CHECK(solve_sieved(Q).empty());  // no roots mod 2 and 2 does not divide c_d
}

TEST_CASE("p divides the leading coefficient") {
  Query Q;
  Q.F = BinaryForm{5, 1, 0, 1};  // 5x^3 + x^2 y + y^3
  Q.p = 5;
  Q.mode = SolveMode::AnyZ;
  Q.lambda = Rational(1, 2);
  Q.height = 60;
  const auto brute = solve_bruteforce(Q);
  const auto sieved = solve_sieved(Q);
  CHECK(sieved == brute);
  bool stratum = false;
  for (const auto& s : brute) stratum = stratum || s.y % 5 == 0;
  CHECK(stratum);
}

TEST_CASE("sieve equals brute force on random queries") {
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 25; ++i) {
    Query Q = testing::random_query(rng);
    Q.height = std::min(Q.height, 80L);
    const auto brute = solve_bruteforce(Q);
    CHECK(solve_sieved(Q) == brute);
    Q.threads = 3;
    CHECK(solve_sieved(Q) == brute);
    CHECK(solve_bruteforce(Q) == brute);
  }
}

TEST_CASE("negation closure and monotonicity") {
  const Query Q = psi5_query();
  const auto canon = solve_sieved(Q);
  const auto full = expand_negations(canon);
  CHECK(full.size() == 2 * canon.size());
  for (const auto& s : full) CHECK(abs(evaluate(Q.F, s.x, s.y)) == s.N);
  Query bigger = Q;
  bigger.height = 30;
  bigger.lambda = Rational(1, 2);
  const auto more = solve_sieved(bigger);
  for (const auto& s : canon) CHECK(has_pair(more, s.x.get_si(), s.y.get_si()));
}

TEST_CASE("query validation") {
  Query Q = psi5_query();
  Q.p = 12;
  CHECK_THROWS_AS(solve_bruteforce(Q), DomainError);
  Q = psi5_query();
  Q.k = 0;
  CHECK_THROWS_AS(solve_sieved(Q), DomainError);
  Q = psi5_query();
  Q.F = BinaryForm{2, 4, 6};
  CHECK_THROWS_AS(solve_sieved(Q), DomainError);
}

TEST_CASE("proof chain") {
  const auto F5 = psi_form(5).form;
  const Interval C0 = compute_C0(F5);
  const Solution s{3, 1, 11, 1, 1, std::nullopt};
  const ChainReport r = check_proof_chain(F5, 11, 0, s, C0);
  CHECK(r.lewis_mahler == Truth::True);
  CHECK(r.roth_branch == Truth::True);
  CHECK_FALSE(r.implication_violated());
  CHECK(r.thunder_valuation.has_value());

  // (1, 2) sits close to the root 0.618 relative to H^-2.05.
  const Solution close{1, 2, 1, 0, 1, std::nullopt};
  const ChainReport c = check_proof_chain(F5, 11, 0, close, C0);
  CHECK(c.roth_branch == Truth::False);
  CHECK(c.bound_on_H == Truth::Skipped);
  CHECK(c.lewis_mahler == Truth::True);
  CHECK_FALSE(c.implication_violated());

  const auto F7 = psi_form(7).form;
  CHECK(check_proof_chain(F7, 7, Rational(1, 20), Solution{2, 1, 7, 1, 1, std::nullopt}, compute_C0(F7)).mu ==
        Rational(19, 21));
}

TEST_CASE("Lewis-Mahler on random Psi7 pairs") {
  const auto F7 = psi_form(7).form;
  const Interval C0 = compute_C0(F7);
  std::mt19937_64 rng(77);
  int done = 0;
  while (done < 100) {
    const long x = static_cast<long>(rng() % 2001) - 1000;
    const long y = 1 + static_cast<long>(rng() % 1000);
    if (x == 0 || std::gcd(x, y) != 1) continue;
    const Integer N = abs(evaluate(F7, x, y));
    const ChainReport r =
        check_proof_chain(F7, 13, 0, Solution{x, y, N, static_cast<long>(vp_unchecked(N, 13)), N, std::nullopt}, C0);
    CHECK(r.lewis_mahler == Truth::True);
    ++done;
  }
}
