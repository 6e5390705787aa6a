#pragma once

#include "thuelab/arith.hpp"
#include "thuelab/forms.hpp"
#include "thuelab/solver.hpp"

#include <random>

namespace thuelab::testing {

/// Random irreducible form of degree in [dmin, dmax], coefficients in
/// [-5, 5]. About one in four gets c_d = p for a stratum-exercising prime.
inline BinaryForm random_irreducible_form(std::mt19937_64& rng, int dmin, int dmax, long forced_lead = 0) {
  for (;;) {
    const int d = dmin + static_cast<int>(rng() % static_cast<unsigned>(dmax - dmin + 1));
    std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
    for (auto& v : c) v = static_cast<long>(rng() % 11) - 5;
    if (forced_lead != 0) c.front() = forced_lead;
    if (c.front() == 0 || c.back() == 0) continue;
    BinaryForm F(c);
    if (content(F) != 1) continue;
    if (is_irreducible(F).status == Irreducibility::Irreducible) return F;
  }
}

/// Query from the oracle-equivalence distribution: d in 2..8, p < 1000,
/// H <= 200, lambda in {0, 1/4, 1/2}.
inline Query random_query(std::mt19937_64& rng) {
  static const std::vector<std::uint64_t> primes = primes_in_range(2, 999);
  Query Q;
  Q.p = primes[rng() % primes.size()];
  const bool stratum = rng() % 4 == 0;
  Q.F = random_irreducible_form(rng, 2, 8, stratum ? static_cast<long>(Q.p) : 0);
  const Rational lambdas[] = {Rational(0), Rational(1, 4), Rational(1, 2)};
  Q.lambda = lambdas[rng() % 3];
  Q.height = 1 + static_cast<long>(rng() % 200);
  if (rng() % 2 == 0) {
    Q.mode = SolveMode::AnyZ;
  } else {
    Q.mode = SolveMode::FixedK;
    Q.k = 1 + static_cast<int>(rng() % 3);
  }
  return Q;
}

}  // namespace thuelab::testing
