#pragma once

#include "thuelab/poly/fppoly.hpp"
#include "thuelab/poly/zpoly.hpp"

#include <optional>
#include <vector>

namespace thuelab {

/// Irreducible factors of a primitive squarefree f of positive degree,
/// by modular factorisation, Hensel lifting and factor recombination.
/// Factors are primitive with positive leading coefficient, sorted by degree.
std::vector<ZPoly> factor_squarefree_zassenhaus(const ZPoly& f);

/// Smallest-degree proper factor found by Kronecker's method among factors of
/// degree <= maxDegree; nullopt when none exists in that range. Throws
/// ComputationError when the divisor enumeration exceeds its budget.
std::optional<ZPoly> kronecker_find_factor(const ZPoly& f, int maxDegree);

/// Lifts f = lc(f) * prod(factors) (mod q), factors monic and pairwise coprime
/// modulo q, to a factorisation modulo q^(2^j) >= bound. Returns the monic
/// lifted factors and the modulus reached.
struct HenselLift {
  std::vector<ZPoly> factors;
  Integer modulus;
};
HenselLift hensel_lift_factors(const ZPoly& f, const std::vector<fp::Poly>& factors, fp::u64 q,
                               const Integer& bound);

/// Representative of v modulo m in (-m/2, m/2].
Integer symmetric_mod(const Integer& v, const Integer& m);

}  // namespace thuelab
