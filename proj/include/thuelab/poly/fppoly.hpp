#pragma once

#include "thuelab/poly/zpoly.hpp"

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

namespace thuelab::fp {

using u64 = std::uint64_t;
__extension__ using u128 = unsigned __int128;

// Scalar arithmetic modulo p < 2^63.
inline u64 add(u64 a, u64 b, u64 p) {
  u64 s = a + b;
  return s >= p ? s - p : s;
}
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }
inline u64 mul(u64 a, u64 b, u64 p) {
  return static_cast<u64>((static_cast<u128>(a) * b) % p);
}
u64 pow(u64 a, u64 e, u64 p);
/// Inverse of a nonzero residue modulo prime p.
u64 inv(u64 a, u64 p);
/// Reduces an arbitrary integer into [0, p).
u64 residue(const Integer& v, u64 p);

/// Polynomial over F_p, ascending coefficients, trimmed.
using Poly = std::vector<u64>;

void trim(Poly& a);
inline int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }
Poly reduce(const ZPoly& f, u64 p);
/// Lift with coefficients in [0, p).
ZPoly lift(const Poly& a);

Poly add(const Poly& a, const Poly& b, u64 p);
Poly sub(const Poly& a, const Poly& b, u64 p);
Poly mul(const Poly& a, const Poly& b, u64 p);
Poly scale(const Poly& a, u64 c, u64 p);
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, u64 p);
Poly rem(const Poly& a, const Poly& b, u64 p);
Poly monic(const Poly& a, u64 p);
Poly gcd(Poly a, Poly b, u64 p);
/// Returns (g, s, t) with s a + t b = g monic.
struct ExtGcd {
  Poly g, s, t;
};
ExtGcd ext_gcd(const Poly& a, const Poly& b, u64 p);
Poly derivative(const Poly& a, u64 p);
u64 eval(const Poly& a, u64 x, u64 p);
/// base^e mod m.
Poly powmod(const Poly& base, const Integer& e, const Poly& m, u64 p);

bool is_squarefree(const Poly& f, u64 p);
/// Ben-Or test; f must have degree >= 1.
bool is_irreducible(const Poly& f, u64 p);

/// Distinct-degree factorisation of a monic squarefree f: pairs (g_e, e)
/// where g_e is the product of all irreducible factors of degree e.
std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, u64 p);
/// Splits a monic product of irreducibles all of degree e (Cantor-Zassenhaus).
std::vector<Poly> equal_degree(const Poly& f, int e, u64 p, std::mt19937_64& rng);
/// Monic irreducible factors of a monic squarefree f, sorted.
std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng);
/// Distinct roots in [0, p), ascending.
std::vector<u64> roots(const Poly& f, u64 p);

}  // namespace thuelab::fp
