#pragma once

#include "thuelab/numeric/real.hpp"

#include <cstdint>
#include <vector>

namespace thuelab {

Integer gcd(const Integer& a, const Integer& b);
Integer ipow(const Integer& base, unsigned long e);
Integer isqrt(const Integer& n);
/// Probabilistic (BPSW + Miller-Rabin) primality; deterministic below 2^64.
bool is_prime(const Integer& n);
/// Primes in [lo, hi] by segmented trial sieving; hi < 2^40.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Exact rational parsed from "r/q", "r" or a decimal like "0.05".
Rational parse_rational(const std::string& text);
std::string to_string(const Integer& v);
std::string to_string(const Rational& v);

}  // namespace thuelab
