#pragma once

#include "thuelab/forms.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace thuelab {

enum class SolveMode { FixedK, AnyZ };

/// |F(x, y)| = t p^z with gcd(x, y) = 1, max(|x|, |y|) <= height and
/// t^q <= p^(z r) for lambda = r / q. FixedK demands z == k, AnyZ z >= 1.
struct Query {
  BinaryForm F{1, 0};
  std::uint64_t p = 2;
  SolveMode mode = SolveMode::FixedK;
  int k = 1;
  Rational lambda = 0;
  long height = 0;
  unsigned threads = 1;
};

struct Solution {
  Integer x, y;
  Integer N;  // |F(x, y)|
  long z = 0;
  Integer t;  // N / p^z
  std::optional<long> orbit_id;

  friend bool operator==(const Solution& a, const Solution& b) {
    return a.x == b.x && a.y == b.y && a.N == b.N && a.z == b.z && a.t == b.t && a.orbit_id == b.orbit_id;
  }
};

/// Lexicographic on (x, y).
bool solution_less(const Solution& a, const Solution& b);

/// t^q <= p^(z r), exactly. Requires t >= 1, z >= 1, lambda >= 0.
bool lambda_check(const Integer& t, const Integer& p, long z, const Rational& lambda);

/// Throws DomainError on a malformed query or a form of content other than one.
void validate_query(const Query& Q);

/// Throws ComputationError unless sol is canonical, primitive and satisfies
/// N = t p^z, gcd(t, p) = 1, the mode and the lambda constraint.
void validate_solution(const Query& Q, const Solution& sol);

/// Every canonical primitive pair in the box.
std::vector<Solution> solve_bruteforce(const Query& Q);

/// Same output, scanning only x = r y (mod p) for roots r of F(x, 1) mod p,
/// plus the p | y stratum when p | c_d.
std::vector<Solution> solve_sieved(const Query& Q);

/// Adds (-x, -y) for every solution; sorted.
std::vector<Solution> expand_negations(const std::vector<Solution>& canonical);

std::string to_string(SolveMode m);

}  // namespace thuelab
