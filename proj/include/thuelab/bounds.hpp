#pragma once

#include "thuelab/forms.hpp"
#include "thuelab/numeric/interval.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thuelab {

/// Enclosures are refined by doubling precision from 64 bits until their
/// width is below this, or ComputationError.
const Rational& default_bound_tolerance();  // 1e-30

/// ((20d - 41)/80) (sqrt(d^2 + 16d)/d - 1) - 1, for d >= 7.
Interval f_of_d(const Integer& d, const Rational& tol = default_bound_tolerance());

/// (d - 41/20) / (1 + lambda), exact.
Rational mu_of(const Integer& d, const Rational& lambda);

/// 1 - 81/(10(d + 2)): Theorem 2 needs lambda strictly below this.
Rational theorem2_lambda_limit(const Integer& d);
/// 1/2 - 81/(20(d + 2)), the lambda at which g(d) is evaluated.
Rational g_lambda(const Integer& d);

/// 1 + (1151/100 + (3/2) log d + log mu) / log(mu - d/2).
Interval theorem2_inner(const Integer& d, const Rational& lambda, const Rational& tol = default_bound_tolerance());
/// theorem2_inner at g_lambda(d).
Interval g_of_d(const Integer& d, const Rational& tol = default_bound_tolerance());

/// aut * floor(theorem2_inner). Requires d >= 7, 0 <= lambda < limit, aut >= 1.
/// The floor is certified; precision is raised until it is, up to 2^14 bits.
Integer theorem2_bound(const Integer& d, const Rational& lambda, const Integer& aut);

/// 2^(d-1) d^((d-1)/2) M(F)^(d-2) / |D(F)|^(1/2).
Interval compute_C0(const BinaryForm& F);
/// Same constant from a Mahler enclosure and an exact discriminant.
Interval compute_C0(int d, const Interval& mahler, const Integer& disc);

/// 250000 (log M(F) + d/2).
Interval compute_A(const BinaryForm& F);
Interval compute_A(int d, const Interval& mahler);

/// log10(2 * 7^(d^3 (2t + 3))).
Interval evertse_log10(const Integer& d, const Integer& t, const Rational& tol = default_bound_tolerance());

struct BoundReport {
  Integer d;
  Rational lambda;
  Rational lambda_limit;
  bool lambda_in_range = false;  // 0 <= lambda < lambda_limit
  std::optional<Interval> f_d;   // d >= 7
  Rational mu;
  bool mu_gap = false;           // d/2 + 1 < mu < d
  std::optional<Interval> g_like;
  std::optional<Integer> theorem2_count;
  Integer aut_cardinality;
  std::optional<Interval> A;     // needs a form
  Interval evertse_log10;        // t = 1
  std::vector<std::string> notes;
};

BoundReport make_bound_report(const Integer& d, const Rational& lambda, const Integer& aut,
                              const BinaryForm* F = nullptr);

/// The two readings of the "at most 166 for d >= 7" remark: lambda = 1/20
/// (the g(7) setting) and lambda = 1 - 8.5/(d + 2), both with aut = 2.
struct Corollary2Check {
  Integer with_g_lambda;      // 166
  Integer with_stated_lambda; // 186
  Interval inner_stated;
};
Corollary2Check corollary2_discrepancy(const Integer& d = 7);

}  // namespace thuelab
