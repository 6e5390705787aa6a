#pragma once

#include "thuelab/numeric/interval.hpp"
#include "thuelab/padic.hpp"
#include "thuelab/solver.hpp"

#include <optional>
#include <string>

namespace thuelab {

/// Unknown: the enclosure at working precision straddles the boundary.
/// Skipped: not evaluated because its premise failed. NotApplicable: the
/// inequality is undefined for this input.
enum class Truth { True, False, Unknown, Skipped, NotApplicable };
std::string to_string(Truth t);

/// The inequalities of the Thue-type argument for one solution, with
/// mu = (d - 41/20) / (1 + lambda) and H = max(|x|, |y|):
///   (a) min{|alpha - x/y|, |1/alpha - y/x|} > H^(-41/20) for every complex root,
///   (b) H^(d - 41/20) < C0 N,
///   (c) p^(-z) < C0^(1/(1+lambda)) / H^mu,
///   (d) some root has min{...} <= C0 N / H^d (needs x y != 0).
/// (a) and (d) give (b); (b) and t <= (p^z)^lambda give (c).
/// The Thunder step compares p^(-v), v = vp(x - alpha y) for the nearest
/// p-adic root, with C1 / H^mu for both readings of C1.
struct ChainReport {
  Rational mu;
  Interval C0;
  Truth roth_branch = Truth::Unknown;   // (a)
  Truth bound_on_H = Truth::Unknown;    // (b)
  Truth to_be_applied = Truth::Unknown; // (c)
  Truth lewis_mahler = Truth::Unknown;  // (d)
  /// C0^(1/(1+lambda)) |c_d| |D|^(1/2), as stated.
  Interval C1_stated;
  /// C0^(1/(1+lambda)) p^vp(c_d) p^(vp(D)/2), what the derivation needs.
  Interval C1_tight;
  std::optional<Valuation> thunder_valuation;
  Truth thunder_stated = Truth::NotApplicable;
  Truth thunder_tight = Truth::NotApplicable;
  std::string thunder_note;

  /// (a) and not (b), or (b) and not (c).
  bool implication_violated() const;
};

/// Requires c_0 c_d != 0, content one, a squarefree F(x, 1) and a solution
/// of the query (z = k in fixed-k mode). C0 is an enclosure of the Lewis-Mahler
/// constant.
ChainReport check_proof_chain(const BinaryForm& F, std::uint64_t p, const Rational& lambda, const Solution& sol,
                              const Interval& C0, mpfr_prec_t prec = 256);

}  // namespace thuelab
