#pragma once

#include "thuelab/numeric/interval.hpp"
#include "thuelab/poly/zpoly.hpp"

#include <optional>
#include <vector>

namespace thuelab {

/// Disk |z - center| <= radius holding exactly one root.
struct RootBall {
  Complex center;
  Real radius;

  /// Enclosure of |root|.
  Interval modulus() const;
};

/// Aberth-Ehrlich approximations of the roots of a squarefree f. Starts at
/// low precision and refines up to `prec` bits; `start` seeds the iteration.
std::vector<Complex> approximate_roots(const ZPoly& f, mpfr_prec_t prec,
                                       const std::vector<Complex>* start = nullptr);

/// Certifies approximations with the inclusion disks |z - z_i| <= n |W_i|,
/// W_i = f(z_i) / (lc(f) prod_{j != i} (z_i - z_j)). Pairwise disjoint disks
/// each contain exactly one root. Returns nullopt when they overlap.
std::optional<std::vector<RootBall>> certify_roots(const ZPoly& f, const std::vector<Complex>& approx,
                                                   mpfr_prec_t prec);

/// Certified isolating disks for all roots of a squarefree f of positive
/// degree, doubling precision from `prec` until certification succeeds.
/// Throws ComputationError past `max_prec`.
std::vector<RootBall> isolate_roots(const ZPoly& f, mpfr_prec_t prec, mpfr_prec_t max_prec = 1 << 15);

}  // namespace thuelab
