#pragma once

#include "thuelab/forms.hpp"

#include <optional>
#include <string>
#include <vector>

namespace thuelab {

/// F(s x + u y, t x + v y)^2 == |sv - tu|^d F(x, y)^2 exactly.
bool is_enhanced_automorphism(const BinaryForm& F, const IntMatrix2& M);

/// |sv - tu|^d == (F(s, t) / c_d)^2 exactly.
bool automorphism_determinant_law(const BinaryForm& F, const IntMatrix2& M);

struct AutElement {
  IntMatrix2 matrix;  // canonical primitive representative
  bool verified = false;
};

/// Aut'|F| stored by projective classes. M and -M give the same action on
/// roots but are distinct Aut' elements, so every class stands for
/// `sign_multiplicity` = 2 elements.
struct EnhancedAutGroup {
  std::vector<AutElement> classes;  // sorted
  int sign_multiplicity = 2;
  bool closed = false;              // products and inverses stay in the set
  long precision_bits = 256;
  Integer denom_bound = 1000000;
  /// Candidates that permuted the roots numerically but could not be turned
  /// into verified integer matrices within the search parameters.
  std::vector<std::string> warnings;

  std::size_t cardinality() const { return classes.size() * static_cast<std::size_t>(sign_multiplicity); }
  /// Every element, M and -M for each class, sorted.
  std::vector<IntMatrix2> elements() const;
  bool contains(const IntMatrix2& M) const;
};

/// Numeric candidates from images of three fixed roots, continued-fraction
/// rationalisation, then exact verification. Requires content one, c_d != 0,
/// d >= 3. Throws ComputationError when the roots cannot be matched at the
/// given precision.
EnhancedAutGroup compute_aut_group(const BinaryForm& F, long precision_bits = 256,
                                   const Integer& denom_bound = 1000000);

struct OrbitCounts {
  int gamma = 0;
  std::vector<int> per_root;  // roots sorted by (re, im)
};
/// Size of the orbit of each root of F(x, 1) under the Moebius action of G.
OrbitCounts orbit_counts(const BinaryForm& F, const EnhancedAutGroup& G, long precision_bits = 256);

struct MobiusImage {
  Integer x, y;
  /// (s x + u y, t x + v y) = factor * (x', y'); a negative factor records a sign flip.
  Integer factor;
};
/// Canonical primitive representative (y > 0, or y = 0 and x > 0) of M (x, y).
MobiusImage apply_mobius(const IntMatrix2& M, const Integer& x, const Integer& y);

/// Best rational approximation p/q with q <= bound of an exact rational value.
Rational best_rational(const Rational& value, const Integer& bound);

}  // namespace thuelab
