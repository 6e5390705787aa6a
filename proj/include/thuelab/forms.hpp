#pragma once

#include "thuelab/matrix2.hpp"
#include "thuelab/numeric/interval.hpp"
#include "thuelab/poly/zpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace thuelab {

/// F(x, y) = sum_i c_i x^i y^(d-i), stored as [c_d, c_{d-1}, ..., c_0].
/// The degree is the formal degree: c_d may be zero.
class BinaryForm {
 public:
  explicit BinaryForm(std::vector<Integer> coeffs);
  BinaryForm(std::initializer_list<long> coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// [c_d, ..., c_0]
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Coefficient of x^i y^(d-i).
  const Integer& coeff(int i) const { return coeffs_[static_cast<std::size_t>(degree() - i)]; }
  const Integer& leading() const { return coeffs_.front(); }
  const Integer& trailing() const { return coeffs_.back(); }
  bool is_zero() const;

  /// F(x, 1).
  ZPoly dehomogenize() const;
  /// Degree-d form with F(x, 1) = f; requires deg f <= d.
  static BinaryForm homogenize(const ZPoly& f, int d);
  static BinaryForm homogenize(const ZPoly& f) { return homogenize(f, f.degree()); }

  std::string to_string() const;
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Integer> coeffs_;
};

/// Product of two forms (degrees add).
BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);

Integer evaluate(const BinaryForm& F, const Integer& x, const Integer& y);
Integer content(const BinaryForm& F);
Integer height(const BinaryForm& F);
Integer height_point(const Integer& x, const Integer& y);

/// (-1)^(d(d-1)/2) Res(f, f') / c_d with f = F(x, 1); requires c_d != 0.
Integer discriminant(const BinaryForm& F);

/// F_M(x, y) = F(s x + u y, t x + v y).
BinaryForm transform(const BinaryForm& F, const IntMatrix2& M);

struct ShiftResult {
  BinaryForm form;
  IntMatrix2 matrix;
};
/// First G = F(x, j x + y), j = 0, 1, -1, 2, -2, ..., with nonzero leading
/// coefficient F(1, j), together with the matrix (1 0; j 1).
ShiftResult unimodular_shift(const BinaryForm& F);

/// Thrown when the Mahler enclosure cannot be tightened to the tolerance.
class MahlerNonConvergence : public std::runtime_error {
 public:
  MahlerNonConvergence(const std::string& what, Interval last)
      : std::runtime_error(what), last_enclosure(std::move(last)) {}
  Interval last_enclosure;
};

const Rational& default_mahler_tolerance();

/// Certified enclosure of M(F) = |c_d| prod max(1, |alpha_i|) with
/// hi / lo - 1 <= tol. Repeated roots are handled through the squarefree
/// decomposition (M is multiplicative). Requires c_d != 0.
Interval mahler_measure(const BinaryForm& F, const Rational& tol = default_mahler_tolerance());
/// Landau's bound M(F) <= (sum c_i^2)^(1/2).
Interval landau_bound(const BinaryForm& F, mpfr_prec_t prec = 128);

enum class Irreducibility { Irreducible, Reducible, Undetermined };
std::string to_string(Irreducibility v);

struct IrreducibilityResult {
  Irreducibility status = Irreducibility::Undetermined;
  /// A proper factor when reducible.
  std::optional<BinaryForm> witness;
  /// Prime modulo which F(x, 1) is irreducible, when the fast path decided.
  std::optional<std::uint64_t> certifying_prime;
};

/// Sufficient test only: F(x, 1) irreducible modulo a prime p <= prime_bound,
/// p not dividing c_d. Never answers Reducible except for the c_d = 0 case.
IrreducibilityResult irreducible_fast_path(const BinaryForm& F, std::uint64_t prime_bound = 200);
/// Complete test over Q: fast path, then squarefreeness and modular
/// factorisation with Hensel lifting. Requires content one and d >= 1.
IrreducibilityResult is_irreducible(const BinaryForm& F);

struct FormInvariants {
  Integer content;
  Integer height;
  std::optional<Integer> discriminant;
  std::optional<Interval> mahler;
  Interval landau;
  IrreducibilityResult irreducible;
};

/// All invariants; the discriminant and Mahler measure are present only when
/// c_d != 0. With `fast_only` the irreducibility flag comes from the fast path.
FormInvariants compute_invariants(const BinaryForm& F, bool fast_only = false,
                                  const Rational& tol = default_mahler_tolerance());

/// Strict expression syntax, e.g. "x^3 + x^2*y - 2*x*y^2 - y^3"; see docs/grammar.md.
BinaryForm parse_form_expression(std::string_view text);
/// JSON integer array [c_d, ..., c_0]; elements may be numbers or decimal strings.
BinaryForm parse_form_json(std::string_view text);
/// Array when the text starts with '[', expression otherwise.
BinaryForm parse_form(std::string_view text);

}  // namespace thuelab
