#pragma once

#include "thuelab/numeric/real.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace thuelab {

/// Dense univariate polynomial over Z, coefficients stored by ascending
/// power and kept trimmed (the zero polynomial has no coefficients).
class ZPoly {
 public:
  ZPoly() = default;
  explicit ZPoly(std::vector<Integer> ascending);
  ZPoly(std::initializer_list<long> ascending);

  static ZPoly monomial(const Integer& c, int degree);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const Integer& operator[](int i) const;
  const Integer& leading() const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  ZPoly& operator+=(const ZPoly& b);
  ZPoly& operator-=(const ZPoly& b);
  ZPoly& operator*=(const Integer& c);

  friend ZPoly operator+(ZPoly a, const ZPoly& b) { return a += b; }
  friend ZPoly operator-(ZPoly a, const ZPoly& b) { return a -= b; }
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
  friend ZPoly operator*(ZPoly a, const Integer& c) { return a *= c; }
  friend ZPoly operator-(ZPoly a) { return a *= Integer(-1); }
  friend bool operator==(const ZPoly& a, const ZPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string(char var = 'x') const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

Integer evaluate(const ZPoly& f, const Integer& x);
ZPoly derivative(const ZPoly& f);
/// gcd of the coefficients, always non-negative (0 for the zero polynomial).
Integer content(const ZPoly& f);
/// f / content(f), normalised to a positive leading coefficient.
ZPoly primitive_part(const ZPoly& f);
/// Quotient a / b when it exists in Z[x], otherwise nullopt.
std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b);
/// lc(b)^(deg a - deg b + 1) * a mod b.
ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b);
/// Primitive gcd with positive leading coefficient (primitive PRS).
ZPoly gcd(const ZPoly& a, const ZPoly& b);
/// Res(a, b) as the determinant of the Sylvester matrix.
Integer resultant(const ZPoly& a, const ZPoly& b);
/// Fraction-free (Bareiss) determinant of a square integer matrix.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

/// Yun decomposition f = c * prod g_k^k with g_k primitive, squarefree and
/// pairwise coprime; only factors of positive degree are returned, paired
/// with their multiplicity.
std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f);
/// Product of the distinct irreducible factors of f (primitive).
ZPoly squarefree_part(const ZPoly& f);

}  // namespace thuelab
