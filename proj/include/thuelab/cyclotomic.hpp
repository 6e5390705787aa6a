#pragma once

#include "thuelab/forms.hpp"

#include <cstdint>

namespace thuelab {

std::uint64_t euler_phi(std::uint64_t n);

/// Phi_n(x) as a polynomial in x.
ZPoly cyclotomic_zpoly(std::uint64_t n);
/// Homogenised Phi_n.
BinaryForm cyclotomic_poly(std::uint64_t n);

/// Homogenised minimal polynomial of 2 cos(2 pi / n), degree phi(n) / 2.
struct PsiForm {
  std::uint64_t n;
  std::uint64_t phi;
  BinaryForm form;
};

/// Builds Psi_n from Phi_n through z^d Psi_n(z + 1/z) = Phi_n(z), then checks
/// that identity exactly and isolates each root 2 cos(2 pi k / n) by a
/// certified sign change. Requires n >= 3.
PsiForm psi_form(std::uint64_t n);

/// z^d Psi(z + 1/z) == Phi_n(z) as polynomials.
bool psi_substitution_identity(const PsiForm& psi);
/// Each 2 cos(2 pi k / n), gcd(k, n) = 1, 1 <= k < n/2, sits in its own small
/// interval where Psi changes sign (interval arithmetic).
bool psi_roots_verified(const PsiForm& psi);

}  // namespace thuelab
