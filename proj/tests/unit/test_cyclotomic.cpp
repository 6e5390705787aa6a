#include <doctest.h>

#include "thuelab/cyclotomic.hpp"
#include "thuelab/error.hpp"

using namespace thuelab;

namespace {

// Oracle: x^n - 1 divided by Phi_d for every proper divisor d.
ZPoly cyclotomic_by_division(std::uint64_t n) {
  std::vector<Integer> c(n + 1);
  c[0] = -1;
  c[n] = 1;
  ZPoly f(c);
  for (std::uint64_t d = 1; d < n; ++d)
    if (n % d == 0) f = *divide_exact(f, cyclotomic_by_division(d));
  return f;
}

}  // namespace

TEST_CASE("euler phi") {
  CHECK(euler_phi(17) == 16);
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(20) == 8);
  CHECK(euler_phi(997 * 991) == 996 * 990);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == BinaryForm{1, -1});
  CHECK(cyclotomic_poly(4) == BinaryForm{1, 0, 1});
  CHECK(cyclotomic_poly(12) == BinaryForm{1, 0, -1, 0, 1});
  for (std::uint64_t n = 1; n <= 120; ++n) CHECK(cyclotomic_zpoly(n) == cyclotomic_by_division(n));
  // Phi_105 is the first with a coefficient -2.
  bool has_minus_two = false;
  const ZPoly phi105 = cyclotomic_zpoly(105);
  for (const auto& a : phi105.coeffs()) has_minus_two |= a == -2;
  CHECK(has_minus_two);
}

TEST_CASE("psi forms") {
  CHECK(psi_form(3).form == BinaryForm{1, 1});
  CHECK(psi_form(4).form == BinaryForm{1, 0});
  CHECK(psi_form(5).form == BinaryForm{1, 1, -1});
  CHECK(psi_form(7).form == BinaryForm{1, 1, -2, -1});
  CHECK(psi_form(17).form.degree() == 8);
  CHECK_THROWS_AS(psi_form(2), DomainError);
  for (std::uint64_t n = 3; n <= 60; ++n) {
    PsiForm p = psi_form(n);
    CHECK(p.form.degree() == static_cast<int>(euler_phi(n) / 2));
    CHECK(p.form.leading() == 1);
    CHECK(content(p.form) == 1);
  }
}
