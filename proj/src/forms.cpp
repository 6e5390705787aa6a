#include "thuelab/forms.hpp"

#include "thuelab/arith.hpp"
#include "thuelab/error.hpp"
#include "thuelab/poly/complex_roots.hpp"
#include "thuelab/poly/factor.hpp"
#include "thuelab/poly/fppoly.hpp"

#include <algorithm>

namespace thuelab {

BinaryForm::BinaryForm(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() < 2) throw DomainError("a form needs degree at least 1 (two or more coefficients)");
}

BinaryForm::BinaryForm(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  if (coeffs_.size() < 2) throw DomainError("a form needs degree at least 1 (two or more coefficients)");
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c == 0; });
}

ZPoly BinaryForm::dehomogenize() const { return ZPoly(std::vector<Integer>(coeffs_.rbegin(), coeffs_.rend())); }

BinaryForm BinaryForm::homogenize(const ZPoly& f, int d) {
  if (f.degree() > d || d < 0) throw DomainError("homogenisation degree below the polynomial degree");
  std::vector<Integer> c(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= f.degree(); ++i) c[static_cast<std::size_t>(d - i)] = f[i];
  return BinaryForm(std::move(c));
}

std::string BinaryForm::to_string() const {
  const int d = degree();
  std::string out;
  for (int i = d; i >= 0; --i) {
    const Integer& c = coeff(i);
    if (c == 0) continue;
    Integer a = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    std::string mono;
    auto append = [&mono](char var, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    append('x', i);
    append('y', d - i);
    if (mono.empty()) {
      out += thuelab::to_string(a);
    } else {
      if (a != 1) out += thuelab::to_string(a) + "*";
      out += mono;
    }
  }
  return out.empty() ? "0" : out;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  // Index is the power of y in both factors, so this is a plain convolution.
  std::vector<Integer> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i)
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  return BinaryForm(std::move(c));
}

Integer evaluate(const BinaryForm& F, const Integer& x, const Integer& y) {
  // Horner in x with a running power of y.
  const auto& c = F.coeffs();
  Integer acc = c.front();
  Integer ypow = 1;
  for (std::size_t k = 1; k < c.size(); ++k) {
    ypow *= y;
    acc = acc * x + c[k] * ypow;
  }
  return acc;
}

Integer content(const BinaryForm& F) {
  Integer g = 0;
  for (const auto& c : F.coeffs()) g = gcd(g, c);
  if (g == 0) throw DomainError("the zero form has no content");
  return g;
}

Integer height(const BinaryForm& F) {
  Integer h = 0;
  for (const auto& c : F.coeffs()) h = std::max<Integer>(h, abs(c));
  return h;
}

Integer height_point(const Integer& x, const Integer& y) { return std::max<Integer>(abs(x), abs(y)); }

Integer discriminant(const BinaryForm& F) {
  const int d = F.degree();
  if (d < 1) throw DomainError("discriminant needs degree at least 1");
  if (F.leading() == 0) throw DomainError("leading coefficient is zero; apply unimodular shift first");
  if (d == 1) return 1;
  ZPoly f = F.dehomogenize();
  Integer r = resultant(f, derivative(f)) / F.leading();
  const long sign_exp = static_cast<long>(d) * (d - 1) / 2;
  return sign_exp % 2 == 0 ? r : Integer(-r);
}

BinaryForm transform(const BinaryForm& F, const IntMatrix2& M) {
  const int d = F.degree();
  // Homogeneous polynomials as vectors indexed by the power of y.
  using Hom = std::vector<Integer>;
  auto mul = [](const Hom& a, const Hom& b) {
    Hom c(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  const Hom l1{M.s(), M.u()};
  const Hom l2{M.t(), M.v()};
  std::vector<Hom> p1{Hom{1}}, p2{Hom{1}};
  for (int i = 1; i <= d; ++i) {
    p1.push_back(mul(p1.back(), l1));
    p2.push_back(mul(p2.back(), l2));
  }
  Hom out(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    if (F.coeff(i) == 0) continue;
    Hom term = mul(p1[static_cast<std::size_t>(i)], p2[static_cast<std::size_t>(d - i)]);
    for (std::size_t k = 0; k < term.size(); ++k) out[k] += F.coeff(i) * term[k];
  }
  return BinaryForm(std::move(out));
}

ShiftResult unimodular_shift(const BinaryForm& F) {
  if (F.is_zero()) throw DomainError("the zero form has no unimodular shift");
  for (long step = 0;; ++step) {
    const long j = step % 2 == 1 ? (step + 1) / 2 : -(step / 2);
    // F(1, j) is the new leading coefficient; a nonzero form of degree d has
    // at most d such zeros, so the loop ends by step 2d.
    if (evaluate(F, 1, j) == 0) continue;
    IntMatrix2 M(1, 0, j, 1);
    return {transform(F, M), M};
  }
}

const Rational& default_mahler_tolerance() {
  static const Rational tol(1, 1000000000000L);
  return tol;
}

namespace {

Interval mahler_of_squarefree(const ZPoly& g, mpfr_prec_t prec) {
  Interval m = abs(Interval(g.leading(), prec));
  if (g.degree() < 1) return m;
  const Interval one(1L, prec);
  for (const auto& ball : isolate_roots(g, prec)) m *= max(one, ball.modulus());
  return m;
}

Rational relative_width_bound(const Interval& v) {
  // hi / lo - 1 as an exact rational from the dyadic endpoints.
  Rational lo, hi;
  mpfr_get_q(lo.get_mpq_t(), v.lo().raw());
  mpfr_get_q(hi.get_mpq_t(), v.hi().raw());
  if (lo <= 0) return Rational(1000000);
  return hi / lo - 1;
}

}  // namespace

Interval mahler_measure(const BinaryForm& F, const Rational& tol) {
  if (F.degree() < 1) throw DomainError("Mahler measure needs degree at least 1");
  if (F.leading() == 0) throw DomainError("leading coefficient is zero; apply unimodular shift first");
  if (tol <= 0) throw DomainError("tolerance must be positive");
  ZPoly f = F.dehomogenize();
  const auto parts = squarefree_decomposition(f);
  // f = c * prod g_k^k with primitive g_k; c carries the content and sign.
  Integer lc_prod = 1;
  for (const auto& [g, k] : parts) lc_prod *= ipow(g.leading(), static_cast<unsigned long>(k));
  const Integer c = abs(f.leading()) / abs(lc_prod);

  constexpr mpfr_prec_t cap = 1 << 14;
  Interval last(64);
  for (mpfr_prec_t prec = 64; prec <= cap; prec *= 2) {
    Interval m(c, prec);
    for (const auto& [g, k] : parts) m *= pow(mahler_of_squarefree(g, prec), static_cast<unsigned long>(k));
    last = m;
    if (relative_width_bound(m) <= tol) return m;
  }
  throw MahlerNonConvergence("Mahler measure did not reach the requested tolerance", last);
}

Interval landau_bound(const BinaryForm& F, mpfr_prec_t prec) {
  Integer s = 0;
  for (const auto& c : F.coeffs()) s += c * c;
  return sqrt(Interval(s, prec));
}

std::string to_string(Irreducibility v) {
  switch (v) {
    case Irreducibility::Irreducible: return "true";
    case Irreducibility::Reducible: return "false";
    case Irreducibility::Undetermined: return "undetermined";
  }
  return "undetermined";
}

namespace {

void require_primitive(const BinaryForm& F) {
  if (F.degree() < 1) throw DomainError("irreducibility needs degree at least 1");
  if (content(F) != 1) throw DomainError("content must be one");
}

}  // namespace

IrreducibilityResult irreducible_fast_path(const BinaryForm& F, std::uint64_t prime_bound) {
  require_primitive(F);
  IrreducibilityResult out;
  if (F.leading() == 0) {
    out.status = Irreducibility::Reducible;
    out.witness = BinaryForm{0, 1};
    return out;
  }
  if (F.degree() == 1) {
    out.status = Irreducibility::Irreducible;
    return out;
  }
  const ZPoly f = F.dehomogenize();
  for (std::uint64_t p : primes_in_range(2, prime_bound)) {
    if (fp::residue(f.leading(), p) == 0) continue;
    if (fp::is_irreducible(fp::reduce(f, p), p)) {
      out.status = Irreducibility::Irreducible;
      out.certifying_prime = p;
      return out;
    }
  }
  return out;
}

IrreducibilityResult is_irreducible(const BinaryForm& F) {
  IrreducibilityResult out = irreducible_fast_path(F);
  if (out.status != Irreducibility::Undetermined) return out;
  const ZPoly f = F.dehomogenize();
  const ZPoly g = gcd(f, derivative(f));
  if (g.degree() > 0) {
    out.status = Irreducibility::Reducible;
    out.witness = BinaryForm::homogenize(g);
    return out;
  }
  const auto factors = factor_squarefree_zassenhaus(primitive_part(f));
  if (factors.size() <= 1) {
    out.status = Irreducibility::Irreducible;
  } else {
    out.status = Irreducibility::Reducible;
    out.witness = BinaryForm::homogenize(factors.front());
  }
  return out;
}

FormInvariants compute_invariants(const BinaryForm& F, bool fast_only, const Rational& tol) {
  FormInvariants inv{content(F), height(F), std::nullopt, std::nullopt, landau_bound(F), {}};
  if (F.leading() != 0 && F.degree() >= 1) {
    inv.discriminant = discriminant(F);
    inv.mahler = mahler_measure(F, tol);
  }
  if (inv.content == 1 && F.degree() >= 1) inv.irreducible = fast_only ? irreducible_fast_path(F) : is_irreducible(F);
  return inv;
}

}  // namespace thuelab
