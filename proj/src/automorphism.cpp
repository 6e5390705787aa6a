#include "thuelab/automorphism.hpp"

#include "thuelab/arith.hpp"
#include "thuelab/error.hpp"
#include "thuelab/poly/complex_roots.hpp"

#include <algorithm>
#include <array>
#include <complex>
#include <numeric>
#include <set>

namespace thuelab {

bool is_enhanced_automorphism(const BinaryForm& F, const IntMatrix2& M) {
  const BinaryForm G = transform(F, M);
  const Integer scale = ipow(abs(M.det()), static_cast<unsigned long>(F.degree()));
  const BinaryForm lhs = G * G;
  const BinaryForm rhs = F * F;
  for (std::size_t i = 0; i < lhs.coeffs().size(); ++i)
    if (lhs.coeffs()[i] != scale * rhs.coeffs()[i]) return false;
  return true;
}

bool automorphism_determinant_law(const BinaryForm& F, const IntMatrix2& M) {
  const Integer fst = evaluate(F, M.s(), M.t());
  return ipow(abs(M.det()), static_cast<unsigned long>(F.degree())) * F.leading() * F.leading() == fst * fst;
}

std::vector<IntMatrix2> EnhancedAutGroup::elements() const {
  std::vector<IntMatrix2> out;
  for (const auto& e : classes) {
    out.push_back(e.matrix);
    out.push_back(-e.matrix);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool EnhancedAutGroup::contains(const IntMatrix2& M) const {
  const IntMatrix2 c = M.canonical();
  return std::any_of(classes.begin(), classes.end(), [&](const AutElement& e) { return e.matrix == c; });
}

Rational best_rational(const Rational& value, const Integer& bound) {
  // Continued-fraction convergents p_k / q_k, kept while q_k <= bound.
  Integer p0 = 1, q0 = 0;
  Integer p1, q1 = 1;
  Integer num = value.get_num(), den = value.get_den();
  mpz_fdiv_q(p1.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Integer r = num - p1 * den;
  num = den;
  den = r;
  while (den != 0) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    Integer p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > bound) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    r = num - a * den;
    num = den;
    den = r;
  }
  return Rational(p1, q1);
}

MobiusImage apply_mobius(const IntMatrix2& M, const Integer& x, const Integer& y) {
  if (x == 0 && y == 0) throw DomainError("apply_mobius needs (x, y) != (0, 0)");
  Integer a = M.s() * x + M.u() * y;
  Integer b = M.t() * x + M.v() * y;
  Integer g = gcd(a, b);
  if (b < 0 || (b == 0 && a < 0)) g = -g;
  return {a / g, b / g, g};
}

namespace {

struct CMat {
  Complex a, b, c, d;
};

CMat mul(const CMat& m, const CMat& n) {
  return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
}

// Sends z1 -> 0, z2 -> infinity, z3 -> 1.
CMat cross_ratio_map(const Complex& z1, const Complex& z2, const Complex& z3) {
  Complex a = z3 - z2, c = z3 - z1;
  Complex b = Complex(-z1.re, -z1.im) * a;
  Complex d = Complex(-z2.re, -z2.im) * c;
  return {a, b, c, d};
}

CMat adjugate(const CMat& m) {
  return {m.d, Complex(-m.b.re, -m.b.im), Complex(-m.c.re, -m.c.im), m.a};
}

std::vector<Complex> sorted_roots(const BinaryForm& F, long precision_bits) {
  std::vector<Complex> roots;
  for (auto& ball : isolate_roots(F.dehomogenize(), precision_bits)) {
    ball.center.set_precision(precision_bits);
    roots.push_back(ball.center);
  }
  std::sort(roots.begin(), roots.end(), [](const Complex& x, const Complex& y) {
    if (x.re != y.re) return x.re < y.re;
    return x.im < y.im;
  });
  return roots;
}

class RootMatcher {
 public:
  RootMatcher(const std::vector<Complex>& roots, long prec)
      : roots_(roots), tol_(ldexp_one(-prec / 4, prec)) {}

  // Index of the root within tolerance of w, -1 if none.
  int match(const Complex& w) const {
    const Real scale = max(Real(1L, tol_.precision()), abs(w));
    const Real tol = tol_ * scale;
    int found = -1;
    for (std::size_t i = 0; i < roots_.size(); ++i) {
      if (abs(w - roots_[i]) < tol) {
        if (found >= 0) throw ComputationError("roots not separated at this precision; increase --precision");
        found = static_cast<int>(i);
      }
    }
    return found;
  }
  const Real& tolerance() const { return tol_; }

 private:
  const std::vector<Complex>& roots_;
  Real tol_;
};

std::optional<Complex> apply(const CMat& T, const Complex& z, const Real& tiny) {
  Complex den = T.c * z + T.d;
  if (abs(den) < tiny) return std::nullopt;
  return (T.a * z + T.b) / den;
}

std::optional<std::vector<int>> permutation_of(const CMat& T, const std::vector<Complex>& roots,
                                               const RootMatcher& matcher, const Real& tiny) {
  std::vector<int> perm(roots.size(), -1);
  std::vector<char> used(roots.size(), 0);
  for (std::size_t m = 0; m < roots.size(); ++m) {
    auto w = apply(T, roots[m], tiny);
    if (!w) return std::nullopt;
    int idx = matcher.match(*w);
    if (idx < 0 || used[static_cast<std::size_t>(idx)]) return std::nullopt;
    used[static_cast<std::size_t>(idx)] = 1;
    perm[m] = idx;
  }
  return perm;
}

enum class Reconstruction { Rational, LargeDenominator, Irrational };

// Real rational matrix proportional to T, as a primitive integer matrix. An
// entry whose continued fraction has no convergent within the precision
// (beyond denom_bound) is treated as irrational.
std::pair<Reconstruction, std::optional<IntMatrix2>> rationalize(const CMat& T, const Integer& denom_bound,
                                                                 long prec) {
  const Complex* entries[4] = {&T.a, &T.b, &T.c, &T.d};
  const Complex* big = entries[0];
  for (const Complex* e : entries)
    if (abs(*e) > abs(*big)) big = e;
  const Real eps = ldexp_one(-prec / 2, prec);
  const Integer wide = Integer(1) << static_cast<unsigned long>(prec / 8);
  auto close = [&](const Rational& x, const Rational& c) { return abs(Real(x - c, prec)) < eps; };
  std::vector<Rational> q;
  bool large = false;
  for (const Complex* e : entries) {
    Complex r = *e / *big;
    Rational exact;
    mpfr_get_q(exact.get_mpq_t(), r.re.raw());
    Rational cand = best_rational(exact, denom_bound);
    if (close(exact, cand)) {
      q.push_back(cand);
      continue;
    }
    if (!close(exact, best_rational(exact, wide))) return {Reconstruction::Irrational, std::nullopt};
    large = true;
  }
  if (large) return {Reconstruction::LargeDenominator, std::nullopt};
  Integer l = 1;
  for (const auto& v : q) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
  std::vector<Integer> m;
  for (const auto& v : q) m.push_back(v.get_num() * (l / v.get_den()));
  if (m[0] * m[3] - m[1] * m[2] == 0) return {Reconstruction::Irrational, std::nullopt};
  return {Reconstruction::Rational, IntMatrix2(m[0], m[1], m[2], m[3]).canonical()};
}

// Cheap double-precision screen: does T send every root near some root?
bool screen_candidate(const std::vector<std::complex<double>>& roots, std::size_t i, std::size_t j,
                      std::size_t k) {
  using C = std::complex<double>;
  auto cross = [](C z1, C z2, C z3) { return std::array<C, 4>{z3 - z2, -z1 * (z3 - z2), z3 - z1, -z2 * (z3 - z1)}; };
  const auto S = cross(roots[0], roots[1], roots[2]);
  const auto R = cross(roots[i], roots[j], roots[k]);
  // adj(R) * S
  const C a = R[3] * S[0] - R[1] * S[2], b = R[3] * S[1] - R[1] * S[3];
  const C c = -R[2] * S[0] + R[0] * S[2], d = -R[2] * S[1] + R[0] * S[3];
  for (std::size_t m = 3; m < roots.size(); ++m) {
    const C den = c * roots[m] + d;
    if (std::abs(den) == 0) return false;
    const C w = (a * roots[m] + b) / den;
    const double tol = 1e-6 * std::max(1.0, std::abs(w));
    bool hit = false;
    for (const auto& r : roots)
      if (std::abs(w - r) < tol) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

bool entries_real(const CMat& T, long prec) {
  const Complex* entries[4] = {&T.a, &T.b, &T.c, &T.d};
  const Complex* big = entries[0];
  for (const Complex* e : entries)
    if (abs(*e) > abs(*big)) big = e;
  const Real eps = ldexp_one(-prec / 4, prec);
  for (const Complex* e : entries)
    if (abs((*e / *big).im) > eps) return false;
  return true;
}

void require_aut_preconditions(const BinaryForm& F) {
  if (F.degree() < 3) throw DomainError("Aut' search needs degree at least 3");
  if (F.leading() == 0) throw DomainError("Aut' search needs c_d != 0");
  if (content(F) != 1) throw DomainError("content must be one");
}

}  // namespace

EnhancedAutGroup compute_aut_group(const BinaryForm& F, long precision_bits, const Integer& denom_bound) {
  require_aut_preconditions(F);
  if (precision_bits < 64) throw DomainError("precision must be at least 64 bits");
  if (denom_bound < 1) throw DomainError("denominator bound must be positive");

  EnhancedAutGroup G;
  G.precision_bits = precision_bits;
  G.denom_bound = denom_bound;

  const std::vector<Complex> roots = sorted_roots(F, precision_bits);
  const RootMatcher matcher(roots, precision_bits);
  const Real tiny = ldexp_one(-precision_bits / 2, precision_bits);
  const std::size_t n = roots.size();
  const CMat source = cross_ratio_map(roots[0], roots[1], roots[2]);

  // The double screen is only trusted when the roots are well separated.
  std::vector<std::complex<double>> approx;
  for (const auto& r : roots) approx.emplace_back(r.re.to_double(), r.im.to_double());
  bool use_screen = true;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      if (std::abs(approx[a] - approx[b]) < 1e-4 * std::max(1.0, std::abs(approx[a]))) use_screen = false;

  std::set<IntMatrix2> found;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        if (use_screen && !screen_candidate(approx, i, j, k)) continue;
        const CMat T = mul(adjugate(cross_ratio_map(roots[i], roots[j], roots[k])), source);
        if (!permutation_of(T, roots, matcher, tiny)) continue;
        // A root permutation over C; Aut' admits only rational (real) actions.
        if (!entries_real(T, precision_bits)) continue;
        auto [kind, M] = rationalize(T, denom_bound, precision_bits);
        const std::string where = "candidate for roots (0,1,2) -> (" + std::to_string(i) + "," +
                                  std::to_string(j) + "," + std::to_string(k) + ")";
        if (kind == Reconstruction::Irrational) continue;
        if (kind == Reconstruction::LargeDenominator) {
          G.warnings.push_back(where + " looks rational with a denominator above " + to_string(denom_bound) +
                               "; retry with a larger --denom-bound");
          continue;
        }
        if (!is_enhanced_automorphism(F, *M)) {
          G.warnings.push_back(where + " reconstructed as " + M->to_string() +
                               " fails the exact identity; retry with a larger --precision");
          continue;
        }
        found.insert(*M);
      }

  for (const auto& M : found) G.classes.push_back({M, true});

  G.closed = true;
  for (const auto& a : G.classes) {
    if (!G.contains(a.matrix.adjugate())) G.closed = false;
    for (const auto& b : G.classes)
      if (!G.contains(a.matrix * b.matrix)) G.closed = false;
  }
  return G;
}

OrbitCounts orbit_counts(const BinaryForm& F, const EnhancedAutGroup& G, long precision_bits) {
  require_aut_preconditions(F);
  const std::vector<Complex> roots = sorted_roots(F, precision_bits);
  const RootMatcher matcher(roots, precision_bits);
  const Real tiny = ldexp_one(-precision_bits / 2, precision_bits);
  const std::size_t n = roots.size();

  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : G.classes) {
    const mpfr_prec_t p = precision_bits;
    auto c = [p](const Integer& v) { return Complex(Real(v, p), Real(p)); };
    const CMat T{c(e.matrix.s()), c(e.matrix.u()), c(e.matrix.t()), c(e.matrix.v())};
    auto perm = permutation_of(T, roots, matcher, tiny);
    if (!perm) throw ComputationError("group element " + e.matrix.to_string() + " does not permute the roots");
    for (std::size_t m = 0; m < n; ++m) parent[find(m)] = find(static_cast<std::size_t>((*perm)[m]));
  }
  OrbitCounts out;
  std::vector<int> size(n, 0);
  for (std::size_t m = 0; m < n; ++m) ++size[find(m)];
  for (std::size_t m = 0; m < n; ++m) {
    out.per_root.push_back(size[find(m)]);
    out.gamma = std::max(out.gamma, size[find(m)]);
  }
  return out;
}

}  // namespace thuelab
