#include "thuelab/cyclotomic.hpp"

#include "thuelab/error.hpp"

#include <numeric>

namespace thuelab {

namespace {

std::vector<std::pair<std::uint64_t, int>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

// c * (x^k - 1) and exact division by it, on ascending coefficient vectors.
void mul_binomial(std::vector<Integer>& a, std::uint64_t k) {
  a.resize(a.size() + k);
  for (std::size_t i = a.size(); i-- > 0;) a[i] = (i >= k ? a[i - k] : Integer(0)) - a[i];
}

void div_binomial(std::vector<Integer>& a, std::uint64_t k) {
  // a = q (x^k - 1): q_i = q_{i-k} - a_i read from the bottom.
  const std::size_t n = a.size() - k;
  std::vector<Integer> q(n);
  for (std::size_t i = 0; i < n; ++i) q[i] = (i >= k ? q[i - k] : Integer(0)) - a[i];
  a = std::move(q);
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) throw DomainError("euler_phi needs n >= 1");
  std::uint64_t r = n;
  for (const auto& [p, e] : factorize(n)) r = r / p * (p - 1);
  return r;
}

ZPoly cyclotomic_zpoly(std::uint64_t n) {
  if (n == 0) throw DomainError("cyclotomic polynomial needs n >= 1");
  // Phi_n = prod_{d | n} (x^d - 1)^mu(n/d); only squarefree n/d contribute.
  const auto primes = factorize(n);
  const std::size_t r = primes.size();
  std::vector<Integer> a{1};
  std::vector<std::uint64_t> divide_by;
  for (std::uint64_t mask = 0; mask < (1ULL << r); ++mask) {
    std::uint64_t m = 1;
    int bits = 0;
    for (std::size_t i = 0; i < r; ++i)
      if (mask >> i & 1) {
        m *= primes[i].first;
        ++bits;
      }
    if (bits % 2 == 0)
      mul_binomial(a, n / m);
    else
      divide_by.push_back(n / m);
  }
  for (std::uint64_t k : divide_by) div_binomial(a, k);
  return ZPoly(std::move(a));
}

BinaryForm cyclotomic_poly(std::uint64_t n) { return BinaryForm::homogenize(cyclotomic_zpoly(n)); }

PsiForm psi_form(std::uint64_t n) {
  if (n < 3) throw DomainError("psi_form needs n >= 3");
  const std::uint64_t phi = euler_phi(n);
  const int d = static_cast<int>(phi / 2);
  const ZPoly cyc = cyclotomic_zpoly(n);

  // z^-d Phi_n(z) = c_0 + sum_k c_k (z^k + z^-k), c_k the coefficient of z^(d+k);
  // z^k + z^-k = P_k(w) with P_0 = 2, P_1 = w, P_{k+1} = w P_k - P_{k-1}.
  const ZPoly w{0, 1};
  ZPoly prev{2}, cur = w;
  ZPoly psi(std::vector<Integer>{cyc[d]});
  for (int k = 1; k <= d; ++k) {
    psi += cur * cyc[d + k];
    ZPoly next = w * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  PsiForm out{n, phi, BinaryForm::homogenize(psi, d)};
  if (!psi_substitution_identity(out)) throw ComputationError("substitution identity failed for Psi_n");
  if (!psi_roots_verified(out)) throw ComputationError("numeric root check failed for Psi_n");
  return out;
}

bool psi_substitution_identity(const PsiForm& psi) {
  // z^d Psi(z + 1/z) = sum_i a_i (z^2 + 1)^i z^(d-i).
  const int d = psi.form.degree();
  const ZPoly q{1, 0, 1};
  ZPoly pw{1};
  ZPoly total;
  for (int i = 0; i <= d; ++i) {
    if (psi.form.coeff(i) != 0) total += pw * ZPoly::monomial(psi.form.coeff(i), d - i);
    pw = pw * q;
  }
  return total == cyclotomic_zpoly(psi.n);
}

bool psi_roots_verified(const PsiForm& psi) {
  const std::uint64_t n = psi.n;
  const ZPoly f = psi.form.dehomogenize();
  const auto& c = f.coeffs();
  Integer hmax = 1;
  for (const auto& a : c) hmax = std::max<Integer>(hmax, abs(a));
  const long hbits = static_cast<long>(mpz_sizeinbase(hmax.get_mpz_t(), 2));

  auto eval = [&](const Interval& x) {
    const mpfr_prec_t prec = x.lo().precision();
    Interval acc(0L, prec);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + Interval(c[i], prec);
    return acc;
  };

  for (mpfr_prec_t prec = 128 + 2 * hbits; prec <= (1 << 14); prec *= 2) {
    const Interval two_pi = Interval::pi(prec) * Interval(2L, prec);
    const Interval eps(Rational(1) / Rational(Integer(1) << (prec / 3)), prec);
    std::vector<Interval> cells;
    bool ok = true;
    for (std::uint64_t k = 1; 2 * k < n && ok; ++k) {
      if (std::gcd(k, n) != 1) continue;
      const Interval theta = two_pi * Interval(static_cast<long>(k), prec) / Interval(static_cast<long>(n), prec);
      Real cl(prec), ch(prec);
      mpfr_cos(cl.raw(), theta.hi().raw(), MPFR_RNDD);
      mpfr_cos(ch.raw(), theta.lo().raw(), MPFR_RNDU);
      // theta lies in (0, pi), where cos is decreasing.
      const Interval root = Interval::bounds(cl, ch, prec) * Interval(2L, prec);
      const Interval left = Interval::point(root.lo(), prec) - eps;
      const Interval right = Interval::point(root.hi(), prec) + eps;
      const Interval fl = eval(left), fr = eval(right);
      const bool change = (fl.negative() && fr.positive()) || (fl.positive() && fr.negative());
      if (!change) ok = false;
      cells.push_back(Interval::bounds(left.lo(), right.hi(), prec));
    }
    if (!ok) continue;
    if (cells.size() != static_cast<std::size_t>(psi.form.degree())) return false;
    // Cells come out in decreasing order of the root; disjointness pins one root per cell.
    for (std::size_t i = 1; i < cells.size(); ++i)
      if (!(cells[i].hi() < cells[i - 1].lo())) ok = false;
    if (ok) return true;
  }
  return false;
}

}  // namespace thuelab
