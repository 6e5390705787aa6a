#include "thuelab/poly/factor.hpp"

#include "thuelab/arith.hpp"
#include "thuelab/error.hpp"

#include <algorithm>
#include <numeric>

namespace thuelab {

Integer symmetric_mod(const Integer& v, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

namespace {

using fp::u64;

ZPoly reduce_mod(const ZPoly& a, const Integer& m) {
  std::vector<Integer> c = a.coeffs();
  for (auto& x : c) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return ZPoly(std::move(c));
}

// Division by a monic b modulo m.
std::pair<ZPoly, ZPoly> divrem_monic_mod(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.degree() < b.degree()) return {ZPoly{}, reduce_mod(a, m)};
  std::vector<Integer> r = reduce_mod(a, m).coeffs();
  r.resize(static_cast<std::size_t>(a.degree()) + 1, 0);
  const int db = b.degree();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  for (int i = a.degree() - db; i >= 0; --i) {
    Integer c = r[static_cast<std::size_t>(i + db)];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[static_cast<std::size_t>(i)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      Integer& t = r[static_cast<std::size_t>(i + j)];
      t -= c * b[j];
      mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {ZPoly(std::move(q)), ZPoly(std::move(r))};
}

Integer inverse_mod(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw ComputationError("leading coefficient not invertible during Hensel lifting");
  return r;
}

ZPoly make_monic_mod(const ZPoly& a, const Integer& m) {
  return reduce_mod(a * inverse_mod(a.leading(), m), m);
}

// One quadratic Hensel step: f = g h, s g + t h = 1 (mod m) to modulus m^2.
// h monic, deg s < deg h, deg t < deg g.
struct Quad {
  ZPoly g, h, s, t;
};

Quad hensel_step(const ZPoly& f, const Quad& in, const Integer& m) {
  const Integer m2 = m * m;
  ZPoly e = reduce_mod(f - in.g * in.h, m2);
  auto [q, r] = divrem_monic_mod(in.s * e, in.h, m2);
  ZPoly g = reduce_mod(in.g + in.t * e + q * in.g, m2);
  ZPoly h = reduce_mod(in.h + r, m2);
  ZPoly b = reduce_mod(in.s * g + in.t * h - ZPoly{1}, m2);
  auto [c, d] = divrem_monic_mod(in.s * b, h, m2);
  ZPoly s = reduce_mod(in.s - d, m2);
  ZPoly t = reduce_mod(in.t - in.t * b - c * g, m2);
  return {std::move(g), std::move(h), std::move(s), std::move(t)};
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

Integer big(u64 v) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &v);
  return z;
}

}  // namespace

HenselLift hensel_lift_factors(const ZPoly& f, const std::vector<fp::Poly>& factors, u64 q,
                               const Integer& bound) {
  const Integer Q = big(q);
  Integer modulus = Q;
  while (modulus <= bound) modulus *= modulus;

  HenselLift out;
  out.modulus = modulus;
  if (factors.size() == 1) {
    out.factors.push_back(make_monic_mod(f, modulus));
    return out;
  }
  ZPoly target = f;
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    fp::Poly rest{1};
    for (std::size_t j = i + 1; j < factors.size(); ++j) rest = fp::mul(rest, factors[j], q);
    const u64 lc = fp::residue(target.leading(), q);
    fp::Poly g0 = fp::scale(factors[i], lc, q);
    fp::ExtGcd eg = fp::ext_gcd(g0, rest, q);
    if (eg.g != fp::Poly{1}) throw ComputationError("modular factors are not coprime");
    Quad state{fp::lift(g0), fp::lift(rest), fp::lift(eg.s), fp::lift(eg.t)};
    for (Integer m = Q; m < modulus; m *= m) state = hensel_step(reduce_mod(target, m * m), state, m);
    out.factors.push_back(make_monic_mod(state.g, modulus));
    target = state.h;
  }
  out.factors.push_back(reduce_mod(target, modulus));
  return out;
}

std::vector<ZPoly> factor_squarefree_zassenhaus(const ZPoly& input) {
  ZPoly f = primitive_part(input);
  if (f.degree() < 1) throw DomainError("factorisation needs positive degree");
  if (f.degree() == 1) return {f};

  // Pick the prime with the fewest modular factors among a handful of good ones.
  std::mt19937_64 rng(0x7a55e7ull);
  std::vector<fp::Poly> best;
  u64 best_q = 0;
  int good = 0;
  for (u64 q : primes_in_range(3, 1u << 16)) {
    if (fp::residue(f.leading(), q) == 0) continue;
    fp::Poly fq = fp::reduce(f, q);
    if (!fp::is_squarefree(fq, q)) continue;
    auto parts = fp::factor_squarefree(fp::monic(fq, q), q, rng);
    if (parts.size() == 1) return {f};
    if (best.empty() || parts.size() < best.size()) {
      best = std::move(parts);
      best_q = q;
    }
    if (++good >= 8) break;
  }
  if (best.empty()) throw ComputationError("no suitable prime for modular factorisation");

  // Mignotte: every factor g of f has |g|_inf <= 2^deg(f) * |f|_2, and the
  // recombined candidate is lc(f) * g / lc(g).
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer bound = 2 * abs(f.leading()) * ipow(2, static_cast<unsigned long>(f.degree())) * (isqrt(norm2) + 1);
  HenselLift lifted = hensel_lift_factors(f, best, best_q, bound);
  const Integer& M = lifted.modulus;

  std::vector<ZPoly> found;
  std::vector<ZPoly> pool = lifted.factors;
  ZPoly rest = f;
  for (std::size_t size = 1; 2 * size <= pool.size(); ++size) {
    bool progress = true;
    while (progress && 2 * size <= pool.size()) {
      progress = false;
      std::vector<std::size_t> idx(size);
      std::iota(idx.begin(), idx.end(), 0);
      for (;;) {
        ZPoly cand = ZPoly{std::vector<Integer>{rest.leading()}};
        for (std::size_t i : idx) cand = reduce_mod(cand * pool[i], M);
        std::vector<Integer> c = cand.coeffs();
        for (auto& x : c) x = symmetric_mod(x, M);
        ZPoly g = primitive_part(ZPoly(std::move(c)));
        if (g.degree() > 0) {
          if (auto quotient = divide_exact(rest, g)) {
            found.push_back(g);
            rest = *quotient;
            for (std::size_t k = size; k-- > 0;) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(idx[k]));
            progress = true;
            break;
          }
        }
        if (!next_combination(idx, pool.size())) break;
      }
    }
  }
  if (rest.degree() > 0) found.push_back(primitive_part(rest));
  std::sort(found.begin(), found.end(), [](const ZPoly& a, const ZPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.coeffs() < b.coeffs();
  });
  return found;
}

namespace {

std::vector<Integer> positive_divisors(const Integer& v) {
  Integer n = abs(v);
  constexpr unsigned long kTrialCap = 10'000'000;
  if (n > Integer(kTrialCap) * kTrialCap) throw ComputationError("value too large for Kronecker divisor search");
  std::vector<std::pair<Integer, int>> fac;
  for (unsigned long p = 2; Integer(p) * p <= n; ++p) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        n /= p;
        ++e;
      }
      fac.emplace_back(Integer(p), e);
    }
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<Integer> divs{1};
  for (const auto& [p, e] : fac) {
    const std::size_t base = divs.size();
    Integer pk = 1;
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::optional<ZPoly> kronecker_find_factor(const ZPoly& input, int maxDegree) {
  ZPoly f = primitive_part(input);
  const int n = f.degree();
  maxDegree = std::min(maxDegree, n / 2);
  if (n < 2) return std::nullopt;

  // Candidate evaluation points 0, 1, -1, 2, -2, ...
  std::vector<long> points;
  std::vector<Integer> values;
  for (long k = 0; static_cast<int>(points.size()) < 2 * n + 4; ++k) {
    for (long a : {k, -k}) {
      if (k == 0 && !points.empty()) continue;
      Integer v = evaluate(f, Integer(a));
      if (v == 0) return primitive_part(ZPoly{-a, 1});
      points.push_back(a);
      values.push_back(v);
    }
  }

  constexpr std::size_t kBudget = 2'000'000;
  for (int s = 1; s <= maxDegree; ++s) {
    // Use the s + 1 points whose values have the fewest divisors.
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), 0);
    std::vector<std::vector<Integer>> divs(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) divs[i] = positive_divisors(values[i]);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return divs[a].size() < divs[b].size(); });
    order.resize(static_cast<std::size_t>(s) + 1);

    std::size_t combos = 1;
    for (std::size_t i : order) {
      combos *= divs[i].size() * (i == order.front() ? 1 : 2);
      if (combos > kBudget) throw ComputationError("Kronecker search budget exceeded");
    }

    // Lagrange numerators N_i and denominators den_i over the chosen points.
    const std::size_t m = order.size();
    std::vector<ZPoly> num(m);
    std::vector<Integer> den(m, 1);
    for (std::size_t i = 0; i < m; ++i) {
      ZPoly acc{1};
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i) continue;
        acc = acc * ZPoly{-points[order[j]], 1};
        den[i] *= Integer(points[order[i]] - points[order[j]]);
      }
      num[i] = acc;
    }
    Integer D = 1;
    for (const auto& d : den) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), d.get_mpz_t());

    std::vector<std::size_t> pick(m, 0);
    std::vector<int> sign(m, 1);
    for (;;) {
      ZPoly g;
      for (std::size_t i = 0; i < m; ++i) g += num[i] * (sign[i] * divs[order[i]][pick[i]] * (D / den[i]));
      bool integral = !g.is_zero();
      for (const auto& c : g.coeffs())
        if (!mpz_divisible_p(c.get_mpz_t(), D.get_mpz_t())) {
          integral = false;
          break;
        }
      if (integral) {
        std::vector<Integer> c = g.coeffs();
        for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), D.get_mpz_t());
        ZPoly cand = primitive_part(ZPoly(std::move(c)));
        if (cand.degree() >= 1 && cand.degree() < n && divide_exact(f, cand)) return cand;
      }
      // Advance the mixed-radix counter; the first point keeps a positive sign.
      std::size_t i = 0;
      for (; i < m; ++i) {
        if (i > 0 && sign[i] == 1) {
          sign[i] = -1;
          break;
        }
        sign[i] = 1;
        if (++pick[i] < divs[order[i]].size()) break;
        pick[i] = 0;
      }
      if (i == m) break;
    }
  }
  return std::nullopt;
}

}  // namespace thuelab
