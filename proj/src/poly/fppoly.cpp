#include "thuelab/poly/fppoly.hpp"

#include "thuelab/error.hpp"

#include <algorithm>

namespace thuelab::fp {

u64 pow(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e > 0) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 inv(u64 a, u64 p) {
  if (a % p == 0) throw DomainError("zero has no inverse modulo p");
  return pow(a, p - 2, p);
}

u64 residue(const Integer& v, u64 p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return r.get_ui();
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly reduce(const ZPoly& f, u64 p) {
  Poly r(f.coeffs().size());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = residue(f.coeffs()[i], p);
  trim(r);
  return r;
}

ZPoly lift(const Poly& a) {
  std::vector<Integer> c;
  c.reserve(a.size());
  for (u64 v : a) {
    Integer z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &v);
    c.push_back(z);
  }
  return ZPoly(std::move(c));
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = add(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i)
    r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 c, u64 p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = mul(a[i], c, p);
  trim(r);
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, u64 p) {
  if (b.empty()) throw DomainError("polynomial division by zero modulo p");
  if (a.size() < b.size()) return {Poly{}, a};
  Poly r = a;
  Poly q(a.size() - b.size() + 1, 0);
  const u64 lead_inv = inv(b.back(), p);
  const std::size_t db = b.size() - 1;
  for (std::size_t i = q.size(); i-- > 0;) {
    u64 c = mul(r[i + db], lead_inv, p);
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) r[i + j] = sub(r[i + j], mul(c, b[j], p), p);
  }
  r.resize(db);
  trim(r);
  trim(q);
  return {q, r};
}

Poly rem(const Poly& a, const Poly& b, u64 p) { return divrem(a, b, p).second; }

Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, inv(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, u64 p) {
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

ExtGcd ext_gcd(const Poly& a, const Poly& b, u64 p) {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{};
  Poly t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divrem(r0, r1, p);
    Poly s = sub(s0, mul(q, s1, p), p);
    Poly t = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.empty()) return {{}, s0, t0};
  const u64 li = inv(r0.back(), p);
  return {scale(r0, li, p), scale(s0, li, p), scale(t0, li, p)};
}

Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = mul(a[i], i % p, p);
  trim(r);
  return r;
}

u64 eval(const Poly& a, u64 x, u64 p) {
  u64 r = 0;
  for (std::size_t i = a.size(); i-- > 0;) r = add(mul(r, x, p), a[i], p);
  return r;
}

Poly powmod(const Poly& base, const Integer& e, const Poly& m, u64 p) {
  Poly result{1};
  result = rem(result, m, p);
  Poly b = rem(base, m, p);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = rem(mul(result, result, p), m, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) result = rem(mul(result, b, p), m, p);
  }
  return result;
}

bool is_squarefree(const Poly& f, u64 p) {
  Poly d = derivative(f, p);
  if (d.empty()) return degree(f) <= 0;
  return degree(gcd(f, d, p)) == 0;
}

namespace {

const Poly kX{0, 1};

Integer big(u64 p) {
  Integer z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(u64), 0, 0, &p);
  return z;
}

}  // namespace

bool is_irreducible(const Poly& f, u64 p) {
  const int n = degree(f);
  if (n < 1) throw DomainError("irreducibility test needs positive degree");
  if (n == 1) return true;
  Poly g = monic(f, p);
  const Integer P = big(p);
  Poly h = rem(kX, g, p);
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, P, g, p);
    if (degree(gcd(g, sub(h, kX, p), p)) > 0) return false;
  }
  return true;
}

std::vector<std::pair<Poly, int>> distinct_degree(const Poly& f, u64 p) {
  std::vector<std::pair<Poly, int>> out;
  Poly rest = monic(f, p);
  const Integer P = big(p);
  Poly h = rem(kX, rest, p);
  for (int e = 1; 2 * e <= degree(rest); ++e) {
    h = powmod(h, P, rest, p);
    Poly g = gcd(rest, sub(h, kX, p), p);
    if (degree(g) > 0) {
      out.emplace_back(g, e);
      rest = divrem(rest, g, p).first;
      h = rem(h, rest, p);
    }
  }
  if (degree(rest) > 0) out.emplace_back(rest, degree(rest));
  return out;
}

std::vector<Poly> equal_degree(const Poly& f, int e, u64 p, std::mt19937_64& rng) {
  const int n = degree(f);
  if (n == e) return {monic(f, p)};
  std::uniform_int_distribution<u64> coeff(0, p - 1);
  Integer exponent;
  if (p != 2) {
    mpz_pow_ui(exponent.get_mpz_t(), big(p).get_mpz_t(), static_cast<unsigned long>(e));
    exponent = (exponent - 1) / 2;
  }
  for (;;) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) < 1) continue;
    Poly t;
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(e-1)).
      Poly term = rem(a, f, p);
      t = term;
      for (int i = 1; i < e; ++i) {
        term = rem(mul(term, term, p), f, p);
        t = add(t, term, p);
      }
    } else {
      t = sub(powmod(a, exponent, f, p), Poly{1}, p);
    }
    Poly g = gcd(f, t, p);
    if (degree(g) > 0 && degree(g) < n) {
      auto left = equal_degree(g, e, p, rng);
      auto right = equal_degree(divrem(f, g, p).first, e, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (const auto& [g, e] : distinct_degree(f, p)) {
    auto parts = equal_degree(g, e, p, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

std::vector<u64> roots(const Poly& f, u64 p) {
  std::vector<u64> out;
  if (f.empty()) throw DomainError("every residue is a root of the zero polynomial");
  if (degree(f) == 0) return out;
  if (p < (u64{1} << 20)) {
    for (u64 r = 0; r < p; ++r)
      if (eval(f, r, p) == 0) out.push_back(r);
    return out;
  }
  // Above the brute-force range: split gcd(f, x^p - x) into linear factors.
  Poly g = monic(f, p);
  Poly split = gcd(g, sub(powmod(kX, big(p), g, p), kX, p), p);
  if (degree(split) < 1) return out;
  std::mt19937_64 rng(p);
  for (const auto& lin : equal_degree(split, 1, p, rng)) out.push_back(sub(0, lin[0], p));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace thuelab::fp
