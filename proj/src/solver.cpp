#include "thuelab/solver.hpp"

#include "thuelab/arith.hpp"
#include "thuelab/error.hpp"
#include "thuelab/padic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <thread>

namespace thuelab {

namespace {

__extension__ using i128 = __int128;
__extension__ using u128 = unsigned __int128;

Integer from_i128(i128 v) {
  const bool neg = v < 0;
  u128 m = neg ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
  Integer out = static_cast<unsigned long>(m >> 64);
  out <<= 64;
  out += static_cast<unsigned long>(m & 0xffffffffffffffffULL);
  return neg ? Integer(-out) : out;
}

// Evaluates |F| on the box, in 128-bit integers when the worst case
// (d + 1) H(F) H^d stays below 2^126.
class Evaluator {
 public:
  Evaluator(const BinaryForm& F, long H) : F_(F) {
    const int d = F.degree();
    const Integer worst = Integer(d + 1) * height(F) * ipow(Integer(std::max(H, 1L)), static_cast<unsigned long>(d));
    fast_ = worst < (Integer(1) << 126) && height(F).fits_slong_p();
    if (fast_)
      for (const auto& c : F.coeffs()) c128_.push_back(static_cast<i128>(c.get_si()));
  }

  bool fast() const { return fast_; }

  i128 eval_fast(long x, long y) const {
    i128 acc = c128_.front();
    i128 ypow = 1;
    for (std::size_t k = 1; k < c128_.size(); ++k) {
      ypow *= y;
      acc = acc * x + c128_[k] * ypow;
    }
    return acc;
  }

  Integer eval(long x, long y) const { return evaluate(F_, Integer(x), Integer(y)); }

 private:
  const BinaryForm& F_;
  bool fast_ = false;
  std::vector<i128> c128_;
};

struct Scan {
  const Query& Q;
  const Evaluator& ev;
  Integer p;

  // Appends (x, y) when it is a solution.
  void consider(long x, long y, std::vector<Solution>& out) const {
    if (std::gcd(x, y) != 1) return;
    Integer N;
    long z = 0;
    if (ev.fast()) {
      i128 v = ev.eval_fast(x, y);
      if (v == 0) return;
      if (v < 0) v = -v;
      const auto pp = static_cast<i128>(Q.p);
      if (v % pp != 0) return;
      N = from_i128(v);
    } else {
      N = abs(ev.eval(x, y));
      if (N == 0) return;
    }
    z = static_cast<long>(vp_unchecked(N, p));
    if (z < 1) return;
    if (Q.mode == SolveMode::FixedK && z != Q.k) return;
    Integer t = N / ipow(p, static_cast<unsigned long>(z));
    if (!lambda_check(t, p, z, Q.lambda)) return;
    out.push_back(Solution{Integer(x), Integer(y), std::move(N), z, std::move(t), std::nullopt});
  }
};

// Splits y in [1, H] into contiguous blocks, runs body(lo, hi, out) on each
// block in its own thread and merges.
template <class Body>
std::vector<Solution> parallel_rows(const Query& Q, Body body) {
  const long H = Q.height;
  const unsigned n = std::max(1u, std::min<unsigned>(Q.threads, static_cast<unsigned>(std::max(H, 1L))));
  std::vector<std::vector<Solution>> parts(n);
  if (n == 1) {
    body(1, H, parts[0]);
  } else {
    std::vector<std::thread> pool;
    const long step = (H + static_cast<long>(n) - 1) / static_cast<long>(n);
    for (unsigned i = 0; i < n; ++i) {
      const long lo = 1 + static_cast<long>(i) * step;
      const long hi = std::min(H, lo + step - 1);
      pool.emplace_back([&body, &parts, i, lo, hi] { body(lo, hi, parts[i]); });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<Solution> out;
  for (auto& part : parts) std::move(part.begin(), part.end(), std::back_inserter(out));
  return out;
}

std::vector<Solution> finish(const Query& Q, std::vector<Solution> out) {
  std::sort(out.begin(), out.end(), solution_less);
  for (const auto& s : out) validate_solution(Q, s);
  return out;
}

}  // namespace

bool solution_less(const Solution& a, const Solution& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

bool lambda_check(const Integer& t, const Integer& p, long z, const Rational& lambda) {
  if (t < 1) throw DomainError("lambda_check needs t >= 1");
  if (z < 1) throw DomainError("lambda_check needs z >= 1");
  if (lambda < 0) throw DomainError("lambda must be non-negative");
  if (t == 1) return true;
  const Integer& r = lambda.get_num();
  const Integer& q = lambda.get_den();
  if (r == 0) return false;
  // Compare logarithms first; only near-ties pay for the exact powers.
  const double lhs = q.get_d() * std::log(t.get_d());
  const double rhs = static_cast<double>(z) * r.get_d() * std::log(p.get_d());
  if (std::isfinite(lhs) && std::isfinite(rhs) && std::abs(lhs - rhs) > 1e-6 * std::max(1.0, std::abs(rhs)))
    return lhs < rhs;
  if (!q.fits_ulong_p() || !r.fits_ulong_p()) throw DomainError("lambda numerator or denominator too large");
  const Integer e = Integer(z) * r;
  if (!e.fits_ulong_p()) throw DomainError("exponent too large");
  return ipow(t, q.get_ui()) <= ipow(p, e.get_ui());
}

void validate_query(const Query& Q) {
  if (!is_prime(Integer(static_cast<unsigned long>(Q.p)))) throw DomainError("p must be prime");
  if (Q.mode == SolveMode::FixedK && Q.k < 1) throw DomainError("fixed-k mode requires k >= 1");
  if (Q.lambda < 0) throw DomainError("lambda must be non-negative");
  if (Q.height < 0) throw DomainError("height bound must be non-negative");
  if (Q.height > (1L << 40)) throw DomainError("height bound too large");
  if (content(Q.F) != 1) throw DomainError("content must be one");
}

void validate_solution(const Query& Q, const Solution& s) {
  const Integer p = static_cast<unsigned long>(Q.p);
  auto fail = [&s](const std::string& why) {
    throw ComputationError("invalid solution (" + to_string(s.x) + ", " + to_string(s.y) + "): " + why);
  };
  if (!(s.y > 0 || (s.y == 0 && s.x > 0))) fail("not canonical");
  if (gcd(s.x, s.y) != 1) fail("not primitive");
  if (height_point(s.x, s.y) > Q.height) fail("outside the box");
  if (s.N != abs(evaluate(Q.F, s.x, s.y))) fail("N differs from |F(x, y)|");
  if (s.N != s.t * ipow(p, static_cast<unsigned long>(s.z))) fail("N != t p^z");
  if (s.t % p == 0) fail("p divides t");
  if (s.z < 1 || (Q.mode == SolveMode::FixedK && s.z != Q.k)) fail("wrong exponent");
  if (!lambda_check(s.t, p, s.z, Q.lambda)) fail("t exceeds (p^z)^lambda");
}

std::vector<Solution> solve_bruteforce(const Query& Q) {
  validate_query(Q);
  const long H = Q.height;
  if (H == 0) return {};
  const Evaluator ev(Q.F, H);
  const Scan scan{Q, ev, Integer(static_cast<unsigned long>(Q.p))};
  auto out = parallel_rows(Q, [&](long lo, long hi, std::vector<Solution>& part) {
    for (long y = lo; y <= hi; ++y)
      for (long x = -H; x <= H; ++x) scan.consider(x, y, part);
  });
  scan.consider(1, 0, out);
  return finish(Q, std::move(out));
}

std::vector<Solution> solve_sieved(const Query& Q) {
  validate_query(Q);
  const long H = Q.height;
  if (H == 0) return {};
  const Evaluator ev(Q.F, H);
  const Integer pz = static_cast<unsigned long>(Q.p);
  const Scan scan{Q, ev, pz};
  const std::vector<std::uint64_t> roots = roots_mod_p(Q.F, Q.p);
  // If p divides neither y nor c_d then p | F(x, y) forces x = r y mod p for
  // a root r. If p | y then F(x, y) = c_d x^d mod p with p not dividing x.
  const bool stratum = Q.F.leading() % pz == 0;
  const auto p = static_cast<unsigned long>(Q.p);
  auto out = parallel_rows(Q, [&](long lo, long hi, std::vector<Solution>& part) {
    for (long y = lo; y <= hi; ++y) {
      const auto ymod = static_cast<unsigned long>(y) % p;
      if (ymod == 0) {
        if (stratum)
          for (long x = -H; x <= H; ++x) scan.consider(x, y, part);
        continue;
      }
      for (std::uint64_t r : roots) {
        const auto target = static_cast<long>(static_cast<u128>(r) * ymod % p);
        if (p > static_cast<unsigned long>(2 * H + 1)) {
          // At most two representatives fit in [-H, H].
          if (target - static_cast<long>(p) >= -H) scan.consider(target - static_cast<long>(p), y, part);
          if (target <= H) scan.consider(target, y, part);
          continue;
        }
        const auto pl = static_cast<long>(p);
        long x = -H + (target + H) % pl;
        for (; x <= H; x += pl) scan.consider(x, y, part);
      }
    }
  });
  if (stratum) scan.consider(1, 0, out);
  return finish(Q, std::move(out));
}

std::vector<Solution> expand_negations(const std::vector<Solution>& canonical) {
  std::vector<Solution> out;
  out.reserve(2 * canonical.size());
  for (const auto& s : canonical) {
    out.push_back(s);
    Solution neg = s;
    neg.x = -s.x;
    neg.y = -s.y;
    out.push_back(std::move(neg));
  }
  std::sort(out.begin(), out.end(), solution_less);
  return out;
}

std::string to_string(SolveMode m) { return m == SolveMode::FixedK ? "fixed-k" : "any-z"; }

}  // namespace thuelab
