#include "thuelab/arith.hpp"

#include "thuelab/error.hpp"

#include <algorithm>
#include <cctype>

namespace thuelab {

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer ipow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 30) != 0;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || lo > hi) return out;
  lo = std::max<std::uint64_t>(lo, 2);
  std::uint64_t root = 1;
  while ((root + 1) * (root + 1) <= hi) ++root;
  std::vector<char> small(root + 1, 1);
  std::vector<std::uint64_t> base;
  for (std::uint64_t i = 2; i <= root; ++i) {
    if (!small[i]) continue;
    base.push_back(i);
    for (std::uint64_t j = i * i; j <= root; j += i) small[j] = 0;
  }
  constexpr std::uint64_t kSegment = 1 << 16;
  for (std::uint64_t start = lo; start <= hi; start += kSegment) {
    const std::uint64_t stop = std::min(hi, start + kSegment - 1);
    std::vector<char> seg(stop - start + 1, 1);
    for (std::uint64_t b : base) {
      if (b * b > stop) break;
      std::uint64_t first = std::max(b * b, (start + b - 1) / b * b);
      for (std::uint64_t j = first; j <= stop; j += b) seg[j - start] = 0;
    }
    for (std::uint64_t i = 0; i < seg.size(); ++i)
      if (seg[i]) out.push_back(start + i);
    if (stop == hi) break;
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw DomainError("empty rational");
  Rational q;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) throw DomainError("mixed decimal and fraction: " + text);
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::string frac = s.substr(dot + 1);
    if (digits.empty() || digits == "-" || digits == "+") throw DomainError("bad decimal: " + text);
    for (std::size_t i = (digits[0] == '-' || digits[0] == '+') ? 1 : 0; i < digits.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) throw DomainError("bad decimal: " + text);
    Integer num(digits[0] == '+' ? digits.substr(1) : digits, 10);
    q = Rational(num, ipow(10, frac.size()));
  } else {
    if (q.set_str(s, 10) != 0) throw DomainError("bad rational: " + text);
    if (q.get_den() == 0) throw DomainError("zero denominator: " + text);
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& v) { return v.get_str(10); }

std::string to_string(const Rational& v) { return v.get_str(10); }

}  // namespace thuelab
