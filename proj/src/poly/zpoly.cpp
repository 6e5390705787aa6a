#include "thuelab/poly/zpoly.hpp"

#include "thuelab/error.hpp"

#include <algorithm>
#include <sstream>

namespace thuelab {

namespace {
const Integer kZero = 0;
}

ZPoly::ZPoly(std::vector<Integer> ascending) : coeffs_(std::move(ascending)) { trim(); }

ZPoly::ZPoly(std::initializer_list<long> ascending) {
  coeffs_.reserve(ascending.size());
  for (long c : ascending) coeffs_.emplace_back(c);
  trim();
}

ZPoly ZPoly::monomial(const Integer& c, int degree) {
  std::vector<Integer> v(static_cast<std::size_t>(degree) + 1, 0);
  v.back() = c;
  return ZPoly(std::move(v));
}

const Integer& ZPoly::operator[](int i) const {
  if (i < 0 || i > degree()) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const Integer& ZPoly::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

void ZPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

ZPoly& ZPoly::operator+=(const ZPoly& b) {
  if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator-=(const ZPoly& b) {
  if (b.coeffs_.size() > coeffs_.size()) coeffs_.resize(b.coeffs_.size(), 0);
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  trim();
  return *this;
}

ZPoly& ZPoly::operator*=(const Integer& c) {
  for (auto& x : coeffs_) x *= c;
  trim();
  return *this;
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return ZPoly(std::move(r));
}

std::string ZPoly::to_string(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = (*this)[i];
    if (c == 0) continue;
    Integer a = abs(c);
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    if (i == 0 || a != 1) os << a;
    if (i > 0 && a != 1) os << "*";
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

Integer evaluate(const ZPoly& f, const Integer& x) {
  Integer r = 0;
  for (int i = f.degree(); i >= 0; --i) r = r * x + f[i];
  return r;
}

ZPoly derivative(const ZPoly& f) {
  if (f.degree() < 1) return {};
  std::vector<Integer> r(static_cast<std::size_t>(f.degree()));
  for (int i = 1; i <= f.degree(); ++i) r[static_cast<std::size_t>(i - 1)] = f[i] * i;
  return ZPoly(std::move(r));
}

Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f.coeffs()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly primitive_part(const ZPoly& f) {
  if (f.is_zero()) return {};
  Integer g = content(f);
  if (f.leading() < 0) g = -g;
  std::vector<Integer> r = f.coeffs();
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return ZPoly(std::move(r));
}

std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return ZPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Integer> rem = a.coeffs();
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree()) + 1, 0);
  const Integer& lb = b.leading();
  for (int i = a.degree() - b.degree(); i >= 0; --i) {
    Integer& top = rem[static_cast<std::size_t>(i + b.degree())];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Integer c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(i)] = c;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(i + j)] -= c * b[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return ZPoly(std::move(q));
}

ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo-remainder by the zero polynomial");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> r = a.coeffs();
  const Integer& lb = b.leading();
  const int db = b.degree();
  for (int top = a.degree(); top >= db; --top) {
    Integer lead = r[static_cast<std::size_t>(top)];
    for (auto& c : r) c *= lb;
    if (lead != 0)
      for (int j = 0; j <= db; ++j) r[static_cast<std::size_t>(top - db + j)] -= lead * b[j];
    r.pop_back();
  }
  return ZPoly(std::move(r));
}

ZPoly gcd(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  ZPoly u = primitive_part(a);
  ZPoly v = primitive_part(b);
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    ZPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = primitive_part(r);
  }
  return primitive_part(u);
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap_row = k + 1;
      while (swap_row < n && m[swap_row][k] == 0) ++swap_row;
      if (swap_row == n) return 0;
      std::swap(m[k], m[swap_row]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

Integer resultant(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  const int m = a.degree();
  const int n = b.degree();
  if (m == 0 && n == 0) return 1;
  if (m == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), a[0].get_mpz_t(), static_cast<unsigned long>(n));
    return r;
  }
  if (n == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), static_cast<unsigned long>(m));
    return r;
  }
  const std::size_t size = static_cast<std::size_t>(m + n);
  std::vector<std::vector<Integer>> s(size, std::vector<Integer>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] = a[m - j];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      s[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] = b[n - j];
  return bareiss_determinant(std::move(s));
}

std::vector<std::pair<ZPoly, int>> squarefree_decomposition(const ZPoly& f) {
  std::vector<std::pair<ZPoly, int>> out;
  if (f.degree() < 1) return out;
  // Musser: with P = prod g_k^k, A = gcd(P, P') and B = P / A, repeatedly
  // split off B / gcd(A, B). All divisions are exact between primitive
  // polynomials.
  ZPoly p = primitive_part(f);
  ZPoly a = gcd(p, derivative(p));
  ZPoly b = primitive_part(*divide_exact(p, a));
  for (int k = 1; b.degree() > 0; ++k) {
    ZPoly c = gcd(a, b);
    ZPoly factor = primitive_part(*divide_exact(b, c));
    if (factor.degree() > 0) out.emplace_back(std::move(factor), k);
    a = primitive_part(*divide_exact(a, c));
    b = std::move(c);
  }
  return out;
}

ZPoly squarefree_part(const ZPoly& f) {
  if (f.degree() < 1) return primitive_part(f);
  ZPoly p = primitive_part(f);
  return primitive_part(*divide_exact(p, gcd(p, derivative(p))));
}

}  // namespace thuelab
