#include "thuelab/matrix2.hpp"

#include "thuelab/arith.hpp"
#include "thuelab/error.hpp"

#include <tuple>

namespace thuelab {

IntMatrix2::IntMatrix2(Integer s, Integer u, Integer t, Integer v)
    : s_(std::move(s)), u_(std::move(u)), t_(std::move(t)), v_(std::move(v)) {
  if (det() == 0) throw DomainError("matrix has zero determinant");
}

IntMatrix2 IntMatrix2::canonical() const {
  Integer g = gcd(gcd(s_, u_), gcd(t_, v_));
  const Integer* first = s_ != 0 ? &s_ : u_ != 0 ? &u_ : t_ != 0 ? &t_ : &v_;
  if (*first < 0) g = -g;
  return IntMatrix2(s_ / g, u_ / g, t_ / g, v_ / g);
}

bool IntMatrix2::is_canonical() const { return canonical() == *this; }

IntMatrix2 IntMatrix2::adjugate() const { return IntMatrix2(v_, -u_, -t_, s_); }

IntMatrix2 operator*(const IntMatrix2& a, const IntMatrix2& b) {
  return IntMatrix2(a.s_ * b.s_ + a.u_ * b.t_, a.s_ * b.u_ + a.u_ * b.v_, a.t_ * b.s_ + a.v_ * b.t_,
                    a.t_ * b.u_ + a.v_ * b.v_);
}

bool operator<(const IntMatrix2& a, const IntMatrix2& b) {
  return std::tie(a.s_, a.u_, a.t_, a.v_) < std::tie(b.s_, b.u_, b.t_, b.v_);
}

std::string IntMatrix2::to_string() const {
  return "(" + thuelab::to_string(s_) + " " + thuelab::to_string(u_) + "; " + thuelab::to_string(t_) + " " +
         thuelab::to_string(v_) + ")";
}

}  // namespace thuelab
