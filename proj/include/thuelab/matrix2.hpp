#pragma once

#include "thuelab/numeric/real.hpp"

#include <string>

namespace thuelab {

/// Integer matrix (s u; t v) with nonzero determinant, acting on pairs by
/// (x, y) -> (s x + u y, t x + v y).
class IntMatrix2 {
 public:
  IntMatrix2(Integer s, Integer u, Integer t, Integer v);
  static IntMatrix2 identity() { return IntMatrix2(1, 0, 0, 1); }

  const Integer& s() const { return s_; }
  const Integer& u() const { return u_; }
  const Integer& t() const { return t_; }
  const Integer& v() const { return v_; }
  Integer det() const { return s_ * v_ - t_ * u_; }

  /// Primitive representative whose first nonzero entry (order s, u, t, v) is positive.
  IntMatrix2 canonical() const;
  bool is_canonical() const;
  /// (v -u; -t s)
  IntMatrix2 adjugate() const;
  IntMatrix2 operator-() const { return IntMatrix2(-s_, -u_, -t_, -v_); }

  friend IntMatrix2 operator*(const IntMatrix2& a, const IntMatrix2& b);
  friend bool operator==(const IntMatrix2& a, const IntMatrix2& b) {
    return a.s_ == b.s_ && a.u_ == b.u_ && a.t_ == b.t_ && a.v_ == b.v_;
  }
  friend bool operator<(const IntMatrix2& a, const IntMatrix2& b);

  std::string to_string() const;

 private:
  Integer s_, u_, t_, v_;
};

}  // namespace thuelab
