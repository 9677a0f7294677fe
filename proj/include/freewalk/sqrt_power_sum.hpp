#pragma once

#include <map>

#include "freewalk/rational.hpp"

namespace freewalk {

// Exact element sum_j c_j q^(j/2) of Q(sqrt q) with q = 2d - 1, kept in the
// canonical form a + b sqrt(q). When q is a perfect square the sqrt part is
// folded into a, so coefficient-wise equality is field equality.
class SqrtPowerSum {
 public:
  explicit SqrtPowerSum(int d);
  SqrtPowerSum(int d, Rational rational_part, Rational sqrt_part);

  // q^(j/2) for an arbitrary integer j.
  static SqrtPowerSum half_power(int d, long j);

  int d() const { return d_; }
  long base() const { return 2L * d_ - 1; }
  const Rational& rational_part() const { return a_; }
  const Rational& sqrt_part() const { return b_; }
  // Nonzero coefficients keyed by half-exponent (0 -> a, 1 -> b).
  std::map<int, Rational> coeffs() const;

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  // Exact sign of a + b sqrt(q).
  int sign() const;
  double to_double() const;

  SqrtPowerSum& operator+=(const SqrtPowerSum& o);
  SqrtPowerSum& operator-=(const SqrtPowerSum& o);
  SqrtPowerSum& operator*=(const Rational& s);
  friend SqrtPowerSum operator+(SqrtPowerSum x, const SqrtPowerSum& y) { return x += y; }
  friend SqrtPowerSum operator-(SqrtPowerSum x, const SqrtPowerSum& y) { return x -= y; }
  friend SqrtPowerSum operator*(SqrtPowerSum x, const Rational& s) { return x *= s; }
  friend SqrtPowerSum operator*(const Rational& s, SqrtPowerSum x) { return x *= s; }
  friend SqrtPowerSum operator*(const SqrtPowerSum& x, const SqrtPowerSum& y);

  friend bool operator==(const SqrtPowerSum& x, const SqrtPowerSum& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  // Exact ordering via sign of the difference.
  friend bool operator<(const SqrtPowerSum& x, const SqrtPowerSum& y) { return (y - x).sign() > 0; }
  friend bool operator<=(const SqrtPowerSum& x, const SqrtPowerSum& y) { return (y - x).sign() >= 0; }

 private:
  void normalise();
  void check_compatible(const SqrtPowerSum& o) const;

  int d_;
  Rational a_;
  Rational b_;
  long root_ = 0;  // integer sqrt of q when q is a perfect square, else 0
};

}  // namespace freewalk
