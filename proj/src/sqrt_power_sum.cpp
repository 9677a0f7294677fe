#include "freewalk/sqrt_power_sum.hpp"

#include <cmath>

#include "freewalk/errors.hpp"

namespace freewalk {
namespace {

long exact_root(long q) {
  long r = static_cast<long>(std::llround(std::sqrt(static_cast<double>(q))));
  for (long c = r - 1; c <= r + 1; ++c)
    if (c >= 0 && c * c == q) return c;
  return 0;
}

}  // namespace

SqrtPowerSum::SqrtPowerSum(int d) : SqrtPowerSum(d, 0, 0) {}

SqrtPowerSum::SqrtPowerSum(int d, Rational rational_part, Rational sqrt_part)
    : d_(d), a_(std::move(rational_part)), b_(std::move(sqrt_part)) {
  if (d < 2) throw DomainError("SqrtPowerSum needs d >= 2");
  root_ = exact_root(base());
  normalise();
}

SqrtPowerSum SqrtPowerSum::half_power(int d, long j) {
  const long q = 2L * d - 1;
  // q^(j/2) = q^floor(j/2) * q^((j mod 2)/2)
  const long whole = j >= 0 ? j / 2 : -((-j + 1) / 2);
  const bool odd = (j - 2 * whole) == 1;
  const Rational factor = rational_pow(q, whole);
  return odd ? SqrtPowerSum(d, 0, factor) : SqrtPowerSum(d, factor, 0);
}

void SqrtPowerSum::normalise() {
  a_.canonicalize();
  b_.canonicalize();
  if (root_ != 0 && b_ != 0) {
    a_ += b_ * root_;
    b_ = 0;
  }
}

void SqrtPowerSum::check_compatible(const SqrtPowerSum& o) const {
  if (d_ != o.d_) throw DomainError("SqrtPowerSum values over different bases");
}

std::map<int, Rational> SqrtPowerSum::coeffs() const {
  std::map<int, Rational> out;
  if (a_ != 0) out.emplace(0, a_);
  if (b_ != 0) out.emplace(1, b_);
  return out;
}

int SqrtPowerSum::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sa == 0 ? sb : sa;
  // Opposite signs: compare a^2 with q b^2.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * base();
  if (lhs == rhs) return 0;
  return lhs > rhs ? sa : sb;
}

double SqrtPowerSum::to_double() const { return a_.get_d() + b_.get_d() * std::sqrt(static_cast<double>(base())); }

SqrtPowerSum& SqrtPowerSum::operator+=(const SqrtPowerSum& o) {
  check_compatible(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

SqrtPowerSum& SqrtPowerSum::operator-=(const SqrtPowerSum& o) {
  check_compatible(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

SqrtPowerSum& SqrtPowerSum::operator*=(const Rational& s) {
  a_ *= s;
  b_ *= s;
  return *this;
}

SqrtPowerSum operator*(const SqrtPowerSum& x, const SqrtPowerSum& y) {
  x.check_compatible(y);
  return SqrtPowerSum(x.d_, x.a_ * y.a_ + x.b_ * y.b_ * x.base(), x.a_ * y.b_ + x.b_ * y.a_);
}

}  // namespace freewalk
