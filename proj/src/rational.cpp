#include "freewalk/rational.hpp"

#include "freewalk/errors.hpp"

namespace freewalk {

std::string to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw ParseError("empty rational");
  std::string s(text);
  const auto slash = s.find('/');
  auto valid_int = [](const std::string& part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false)) throw ParseError("malformed rational '" + s + "'");
  Integer p(num[0] == '+' ? num.substr(1) : num, 10);
  Integer q(den, 10);
  if (q == 0) throw ParseError("zero denominator in '" + s + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

double to_double(const Rational& q) { return q.get_d(); }

Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Rational rational_pow(long base, long exponent) {
  Integer p;
  mpz_pow_ui(p.get_mpz_t(), Integer(base).get_mpz_t(), static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  if (exponent >= 0) return Rational(p);
  Rational r(Integer(1), p);
  r.canonicalize();
  return r;
}

}  // namespace freewalk
