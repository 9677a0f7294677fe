#include "freewalk/oracle.hpp"

#include <algorithm>
#include <limits>

#include "freewalk/errors.hpp"

namespace freewalk::oracle {

Rational green_series_bruteforce(const FinMeasure& mu, int N, const Word& g) {
  FinMeasure current = FinMeasure::delta(mu.d(), Word{});
  Rational total = current.at(g);
  for (int n = 1; n <= N; ++n) {
    FinMeasure next(mu.d());
    for (const auto& [x, a] : current.entries())
      for (const auto& [h, b] : mu.entries()) next.add(mul(x, h), a * b);
    current = std::move(next);
    total += current.at(g);
  }
  return total;
}

std::size_t dist_to_ray_bruteforce(const Word& g, const Ray& w, std::size_t horizon) {
  const Word g_inv = inv(g);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (std::size_t i = 0; i <= horizon; ++i) best = std::min(best, mul(g_inv, w.truncate(i)).length());
  return best;
}

Rational martin_kernel_from_distance(int d, const Ray& w, const Word& g) {
  const Word g_inv = inv(g);
  const auto D = dist_to_ray_bruteforce(g_inv, w, g.length() + w.prefix().length() + w.period().length());
  return rational_pow(2L * d - 1, static_cast<long>(g_inv.length()) - 2 * static_cast<long>(D));
}

SqrtPowerSum expected_sqrt_kernel_enumerated(int d, const Word& g) {
  const std::size_t n = g.length();
  if (n == 0) return SqrtPowerSum(d, 1, 0);
  const Word g_inv = inv(g);
  SqrtPowerSum total(d);
  const Rational mass = Rational(1, 2 * d) * rational_pow(2L * d - 1, -static_cast<long>(n - 1));
  // Any ray through the cylinder c gives the same kernel at g; extend c by a
  // letter that never cancels to get a concrete ray.
  for (const auto& c : sphere(d, static_cast<int>(n))) {
    const Word period = Word::letter(c.letter_at(n - 1));
    const Ray ray(c, period);
    std::size_t lcp = 0;
    while (lcp < n && g_inv.code_at(lcp) == ray.code_at(lcp)) ++lcp;
    total += SqrtPowerSum::half_power(d, 2 * static_cast<long>(lcp) - static_cast<long>(n)) * mass;
  }
  return total;
}

Rational uniform_walk_probability(int d, int n, const Word& g) {
  std::map<Word, Rational> current{{Word{}, Rational(1)}};
  const Rational step(1, 2 * d);
  const auto gens = sphere(d, 1);
  for (int i = 0; i < n; ++i) {
    std::map<Word, Rational> next;
    for (const auto& [x, p] : current)
      for (const auto& s : gens) next[mul(x, s)] += p * step;
    current = std::move(next);
  }
  auto it = current.find(g);
  return it == current.end() ? Rational(0) : it->second;
}

}  // namespace freewalk::oracle
