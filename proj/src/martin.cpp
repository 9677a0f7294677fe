#include "freewalk/martin.hpp"

#include <random>

#include "freewalk/errors.hpp"

namespace freewalk {
namespace {

template <class Value>
Trend classify(const std::vector<Value>& sums) {
  if (static_cast<int>(sums.size()) < kTrendWindow + 2) return Trend::Diverging;
  std::vector<Value> inc;
  for (std::size_t i = 1; i < sums.size(); ++i) inc.push_back(sums[i] - sums[i - 1]);
  for (std::size_t i = inc.size() - kTrendWindow; i < inc.size(); ++i)
    if (!(inc[i] <= inc[i - 1] * kTrendShrink)) return Trend::Diverging;
  return Trend::BoundedLooking;
}

}  // namespace

KernelValue kernel_exponent(const Ray& w, const Word& g) {
  const auto lcp = static_cast<long>(lcp_with_ray(inv(g), w));
  return {2 * lcp - static_cast<long>(g.length())};
}

Rational martin_kernel(int d, const Ray& w, const Word& g) {
  check_rank(d);
  return rational_pow(2L * d - 1, kernel_exponent(w, g).exponent);
}

SqrtPowerSum sqrt_kernel(int d, const Ray& w, const Word& g) {
  return SqrtPowerSum::half_power(d, kernel_exponent(w, g).exponent);
}

Rational harmonic_check_kernel(int d, const Ray& w, const WordSet& window) {
  const FinMeasure mu = uniform_generator_measure(d);
  return harmonicity_defect(mu, provider([d, &w](const Word& g) { return martin_kernel(d, w, g); }), window);
}

Rational hitting_cylinder(int d, const Word& prefix) {
  check_rank(d);
  if (prefix.is_identity()) return 1;
  return Rational(1, 2 * d) * rational_pow(2L * d - 1, -static_cast<long>(prefix.length() - 1));
}

Word sample_ray(int d, int length, std::uint64_t seed) {
  check_rank(d);
  if (length < 1) throw DomainError("sample_ray needs length >= 1");
  std::mt19937_64 rng(seed);
  std::vector<std::uint8_t> codes;
  codes.reserve(static_cast<std::size_t>(length));
  std::uniform_int_distribution<int> first(0, 2 * d - 1);
  std::uniform_int_distribution<int> rest(0, 2 * d - 2);
  codes.push_back(static_cast<std::uint8_t>(first(rng)));
  for (int i = 1; i < length; ++i) {
    // Uniform over the 2d - 1 letters other than the inverse of the previous one.
    int c = rest(rng);
    if (c >= inverse_code(codes.back())) ++c;
    codes.push_back(static_cast<std::uint8_t>(c));
  }
  return Word::from_codes(codes);
}

SqrtPowerSum expected_sqrt_kernel(int d, const Word& g) {
  check_rank(d);
  const long n = static_cast<long>(g.length());
  if (n == 0) return SqrtPowerSum(d, 1, 0);
  const Integer q = 2 * d - 1;
  const Rational cylinder = hitting_cylinder(d, g);  // every depth-n cylinder has this mass
  SqrtPowerSum total(d);
  // Cylinders c with lcp(g^-1, c) = j: c agrees on j letters, differs at j+1, then is free.
  for (long j = 0; j <= n; ++j) {
    Integer count;
    if (j == n) {
      count = 1;
    } else {
      const Integer branch = j == 0 ? q : q - 1;
      Integer tail;
      mpz_pow_ui(tail.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(n - j - 1));
      count = branch * tail;
    }
    total += SqrtPowerSum::half_power(d, 2 * j - n) * (cylinder * count);
  }
  return total;
}

SqrtPowerSum sphere_sqrt_sum(int d, int r, const Ray& w, std::uint64_t budget) {
  check_rank(d);
  if (r < 0) throw DomainError("negative radius");
  if (sphere_size(d, r) > budget)
    throw BudgetExceeded("S_" + std::to_string(r) + " exceeds the enumeration budget of " + std::to_string(budget));
  // Accumulate exact counts per exponent, then convert once.
  std::map<long, Integer> by_exponent;
  for_each_in_sphere(d, r, [&](const Word& h) { by_exponent[kernel_exponent(w, h).exponent] += 1; });
  SqrtPowerSum total(d);
  for (const auto& [e, count] : by_exponent) total += SqrtPowerSum::half_power(d, e) * Rational(count);
  return total;
}

std::string to_string(Trend t) { return t == Trend::BoundedLooking ? "bounded-looking" : "diverging"; }

Trend classify_trend(const std::vector<Rational>& partial_sums) { return classify(partial_sums); }
Trend classify_trend(const std::vector<SqrtPowerSum>& partial_sums) { return classify(partial_sums); }

PartialSumTable<Rational> lightness_partial_sums(const Ray& w, const SubsetSpec& A, int R_max, std::uint64_t budget) {
  const WordSet set = materialize(A, R_max, budget);
  std::vector<Rational> per_sphere(static_cast<std::size_t>(R_max) + 1, Rational(0));
  for (const auto& g : set) per_sphere[g.length()] += martin_kernel(A.d, w, g);
  PartialSumTable<Rational> table;
  std::vector<Rational> sums;
  Rational running = 0;
  for (int R = 0; R <= R_max; ++R) {
    running += per_sphere[static_cast<std::size_t>(R)];
    table.rows.push_back({R, running});
    sums.push_back(running);
  }
  table.trend = classify(sums);
  return table;
}

PartialSumTable<SqrtPowerSum> expected_lightness_sum(const SubsetSpec& A, int R_max, std::uint64_t budget) {
  const WordSet set = materialize(A, R_max, budget);
  std::vector<SqrtPowerSum> per_sphere(static_cast<std::size_t>(R_max) + 1, SqrtPowerSum(A.d));
  for (const auto& g : set) per_sphere[g.length()] += expected_sqrt_kernel(A.d, g);
  PartialSumTable<SqrtPowerSum> table;
  std::vector<SqrtPowerSum> sums;
  SqrtPowerSum running(A.d);
  for (int R = 0; R <= R_max; ++R) {
    running += per_sphere[static_cast<std::size_t>(R)];
    table.rows.push_back({R, running});
    sums.push_back(running);
  }
  table.trend = classify(sums);
  return table;
}

}  // namespace freewalk
