#include <doctest.h>

#include <cmath>
#include <map>
#include <random>

#include "freewalk/martin.hpp"
#include "freewalk/oracle.hpp"
#include "support.hpp"

using namespace freewalk;
using testing::S;
using testing::W;

TEST_SUITE("martin") {

TEST_CASE("kernel values") {
  const auto w = testing::Ray("e|a");
  CHECK(martin_kernel(2, w, W("e")) == 1);
  CHECK(martin_kernel(2, w, W("A")) == 3);
  CHECK(martin_kernel(2, w, W("a")) == Rational(1, 3));
  CHECK(kernel_exponent(w, W("AA")).exponent == 2);
  CHECK(sqrt_kernel(2, w, W("A")) == SqrtPowerSum::half_power(2, 1));
}

TEST_CASE("property: kernel against the distance formula") {
  const std::vector<std::pair<int, std::string>> rays = {{2, "e|a"}, {2, "e|abAB"}, {2, "ab|aB"}, {3, "C|aB"}};
  for (const auto& [d, text] : rays) {
    const auto w = parse_ray(text, d);
    for (const auto& g : ball(d, d == 2 ? 5 : 4)) {
      REQUIRE(martin_kernel(d, w, g) == oracle::martin_kernel_from_distance(d, w, g));
      REQUIRE(martin_kernel(d, w, g) > 0);
    }
  }
}

TEST_CASE("property: kernel ratios are powers of 2d-1 fixed by lcp") {
  const auto w = testing::Ray("B|a");
  const auto b = ball(2, 5);
  for (std::size_t i = 0; i < b.size(); i += 7)
    for (std::size_t j = 0; j < b.size(); j += 11) {
      const auto& g = b[i];
      const auto& h = b[j];
      const long delta = 2 * (static_cast<long>(lcp_with_ray(inv(g), w)) - static_cast<long>(lcp_with_ray(inv(h), w))) -
                         (static_cast<long>(g.length()) - static_cast<long>(h.length()));
      REQUIRE(martin_kernel(2, w, g) / martin_kernel(2, w, h) == rational_pow(3, delta));
    }
}

TEST_CASE("exact harmonicity") {
  for (const auto& text : {"e|a", "e|ab"}) CHECK(harmonic_check_kernel(2, testing::Ray(text), testing::ball_set(2, 6)) == 0);
  CHECK(harmonic_check_kernel(2, testing::Ray("e|a"), S({"e"})) == 0);
  CHECK(harmonic_check_kernel(3, parse_ray("bb|cAc", 3), testing::ball_set(3, 4)) == 0);
}

TEST_CASE("hitting cylinders") {
  CHECK(hitting_cylinder(2, W("e")) == 1);
  CHECK(hitting_cylinder(2, W("a")) == Rational(1, 4));
  CHECK(hitting_cylinder(2, W("ab")) == Rational(1, 12));
  for (int d : {2, 3})
    for (int n = 0; n <= 4; ++n) {
      Rational total = 0;
      for (const auto& g : sphere(d, n)) total += hitting_cylinder(d, g);
      CHECK(total == 1);
    }
}

TEST_CASE("sample_ray is reduced, seeded and close to uniform") {
  CHECK(sample_ray(2, 30, 7) == sample_ray(2, 30, 7));
  std::map<Word, int> first;
  int ab = 0;
  const int samples = 10000;
  for (int i = 0; i < samples; ++i) {
    const Word g = sample_ray(2, 6, 1000 + static_cast<std::uint64_t>(i));
    REQUIRE(g.length() == 6);
    ++first[sample_ray(2, 1, 5000 + static_cast<std::uint64_t>(i))];
    if (g.code_at(0) == 0 && g.code_at(1) == 2) ++ab;
  }
  double chi2 = 0;
  const double expected = samples / 4.0;
  for (const auto& [g, count] : first) chi2 += (count - expected) * (count - expected) / expected;
  CHECK(first.size() == 4);
  CHECK(chi2 < 16.27);  // 3 degrees of freedom, p = 0.001
  CHECK(std::abs(ab / double(samples) - 1.0 / 12) < 0.01);
}

TEST_CASE("expected sqrt kernel") {
  CHECK(expected_sqrt_kernel(2, W("e")) == SqrtPowerSum(2, 1, 0));
  const auto one = expected_sqrt_kernel(2, W("a"));
  CHECK(one == SqrtPowerSum(2, 0, Rational(1, 2)));
  CHECK(std::abs(one.to_double() - std::sqrt(3.0) / 2) < 1e-12);
  for (int d : {2, 3})
    for (const auto& g : ball(d, 3)) REQUIRE(expected_sqrt_kernel(d, g) == oracle::expected_sqrt_kernel_enumerated(d, g));
}

TEST_CASE("sphere sums and spherical symmetry") {
  const auto w = testing::Ray("e|a");
  CHECK(sphere_sqrt_sum(2, 0, w) == SqrtPowerSum(2, 1, 0));
  const auto r1 = sphere_sqrt_sum(2, 1, w);
  CHECK(r1.coeffs() == std::map<int, Rational>{{1, 2}});
  for (int r = 0; r <= 4; ++r) {
    const auto reference = sphere_sqrt_sum(2, r, w);
    for (const auto& text : {"e|ab", "B|a", "ab|aB"}) CHECK(sphere_sqrt_sum(2, r, testing::Ray(text)) == reference);
    for (const auto& g : sphere(2, r))
      REQUIRE(expected_sqrt_kernel(2, g) * Rational(static_cast<long>(sphere_size(2, r))) == reference);
  }
  CHECK_THROWS_AS(sphere_sqrt_sum(2, 8, w, 100), BudgetExceeded);
}

TEST_CASE("trend classifier") {
  const std::vector<Rational> geometric = {0, 1, Rational(3, 2), Rational(7, 4), Rational(15, 8)};
  CHECK(classify_trend(geometric) == Trend::BoundedLooking);
  const std::vector<Rational> linear = {0, 1, 2, 3, 4};
  CHECK(classify_trend(linear) == Trend::Diverging);
  const std::vector<Rational> exact_ratio = {0, 125, 225, 305, 369};  // 125, 100, 80, 64: exactly 0.8
  CHECK(classify_trend(exact_ratio) == Trend::BoundedLooking);
  const std::vector<Rational> too_short = {0, 1, Rational(3, 2)};
  CHECK(classify_trend(too_short) == Trend::Diverging);
  CHECK(to_string(Trend::BoundedLooking) == "bounded-looking");
}

TEST_CASE("lightness partial sums") {
  const auto w = testing::Ray("e|ab");
  const auto single = lightness_partial_sums(w, parse_subset("explicit:e", 2), 6);
  REQUIRE(single.rows.size() == 7);
  for (const auto& row : single.rows) CHECK(row.sum == 1);
  const auto expected_single = expected_lightness_sum(parse_subset("explicit:e", 2), 5);
  for (const auto& row : expected_single.rows) CHECK(row.sum == SqrtPowerSum(2, 1, 0));

  const auto prefixes = expected_lightness_sum(parse_subset("rayprefix:e|ab", 2), 12);
  CHECK(prefixes.trend == Trend::BoundedLooking);
  const auto sigma = expected_lightness_sum(parse_subset("sigma", 2), 12);
  CHECK(sigma.trend == Trend::Diverging);
  for (std::size_t R = 2; R < sigma.rows.size(); R += 2)
    CHECK(SqrtPowerSum(2, Rational(1, 2), 0) <= sigma.rows[R].sum - sigma.rows[R - 2].sum);
}

TEST_CASE("lightness of sigma(F_2) along a ray") {
  // f_w is large on g^-1 for prefixes g of w, and sigma(g) keeps g as a prefix,
  // so along the constant ray the sums grow but along (ab)^oo they converge.
  const auto constant = lightness_partial_sums(testing::Ray("e|a"), parse_subset("sigma", 2), 16);
  for (const auto& row : constant.rows) CHECK(row.sum >= row.radius / 2);
  const auto periodic = lightness_partial_sums(testing::Ray("e|ab"), parse_subset("sigma", 2), 16);
  CHECK(periodic.rows.back().sum < 3);
  for (const auto& text : {"e|a", "e|ab", "e|abAB"}) {
    const auto inverted = lightness_partial_sums(testing::Ray(text), parse_subset("sigma:inv", 2), 16);
    for (const auto& row : inverted.rows) CHECK(row.sum >= row.radius / 2);
  }
}

TEST_CASE("the whole group is not light") {
  for (const auto& text : {"e|a", "e|ab", "ab|aB"}) {
    const auto table = lightness_partial_sums(testing::Ray(text), parse_subset("all", 2), 8);
    for (const auto& row : table.rows) CHECK(row.sum > row.radius);
  }
}

}  // TEST_SUITE
