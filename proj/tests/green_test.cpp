#include <doctest.h>

#include "freewalk/green.hpp"
#include "freewalk/oracle.hpp"
#include "freewalk/sets.hpp"
#include "support.hpp"

using namespace freewalk;
using testing::S;
using testing::W;

namespace {

FinMeasure skewed_measure() {
  FinMeasure mu(2);
  mu.add(W("a"), Rational(1, 2));
  mu.add(W("A"), Rational(1, 6));
  mu.add(W("b"), Rational(1, 6));
  mu.add(W("B"), Rational(1, 6));
  return mu;
}

}  // namespace

TEST_SUITE("green") {

TEST_CASE("closed form values") {
  const auto G = GreenModel::closed_form(2);
  CHECK(green_at(G, W("e")) == Rational(3, 2));
  for (const auto& g : sphere(2, 1)) CHECK(green_at(G, g) == Rational(1, 2));
  CHECK(green_at(G, W("abA")) == Rational(1, 18));
  const auto G3 = GreenModel::closed_form(3);
  CHECK(green_at(G3, W("e", 3)) == Rational(5, 4));
  CHECK(green_at(G3, W("cc", 3)) == Rational(1, 20));
  CHECK(G.truncation() == -1);
}

TEST_CASE("truncated series at N = 0 is the point mass") {
  const auto G = GreenModel::truncated(uniform_generator_measure(2), 0);
  CHECK(green_at(G, W("e")) == 1);
  CHECK(green_at(G, W("a")) == 0);
  CHECK_THROWS_AS(GreenModel::truncated(uniform_generator_measure(2), -1), DomainError);
}

TEST_CASE("truncated series against the brute-force oracle") {
  for (const auto& mu : {uniform_generator_measure(2), skewed_measure()}) {
    const auto G = GreenModel::truncated(mu, 7);
    for (const auto& g : ball(2, 3)) CHECK(green_at(G, g) == oracle::green_series_bruteforce(mu, 7, g));
  }
}

TEST_CASE("closed form agrees with the N = 200 series") {
  const auto closed = GreenModel::closed_form(2);
  const auto series = GreenModel::truncated(uniform_generator_measure(2), GreenModel::kDefaultTruncation);
  for (const auto& g : ball(2, 4)) CHECK(to_double(abs(Rational(green_at(closed, g) - green_at(series, g)))) < 1e-6);
  // the series increases to the closed form
  CHECK(green_at(series, W("e")) < green_at(closed, W("e")));
}

TEST_CASE("property: renewal identity G_N - mu*G_N = delta_e - mu^(N+1)") {
  for (const auto& mu : {uniform_generator_measure(2), skewed_measure()})
    for (int N : {0, 3, 10}) {
      const auto G = GreenModel::truncated(mu, N);
      const auto f = provider([&](const Word& g) { return green_at(G, g); });
      for (const auto& g : ball(2, 3)) {
        const Rational lhs = green_at(G, g) - left_convolve_fn(mu, f, g);
        const Rational rhs = Rational(g.is_identity() ? 1 : 0) - G.powers().at(N + 1, g);
        REQUIRE(lhs == rhs);
      }
    }
}

TEST_CASE("closed form is harmonic off the identity") {
  const auto G = GreenModel::closed_form(2);
  const auto f = provider([&](const Word& g) { return green_at(G, g); });
  for (const auto& g : ball(2, 4))
    CHECK(green_at(G, g) - left_convolve_fn(uniform_generator_measure(2), f, g) == (g.is_identity() ? 1 : 0));
}

TEST_CASE("geodesic multiplicativity G(gh) G(e) = G(g) G(h)") {
  const auto G = GreenModel::closed_form(2);
  for (const auto& g : ball(2, 3))
    for (const auto& h : ball(2, 3))
      if (product_length(g, h) == g.length() + h.length())
        REQUIRE(green_at(G, mul(g, h)) * green_at(G, W("e")) == green_at(G, g) * green_at(G, h));
}

TEST_CASE("set sums and translates") {
  const auto G = GreenModel::closed_form(2);
  CHECK(green_set(G, {}) == 0);
  CHECK(green_set(G, S({"e", "a"})) == 2);
  CHECK(green_set(G, testing::sphere_set(2, 1)) == 2);
  const auto E = S({"e", "ab", "Ba"});
  CHECK(green_translated(G, W("e"), E) == green_set(G, E));
  CHECK(green_translated(G, W("a"), S({"e"})) == Rational(1, 2));
  CHECK(green_translated(G, W("a"), S({"A"})) == Rational(3, 2));
}

TEST_CASE("epsilon witnesses") {
  const auto mu = uniform_generator_measure(2);
  CHECK(epsilon_witness(mu, W("a"), 1).value == Rational(1, 4));
  CHECK(epsilon_witness(mu, W("e"), 0).value == 1);
  CHECK(epsilon_witness(mu, W("e"), 4).value == 1);
  CHECK(epsilon_witness(mu, W("ab"), 2).value == Rational(1, 16));
  CHECK_THROWS_AS(epsilon_witness(mu, W("ab"), 1), DegenerateError);
  FinMeasure forward(2);
  forward.add(W("a"), 1);
  CHECK_THROWS_AS(epsilon_witness(forward, W("a"), 10), DegenerateError);
}

TEST_CASE("gamma bounds") {
  const auto G = GreenModel::closed_form(2);
  const auto mu = uniform_generator_measure(2);
  const auto trivial = verify_gamma_bounds(G, epsilon_witness(mu, W("e"), 0), W("ab"), testing::ball_set(2, 3));
  CHECK(trivial.holds);
  const auto a = verify_gamma_bounds(G, epsilon_witness(mu, W("a"), 1), W("e"), testing::ball_set(2, 5));
  CHECK(a.holds);
  CHECK(a.points_checked == 485);
  for (const auto& k : ball(2, 2)) {
    const auto ab = verify_gamma_bounds(G, epsilon_witness(mu, W("ab"), 2), k, testing::ball_set(2, 4));
    CHECK(ab.holds);
    CHECK(ab.violations.empty());
  }
  // an invalid constant is caught
  EpsilonWitness bogus{W("ab"), Rational(1, 2), 0};
  CHECK_FALSE(verify_gamma_bounds(G, bogus, W("e"), testing::ball_set(2, 2)).holds);
}

TEST_CASE("find_small_translate") {
  const auto G = GreenModel::closed_form(2);
  const auto steps = find_small_translate(G, S({"e"}), 5);
  REQUIRE(steps.size() == 6);
  for (const auto& s : steps) {
    CHECK(s.k.length() == static_cast<std::size_t>(s.radius));
    CHECK(s.value == Rational(3, 2) * rational_pow(3, -s.radius));
    CHECK(s.k == sphere(2, s.radius).front());  // ties keep the shortlex-first candidate
  }
  const auto A = materialize(parse_subset("sigma", 2), 8);
  const auto sigma_steps = find_small_translate(G, A, 3);
  CHECK(sigma_steps[0].k.is_identity());
  CHECK(sigma_steps[0].value == green_set(G, A));
  for (std::size_t i = 1; i < sigma_steps.size(); ++i) CHECK(sigma_steps[i].value < sigma_steps[i - 1].value);
  for (const auto& s : sigma_steps) CHECK(s.value == green_translated(G, s.k, A));
}

TEST_CASE("tail decomposition") {
  ConvolutionPowers uniform(uniform_generator_measure(2));
  CHECK(tail_decomposition_check(uniform, S({"e"}), 2, 6).holds);
  CHECK(tail_decomposition_check(uniform, testing::sphere_set(2, 1), 1, 5).holds);
  for (int N = 0; N <= 4; ++N) {
    const auto t = tail_decomposition_check(uniform, S({"e", "ab"}), 0, N);
    CHECK(t.holds);
    Rational direct = 0;
    for (int n = 0; n <= N; ++n) direct += uniform.mass(n, S({"e", "ab"}));
    CHECK(t.lhs == direct);
  }
  for (int m = 1; m <= 3; ++m) CHECK(tail_decomposition_check(skewed_measure(), S({"e", "b"}), m, 4).holds);
}

}  // TEST_SUITE
