#include <doctest.h>

#include <cmath>
#include <set>

#include "freewalk/sets.hpp"
#include "support.hpp"

using namespace freewalk;
using testing::S;
using testing::W;

TEST_SUITE("sets") {

TEST_CASE("sigma map") {
  CHECK(sigma_apply(W("ab")) == W("abbb"));
  CHECK(sigma_apply(W("a")) == W("aa"));
  CHECK_THROWS_AS(sigma_apply(W("e")), DomainError);
  for (const auto& g : ball(2, 5)) {
    if (g.is_identity()) continue;
    const Word s = sigma_apply(g);
    REQUIRE(s.length() == 2 * g.length());
    REQUIRE(std::equal(g.codes().begin(), g.codes().end(), s.codes().begin()));
  }
  std::set<Word> images;
  for (const auto& g : ball(2, 6))
    if (!g.is_identity()) images.insert(sigma_apply(g));
  CHECK(images.size() == ball_size(2, 6) - 1);
  CHECK(palindrome_apply(W("aB")) == W("aBBa"));
}

TEST_CASE("sigma set counts") {
  CHECK(materialize(parse_subset("sigma", 2), 2).size() == 5);
  CHECK(materialize(parse_subset("sigma", 2), 6).size() == 53);
  CHECK(materialize(parse_subset("sigma:noe", 2), 2).size() == 4);
  const auto all = materialize(parse_subset("sigma", 2), 12);
  for (int r = 1; r <= 6; ++r) {
    const auto count = std::count_if(all.begin(), all.end(), [&](const Word& w) { return w.length() <= 2u * r; });
    CHECK(static_cast<std::uint64_t>(count) == ball_size(2, r));
  }
  const auto inverted = materialize(parse_subset("sigma:inv", 2), 8);
  CHECK(inverted.size() == ball_size(2, 4));
  for (const auto& g : materialize(parse_subset("sigma", 2), 8)) CHECK(inverted.count(inv(g)) == 1);
}

TEST_CASE("palindrome counts match balls") {
  for (int r = 0; r <= 5; ++r) {
    const auto pal = materialize(parse_subset("palindromes", 2), 2 * r);
    CHECK(pal.size() == ball_size(2, r));
    for (const auto& g : pal) CHECK(std::equal(g.codes().begin(), g.codes().end(), g.codes().rbegin()));
  }
  CHECK(materialize(parse_subset("palindromes:noe", 2), 4).count(Word{}) == 0);
}

TEST_CASE("A_a^a spheres") {
  const auto three = aaa_sphere(2, 3, Letter{0, 1});
  CHECK(three == std::vector<Word>{W("aaa"), W("aba"), W("aBa")});
  CHECK(aaa_sphere_count(2, 1).count == 1);
  CHECK(aaa_sphere_count(2, 3).count == 3);
  const auto five = aaa_sphere_count(2, 5);
  REQUIRE(five.lower_bound);
  CHECK(*five.lower_bound == 9);
  CHECK(five.count >= 9);
  for (int r = 3; r <= 8; ++r) CHECK(aaa_sphere_count(2, r).bound_holds);
  CHECK_FALSE(aaa_sphere_count(2, 2).lower_bound);
  CHECK_THROWS_AS(aaa_sphere_count(2, 0), DomainError);
  // elements begin and end with the letter and multiply without cancellation
  const auto set = materialize(parse_subset("aaa:a", 2), 5);
  for (const auto& g : set) {
    REQUIRE(g.code_at(0) == 0);
    REQUIRE(g.code_at(g.length() - 1) == 0);
    for (const auto& h : set) REQUIRE(product_length(g, h) == g.length() + h.length());
  }
}

TEST_CASE("A_n construction") {
  for (int n = 1; n <= 3; ++n) CHECK(an_lemma_set(n, 0, 2) == S({"e"}));
  CHECK(pairing(1, 1) == 1);
  std::set<std::uint64_t> seen;
  for (std::uint64_t n = 1; n <= 20; ++n)
    for (std::uint64_t m = 1; m <= 20; ++m) CHECK(seen.insert(pairing(n, m)).second);
  CHECK_THROWS_AS(pairing(0, 1), DomainError);
  const auto A1 = an_lemma_set(1, 2, 2);
  CHECK(A1.count(W("aa")) == 1);
  for (int n = 1; n <= 3; ++n)
    for (const auto& g : an_lemma_set(n, n < 3 ? 16 : 8, 2)) {
      if (g.is_identity()) continue;
      const auto len = g.length();
      CHECK(len >= 2);
      CHECK((len & (len - 1)) == 0);
    }
  CHECK_THROWS_AS(materialize(parse_subset("an:1:2", 2), 8), BudgetExceeded);
}

TEST_CASE("psi injectivity") {
  const auto report = psi_injectivity_test(2, 8, 2);
  CHECK(report.passed);
  CHECK(report.collisions == 0);
  CHECK(report.additivity_failures == 0);
  CHECK(report.tuples == report.factor_sizes[0] * report.factor_sizes[1]);
  CHECK(psi_injectivity_test(3, 4, 2).passed);
}

TEST_CASE("property: materialize is monotone and exact") {
  for (const auto& text : {"explicit:a,ab,bAb", "all", "sigma", "sigma:noe", "sigma:inv", "palindromes", "rayprefix:B|a",
                           "aaa:B", "an:1", "an:2"}) {
    const auto spec = parse_subset(text, 2);
    WordSet previous;
    for (int R = 0; R <= (std::string_view(text) == "all" ? 7 : 10); ++R) {
      const auto current = materialize(spec, R);
      CHECK(std::includes(current.begin(), current.end(), previous.begin(), previous.end()));
      for (const auto& g : current) CHECK(g.length() <= static_cast<std::size_t>(R));
      CHECK(materialize(spec, R) == current);
      previous = current;
    }
  }
  CHECK(materialize(parse_subset("all", 2), 3) == testing::ball_set(2, 3));
  CHECK(materialize(parse_subset("rayprefix:e|ab", 2), 3) == S({"e", "a", "ab", "aba"}));
}

TEST_CASE("growth rates") {
  const auto whole = growth_rates(parse_subset("all", 2), 12);
  CHECK(std::abs(whole.lower_est - 3) < 0.2);
  CHECK(whole.upper_est >= whole.lower_est);
  const auto sigma = growth_rates(parse_subset("sigma", 2), 16);
  CHECK(std::abs(sigma.lower_est - std::sqrt(3.0)) < 0.1);
  CHECK(std::abs(sigma.upper_est - std::sqrt(3.0)) < 0.15);
  CHECK(std::abs(std::pow(double(sigma.counts.back()), 1.0 / 16) - std::sqrt(3.0)) < 0.1);
  const auto sigma12 = growth_rates(parse_subset("sigma", 2), 12);
  CHECK(sigma12.upper_est >= 1.6);
  CHECK(sigma12.upper_est <= 1.9);
  const auto ray = growth_rates(parse_subset("rayprefix:e|ab", 2), 12);
  for (std::size_t r = 0; r < ray.counts.size(); ++r) CHECK(ray.counts[r] == r + 1);
  CHECK(ray.lower_est < 1.3);
  for (std::size_t r = 1; r < sigma.counts.size(); ++r) CHECK(sigma.counts[r] >= sigma.counts[r - 1]);
  CHECK_THROWS_AS(growth_rates(parse_subset("sigma", 2), 3), DomainError);
}

TEST_CASE("subset grammar") {
  for (const auto& text : {"explicit:", "explicit:a,ab", "all", "sigma", "sigma:noe", "sigma:inv", "sigma:noe,inv",
                           "palindromes", "palindromes:noe", "rayprefix:ab|aB", "aaa:A", "an:2", "an:3:10"})
    CHECK(to_string(parse_subset(text, 2)) == text);
  CHECK(to_string(parse_subset("sigma:e", 2)) == "sigma");
  CHECK(to_string(parse_subset("explicit:ab,a,ab", 2)) == "explicit:a,ab");
  for (const auto& bad : {"", "bogus", "explicit", "explicit:a,,b", "explicit:c", "sigma:x", "palindromes:inv", "all:x",
                          "aaa:ab", "aaa:", "an", "an:0", "an:x", "an:1:2:3", "rayprefix:a", "rayprefix:a|A"})
    CHECK_THROWS_AS(parse_subset(bad, 2), ParseError);
  CHECK_THROWS_AS(parse_subset("sigma", 1), DomainError);
}

TEST_CASE("enumeration budget") {
  CHECK_THROWS_AS(materialize(parse_subset("all", 2), 10, 100), BudgetExceeded);
  CHECK_THROWS_AS(materialize(parse_subset("sigma", 2), 20, 100), BudgetExceeded);
  CHECK_THROWS_AS(aaa_sphere(2, 12, Letter{0, 1}, 50), BudgetExceeded);
  CHECK_NOTHROW(materialize(parse_subset("all", 2), 2, 17));
  CHECK_THROWS_AS(materialize(parse_subset("all", 2), -1), DomainError);
}

}  // TEST_SUITE
