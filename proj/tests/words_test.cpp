#include <doctest.h>

#include <random>

#include "freewalk/oracle.hpp"
#include "freewalk/words.hpp"
#include "support.hpp"

using namespace freewalk;
using testing::W;

TEST_SUITE("words") {

TEST_CASE("reduce cancels adjacent inverse pairs") {
  const Letter a{0, 1}, A{0, -1}, b{1, 1}, B{1, -1};
  CHECK(reduce(std::vector{a, A, b}, 2) == W("b"));
  CHECK(reduce(std::vector<Letter>{}, 2).is_identity());
  CHECK(reduce(std::vector{a, b, B, a}, 2) == W("aa"));
  CHECK(reduce(std::vector{a, b, B, A}, 2).is_identity());
  CHECK_THROWS_AS(reduce(std::vector{Letter{2, 1}}, 2), DomainError);
}

TEST_CASE("mul and inv") {
  CHECK(mul(W("ab"), W("Ba")) == W("aa"));
  CHECK(inv(W("ab")) == W("BA"));
  CHECK(mul(W("e"), W("abA")) == W("abA"));
  CHECK(mul(W("abA"), inv(W("abA"))).is_identity());
  CHECK(product_length(W("ab"), W("Ba")) == 2);
  CHECK(product_length(W("ab"), W("BA")) == 0);
}

TEST_CASE("parse and print") {
  CHECK(to_string(W("e")) == "e");
  CHECK(to_string(W("aBcC", 3)) == "aB");
  CHECK(to_string(W("aA")) == "e");
  CHECK(W("f", 5) == Word::letter(Letter{4, 1}));
  CHECK_THROWS_AS(W("f", 4), ParseError);
  CHECK_THROWS_AS(W("c", 2), ParseError);
  CHECK_THROWS_AS(W("a1"), ParseError);
  CHECK_THROWS_AS(parse_word("a", 1), DomainError);
  CHECK_THROWS_AS(parse_word("a", kMaxRank + 1), DomainError);
}

TEST_CASE("sphere and ball sizes") {
  CHECK(sphere(2, 1).size() == 4);
  CHECK(sphere(2, 3).size() == 36);
  CHECK(ball(2, 2).size() == 17);
  CHECK(sphere(2, 0) == std::vector<Word>{Word{}});
  CHECK_THROWS_AS(sphere(2, -1), DomainError);
  for (int d = 2; d <= 4; ++d)
    for (int r = 0; r <= 8 && (d < 4 || r <= 6); ++r) {
      const auto s = sphere(d, r);
      CHECK(s.size() == sphere_size(d, r));
      CHECK(std::is_sorted(s.begin(), s.end()));
      CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
      for (const auto& g : s) CHECK(g.length() == static_cast<std::size_t>(r));
    }
  CHECK(ball_size(2, 6) == 1457);
  CHECK(ball_size(25, 200) == UINT64_MAX);
}

TEST_CASE("shortlex order follows a < A < b < B") {
  const auto s = sphere(2, 1);
  CHECK(to_string(s[0]) == "a");
  CHECK(to_string(s[1]) == "A");
  CHECK(to_string(s[2]) == "b");
  CHECK(to_string(s[3]) == "B");
  CHECK(W("B") < W("aa"));
}

TEST_CASE("property: reduce is idempotent and agrees with mul") {
  std::mt19937_64 rng(11);
  for (int d : {2, 3})
    for (int trial = 0; trial < 2000; ++trial) {
      const auto letters = testing::random_letters(rng, d, static_cast<int>(rng() % 12));
      const Word g = reduce(letters, d);
      std::vector<Letter> again;
      for (std::size_t i = 0; i < g.length(); ++i) again.push_back(g.letter_at(i));
      CHECK(reduce(again, d) == g);
      for (std::size_t i = 1; i < g.length(); ++i) CHECK(g.code_at(i) != inverse_code(g.code_at(i - 1)));
      Word folded;
      for (const auto& l : letters) folded = mul(folded, Word::letter(l));
      CHECK(folded == g);
    }
}

TEST_CASE("property: mul is associative, inv is an involution") {
  std::mt19937_64 rng(12);
  for (int d : {2, 3})
    for (int trial = 0; trial < 10000; ++trial) {
      const Word u = testing::random_word(rng, d, static_cast<int>(rng() % 6));
      const Word v = testing::random_word(rng, d, static_cast<int>(rng() % 6));
      const Word w = testing::random_word(rng, d, static_cast<int>(rng() % 6));
      REQUIRE(mul(mul(u, v), w) == mul(u, mul(v, w)));
      REQUIRE(inv(inv(u)) == u);
      REQUIRE(inv(mul(u, v)) == mul(inv(v), inv(u)));
      REQUIRE(product_length(u, v) == mul(u, v).length());
    }
}

TEST_CASE("property: word length parity of products") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 2000; ++trial) {
    const Word u = testing::random_word(rng, 2, static_cast<int>(rng() % 7));
    const Word v = testing::random_word(rng, 2, static_cast<int>(rng() % 7));
    CHECK((mul(u, v).length() + u.length() + v.length()) % 2 == 0);
  }
}

TEST_CASE("rays") {
  const auto w = testing::Ray("e|a");
  CHECK(to_string(w.truncate(3)) == "aaa");
  CHECK(lcp_with_ray(W("e"), w) == 0);
  CHECK(lcp_with_ray(W("aaa"), w) == 3);
  CHECK(lcp_with_ray(W("A"), w) == 0);
  CHECK(dist_to_ray(W("e"), w) == 0);
  CHECK(dist_to_ray(W("BA"), w) == 2);
  CHECK(dist_to_ray(W("a"), w) == 0);
  const auto v = testing::Ray("ab|aB");
  CHECK(to_string(v.truncate(7)) == "abaBaBa");
  CHECK(to_string(v) == "ab|aB");
  CHECK(testing::Ray("|b").prefix().is_identity());
  CHECK_THROWS_AS(testing::Ray("e|aA"), DomainError);  // reduces to the empty period
  CHECK_THROWS_AS(testing::Ray("a|A"), DomainError);
  CHECK_THROWS_AS(testing::Ray("e|aBA"), DomainError);  // period wraps onto its own inverse
  CHECK_THROWS_AS(testing::Ray("ab"), ParseError);
}

TEST_CASE("property: dist_to_ray against brute force on ball(d,6)") {
  const std::vector<std::pair<int, std::string>> rays = {
      {2, "e|a"}, {2, "e|ab"}, {2, "B|a"}, {2, "ab|aB"}, {3, "e|abc"}, {3, "bb|cAc"}};
  for (const auto& [d, text] : rays) {
    const auto w = parse_ray(text, d);
    for (const auto& g : ball(d, d == 2 ? 6 : 5))
      REQUIRE(dist_to_ray(g, w) == oracle::dist_to_ray_bruteforce(g, w, g.length() + 8));
  }
}

}  // TEST_SUITE
