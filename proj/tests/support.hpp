#pragma once

#include <random>
#include <string_view>

#include "freewalk/rational.hpp"
#include "freewalk/words.hpp"

namespace testing {

inline freewalk::Word W(std::string_view text, int d = 2) { return freewalk::parse_word(text, d); }
inline freewalk::Ray Ray(std::string_view text, int d = 2) { return freewalk::parse_ray(text, d); }

inline freewalk::WordSet S(std::initializer_list<std::string_view> words, int d = 2) {
  freewalk::WordSet out;
  for (auto w : words) out.insert(W(w, d));
  return out;
}

// p/q in lowest terms (the two-argument mpq constructor does not reduce).
inline freewalk::Rational frac(long p, long q) {
  freewalk::Rational r(p, q);
  r.canonicalize();
  return r;
}

inline freewalk::WordSet ball_set(int d, int r) {
  const auto b = freewalk::ball(d, r);
  return {b.begin(), b.end()};
}

inline freewalk::WordSet sphere_set(int d, int r) {
  const auto s = freewalk::sphere(d, r);
  return {s.begin(), s.end()};
}

// Uniformly random reduced word of the given length.
inline freewalk::Word random_word(std::mt19937_64& rng, int d, int length) {
  std::vector<std::uint8_t> codes;
  std::uniform_int_distribution<int> pick(0, 2 * d - 1);
  while (static_cast<int>(codes.size()) < length) {
    auto c = static_cast<std::uint8_t>(pick(rng));
    if (!codes.empty() && c == freewalk::inverse_code(codes.back())) continue;
    codes.push_back(c);
  }
  return freewalk::Word::from_codes(codes);
}

// Unreduced letter sequence, cancellations likely.
inline std::vector<freewalk::Letter> random_letters(std::mt19937_64& rng, int d, int length) {
  std::uniform_int_distribution<int> pick(0, 2 * d - 1);
  std::vector<freewalk::Letter> out;
  for (int i = 0; i < length; ++i) out.push_back(freewalk::Letter::from_code(static_cast<std::uint8_t>(pick(rng))));
  return out;
}

// Random subset of a finite pool, each element kept with probability 1/2.
template <class Pool>
freewalk::WordSet random_subset(std::mt19937_64& rng, const Pool& pool) {
  freewalk::WordSet out;
  for (const auto& g : pool)
    if (rng() & 1u) out.insert(g);
  return out;
}

}  // namespace testing
