#pragma once

#include <compare>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "freewalk/errors.hpp"

namespace freewalk {

// A generator a_i or its inverse. Letters are totally ordered
// a_1 < a_1^-1 < a_2 < a_2^-1 < ..., which is the order of code().
struct Letter {
  int generator = 0;
  int sign = 1;

  static Letter from_code(std::uint8_t code) { return {code / 2, (code & 1) ? -1 : 1}; }
  std::uint8_t code() const { return static_cast<std::uint8_t>(2 * generator + (sign < 0 ? 1 : 0)); }
  Letter inverse() const { return {generator, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
};

inline std::uint8_t inverse_code(std::uint8_t code) { return code ^ 1u; }

// Largest supported rank; the printable alphabet skips 'e', which names the identity.
inline constexpr int kMaxRank = 25;

// Freely reduced word over the letters of F_d; the empty word is the identity.
// Ordering is shortlex (length first, then letter order), which is the
// enumeration order of sphere() and ball().
class Word {
 public:
  Word() = default;

  // Freely reduces an arbitrary code sequence.
  static Word from_codes(std::span<const std::uint8_t> codes);
  static Word letter(Letter l) { return from_codes(std::vector<std::uint8_t>{l.code()}); }

  std::size_t length() const { return codes_.size(); }
  bool is_identity() const { return codes_.empty(); }
  std::span<const std::uint8_t> codes() const { return codes_; }
  std::uint8_t code_at(std::size_t i) const { return codes_[i]; }
  Letter letter_at(std::size_t i) const { return Letter::from_code(codes_[i]); }
  // Largest generator index used, or -1 for the identity.
  int max_generator() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  friend Word mul(const Word&, const Word&);
  friend Word inv(const Word&);
  explicit Word(std::vector<std::uint8_t> reduced) : codes_(std::move(reduced)) {}

  std::vector<std::uint8_t> codes_;
};

using WordSet = std::set<Word>;

// Free reduction; throws DomainError for a generator index >= d.
Word reduce(std::span<const Letter> letters, int d);

Word mul(const Word& u, const Word& v);
Word inv(const Word& u);

// Length of u*v without forming the product.
std::size_t product_length(const Word& u, const Word& v);

// S_r and B_r in shortlex order. Throws DomainError for r < 0 or d outside [2, kMaxRank].
std::vector<Word> sphere(int d, int r);
std::vector<Word> ball(int d, int r);
// |S_r| = 2d(2d-1)^(r-1) and |B_r|, saturating at UINT64_MAX.
std::uint64_t sphere_size(int d, int r);
std::uint64_t ball_size(int d, int r);

// Calls visit(word) for each element of S_r in shortlex order without materialising it.
template <class Visit>
void for_each_in_sphere(int d, int r, Visit&& visit);

// Eventually periodic infinite reduced word prefix . period . period ...
class Ray {
 public:
  // Throws DomainError when period is empty or either junction cancels.
  Ray(Word prefix, Word period);

  const Word& prefix() const { return prefix_; }
  const Word& period() const { return period_; }
  std::uint8_t code_at(std::size_t i) const;
  // The word s_1 ... s_n.
  Word truncate(std::size_t n) const;

  friend bool operator==(const Ray&, const Ray&) = default;

 private:
  Word prefix_;
  Word period_;
};

std::size_t lcp_with_ray(const Word& g, const Ray& w);
// D(g, w) = min_i |g^-1 s_1...s_i| = |g| - lcp(g, w).
std::size_t dist_to_ray(const Word& g, const Ray& w);

char letter_char(Letter l);
std::string to_string(const Word& g);
std::string to_string(const Ray& w);
// "e" is the identity; otherwise letters from the alphabet {a,A,b,B,...}.
Word parse_word(std::string_view text, int d);
// "prefix|period"; an empty or "e" prefix is the identity.
Ray parse_ray(std::string_view text, int d);

void check_rank(int d);

// ---------------------------------------------------------------------------

template <class Visit>
void for_each_in_sphere(int d, int r, Visit&& visit) {
  check_rank(d);
  if (r < 0) throw DomainError("negative radius");
  const int letters = 2 * d;
  if (r == 0) {
    visit(Word{});
    return;
  }
  std::vector<std::uint8_t> codes(static_cast<std::size_t>(r), 0);
  // Smallest admissible word: a a a ... (a never cancels with itself).
  for (;;) {
    visit(Word::from_codes(codes));
    // Odometer increment from the right, skipping letters that cancel the previous one.
    int pos = r - 1;
    for (; pos >= 0; --pos) {
      int next = codes[pos] + 1;
      if (pos > 0 && next == inverse_code(codes[pos - 1])) ++next;
      if (next < letters) {
        codes[pos] = static_cast<std::uint8_t>(next);
        break;
      }
    }
    if (pos < 0) return;
    for (int j = pos + 1; j < r; ++j) {
      std::uint8_t c = 0;
      if (c == inverse_code(codes[j - 1])) ++c;
      codes[j] = c;
    }
  }
}

}  // namespace freewalk
