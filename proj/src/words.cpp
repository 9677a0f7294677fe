#include "freewalk/words.hpp"

#include <algorithm>
#include <limits>

#include "freewalk/errors.hpp"

namespace freewalk {
namespace {

constexpr std::string_view kAlphabet = "abcdfghijklmnopqrstuvwxyz";

void push_reduced(std::vector<std::uint8_t>& out, std::uint8_t c) {
  if (!out.empty() && out.back() == inverse_code(c))
    out.pop_back();
  else
    out.push_back(c);
}

std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) return std::numeric_limits<std::uint64_t>::max();
  return a * b;
}

}  // namespace

void check_rank(int d) {
  if (d < 2 || d > kMaxRank) throw DomainError("rank d must lie in [2, " + std::to_string(kMaxRank) + "], got " + std::to_string(d));
}

Word Word::from_codes(std::span<const std::uint8_t> codes) {
  std::vector<std::uint8_t> out;
  out.reserve(codes.size());
  for (auto c : codes) push_reduced(out, c);
  return Word(std::move(out));
}

int Word::max_generator() const {
  int m = -1;
  for (auto c : codes_) m = std::max(m, c / 2);
  return m;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (auto c = a.codes_.size() <=> b.codes_.size(); c != 0) return c;
  return std::lexicographical_compare_three_way(a.codes_.begin(), a.codes_.end(), b.codes_.begin(), b.codes_.end());
}

Word reduce(std::span<const Letter> letters, int d) {
  std::vector<std::uint8_t> out;
  out.reserve(letters.size());
  for (const auto& l : letters) {
    if (l.generator < 0 || l.generator >= d)
      throw DomainError("generator index " + std::to_string(l.generator) + " outside [0, " + std::to_string(d) + ")");
    if (l.sign != 1 && l.sign != -1) throw DomainError("letter sign must be +1 or -1");
    push_reduced(out, l.code());
  }
  return Word::from_codes(out);
}

std::size_t product_length(const Word& u, const Word& v) {
  std::size_t cancel = 0;
  const auto uc = u.codes();
  const auto vc = v.codes();
  while (cancel < uc.size() && cancel < vc.size() && uc[uc.size() - 1 - cancel] == inverse_code(vc[cancel])) ++cancel;
  return uc.size() + vc.size() - 2 * cancel;
}

Word mul(const Word& u, const Word& v) {
  std::size_t cancel = 0;
  const auto& uc = u.codes_;
  const auto& vc = v.codes_;
  while (cancel < uc.size() && cancel < vc.size() && uc[uc.size() - 1 - cancel] == inverse_code(vc[cancel])) ++cancel;
  std::vector<std::uint8_t> out;
  out.reserve(uc.size() + vc.size() - 2 * cancel);
  out.insert(out.end(), uc.begin(), uc.end() - static_cast<std::ptrdiff_t>(cancel));
  out.insert(out.end(), vc.begin() + static_cast<std::ptrdiff_t>(cancel), vc.end());
  return Word(std::move(out));
}

Word inv(const Word& u) {
  std::vector<std::uint8_t> out(u.codes_.rbegin(), u.codes_.rend());
  for (auto& c : out) c = inverse_code(c);
  return Word(std::move(out));
}

std::uint64_t sphere_size(int d, int r) {
  if (r < 0) return 0;
  if (r == 0) return 1;
  std::uint64_t n = 2 * static_cast<std::uint64_t>(d);
  for (int i = 1; i < r; ++i) n = saturating_mul(n, 2 * static_cast<std::uint64_t>(d) - 1);
  return n;
}

std::uint64_t ball_size(int d, int r) {
  std::uint64_t total = 0;
  for (int i = 0; i <= r; ++i) {
    const auto s = sphere_size(d, i);
    if (s > std::numeric_limits<std::uint64_t>::max() - total) return std::numeric_limits<std::uint64_t>::max();
    total += s;
  }
  return total;
}

std::vector<Word> sphere(int d, int r) {
  check_rank(d);
  if (r < 0) throw DomainError("negative radius " + std::to_string(r));
  std::vector<Word> out;
  out.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(sphere_size(d, r), 1u << 24)));
  for_each_in_sphere(d, r, [&](const Word& w) { out.push_back(w); });
  return out;
}

std::vector<Word> ball(int d, int r) {
  check_rank(d);
  if (r < 0) throw DomainError("negative radius " + std::to_string(r));
  std::vector<Word> out;
  for (int i = 0; i <= r; ++i) for_each_in_sphere(d, i, [&](const Word& w) { out.push_back(w); });
  return out;
}

Ray::Ray(Word prefix, Word period) : prefix_(std::move(prefix)), period_(std::move(period)) {
  if (period_.is_identity()) throw DomainError("ray period must be nonempty");
  const auto first = period_.code_at(0);
  if (!prefix_.is_identity() && prefix_.code_at(prefix_.length() - 1) == inverse_code(first))
    throw DomainError("ray prefix|period junction cancels: " + to_string(prefix_) + "|" + to_string(period_));
  if (period_.code_at(period_.length() - 1) == inverse_code(first))
    throw DomainError("ray period|period junction cancels: " + to_string(period_));
}

std::uint8_t Ray::code_at(std::size_t i) const {
  if (i < prefix_.length()) return prefix_.code_at(i);
  return period_.code_at((i - prefix_.length()) % period_.length());
}

Word Ray::truncate(std::size_t n) const {
  std::vector<std::uint8_t> codes(n);
  for (std::size_t i = 0; i < n; ++i) codes[i] = code_at(i);
  return Word::from_codes(codes);
}

std::size_t lcp_with_ray(const Word& g, const Ray& w) {
  std::size_t i = 0;
  while (i < g.length() && g.code_at(i) == w.code_at(i)) ++i;
  return i;
}

std::size_t dist_to_ray(const Word& g, const Ray& w) { return g.length() - lcp_with_ray(g, w); }

char letter_char(Letter l) {
  const char c = kAlphabet.at(static_cast<std::size_t>(l.generator));
  return l.sign < 0 ? static_cast<char>(c - 'a' + 'A') : c;
}

std::string to_string(const Word& g) {
  if (g.is_identity()) return "e";
  std::string s;
  s.reserve(g.length());
  for (std::size_t i = 0; i < g.length(); ++i) s.push_back(letter_char(g.letter_at(i)));
  return s;
}

std::string to_string(const Ray& w) { return to_string(w.prefix()) + "|" + to_string(w.period()); }

Word parse_word(std::string_view text, int d) {
  check_rank(d);
  if (text == "e" || text.empty()) return Word{};
  std::vector<Letter> letters;
  letters.reserve(text.size());
  for (char ch : text) {
    const bool upper = ch >= 'A' && ch <= 'Z';
    const char lower = upper ? static_cast<char>(ch - 'A' + 'a') : ch;
    const auto pos = kAlphabet.find(lower);
    if (pos == std::string_view::npos) throw ParseError("invalid letter '" + std::string(1, ch) + "' in word '" + std::string(text) + "'");
    if (static_cast<int>(pos) >= d)
      throw ParseError("letter '" + std::string(1, ch) + "' needs rank > " + std::to_string(d));
    letters.push_back({static_cast<int>(pos), upper ? -1 : 1});
  }
  return reduce(letters, d);
}

Ray parse_ray(std::string_view text, int d) {
  const auto bar = text.find('|');
  if (bar == std::string_view::npos) throw ParseError("ray must have the form prefix|period, got '" + std::string(text) + "'");
  auto prefix = parse_word(text.substr(0, bar), d);
  auto period_text = text.substr(bar + 1);
  if (period_text.empty() || period_text == "e") throw ParseError("ray period must be nonempty");
  auto period = parse_word(period_text, d);
  try {
    return Ray(std::move(prefix), std::move(period));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

}  // namespace freewalk
