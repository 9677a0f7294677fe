#include "freewalk/sets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "freewalk/errors.hpp"

namespace freewalk {
namespace {

void charge(std::uint64_t& used, std::uint64_t amount, std::uint64_t budget, const std::string& what) {
  if (amount > budget || used > budget - amount)
    throw BudgetExceeded(what + " exceeds the enumeration budget of " + std::to_string(budget) + " words");
  used += amount;
}

template <class F>
void for_each_in_ball(int d, int r, std::uint64_t budget, const std::string& what, F&& f) {
  std::uint64_t used = 0;
  charge(used, ball_size(d, r), budget, what);
  for (int i = 0; i <= r; ++i) for_each_in_sphere(d, i, f);
}

// Depth-first enumeration of reduced words of length r with fixed first and last letter.
void enumerate_aaa(int d, int r, std::uint8_t code, std::vector<std::uint8_t>& buf, std::vector<Word>& out) {
  const std::size_t pos = buf.size();
  if (static_cast<int>(pos) == r) {
    if (buf.back() == code) out.push_back(Word::from_codes(buf));
    return;
  }
  for (std::uint8_t c = 0; c < 2 * d; ++c) {
    if (c == inverse_code(buf.back())) continue;
    // The last letter is forced.
    if (static_cast<int>(pos) == r - 1 && c != code) continue;
    buf.push_back(c);
    enumerate_aaa(d, r, code, buf, out);
    buf.pop_back();
  }
}

std::uint64_t count_aaa(int d, int r, std::uint8_t code) {
  // Transfer counting over the last letter; equivalent to enumeration but O(r d^2).
  std::vector<std::uint64_t> ways(2 * d, 0);
  ways[code] = 1;
  for (int i = 1; i < r; ++i) {
    std::vector<std::uint64_t> next(2 * d, 0);
    for (int prev = 0; prev < 2 * d; ++prev)
      for (int c = 0; c < 2 * d; ++c)
        if (c != inverse_code(static_cast<std::uint8_t>(prev))) next[c] += ways[prev];
    ways = std::move(next);
  }
  return ways[code];
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

int parse_int(std::string_view text, const char* what) {
  if (text.empty()) throw ParseError(std::string("missing ") + what);
  int v = 0;
  for (char c : text) {
    if (c < '0' || c > '9') throw ParseError(std::string("invalid ") + what + " '" + std::string(text) + "'");
    v = v * 10 + (c - '0');
    if (v > 1'000'000) throw ParseError(std::string(what) + " too large");
  }
  return v;
}

}  // namespace

Word sigma_apply(const Word& g) {
  if (g.is_identity()) throw DomainError("sigma is defined on nonempty words");
  std::vector<std::uint8_t> codes(g.codes().begin(), g.codes().end());
  const auto last = codes.back();
  codes.insert(codes.end(), g.length(), last);
  return Word::from_codes(codes);
}

Word palindrome_apply(const Word& g) {
  std::vector<std::uint8_t> codes(g.codes().begin(), g.codes().end());
  codes.insert(codes.end(), g.codes().rbegin(), g.codes().rend());
  return Word::from_codes(codes);
}

std::uint64_t pairing(std::uint64_t n, std::uint64_t m) {
  if (n < 1 || m < 1) throw DomainError("pairing is defined on positive integers");
  const std::uint64_t x = n - 1;
  const std::uint64_t y = m - 1;
  return (x + y) * (x + y + 1) / 2 + y + 1;
}

SubsetSpec parse_subset(std::string_view text, int d) {
  check_rank(d);
  SubsetSpec spec{d, SubsetSpec::Everything{}};
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const bool has_arg = colon != std::string_view::npos;
  if (head == "explicit") {
    if (!has_arg) throw ParseError("explicit set needs ':' followed by words");
    SubsetSpec::Explicit e;
    if (!rest.empty())
      for (auto part : split(rest, ',')) {
        if (part.empty()) throw ParseError("empty word in explicit set '" + std::string(text) + "'");
        e.words.insert(parse_word(part, d));
      }
    spec.variant = std::move(e);
  } else if (head == "all" && !has_arg) {
    spec.variant = SubsetSpec::Everything{};
  } else if (head == "sigma" || head == "palindromes") {
    bool include = true;
    bool inverted = false;
    if (has_arg)
      for (auto flag : split(rest, ',')) {
        if (flag == "noe")
          include = false;
        else if (flag == "e")
          include = true;
        else if (flag == "inv" && head == "sigma")
          inverted = true;
        else
          throw ParseError("unknown flag '" + std::string(flag) + "' for " + std::string(head));
      }
    if (head == "sigma")
      spec.variant = SubsetSpec::SigmaSuffix{include, inverted};
    else
      spec.variant = SubsetSpec::Palindromes{include};
  } else if (head == "rayprefix") {
    spec.variant = SubsetSpec::RayPrefixes{parse_ray(rest, d)};
  } else if (head == "aaa") {
    const Word w = parse_word(rest, d);
    if (w.length() != 1) throw ParseError("aaa: expects a single letter, got '" + std::string(rest) + "'");
    spec.variant = SubsetSpec::AaA{w.letter_at(0)};
  } else if (head == "an") {
    auto parts = split(rest, ':');
    if (!has_arg || parts.size() > 2) throw ParseError("an: expects an:n or an:n:cap");
    SubsetSpec::AnLemma an;
    an.n = parse_int(parts[0], "n");
    if (an.n < 1) throw ParseError("an: n must be >= 1");
    if (parts.size() == 2) an.sphere_cap = parse_int(parts[1], "sphere cap");
    spec.variant = an;
  } else {
    throw ParseError("unknown subset spec '" + std::string(text) + "'");
  }
  return spec;
}

std::string to_string(const SubsetSpec& spec) {
  struct Visitor {
    std::string operator()(const SubsetSpec::Explicit& e) const {
      std::string s = "explicit:";
      bool first = true;
      for (const auto& w : e.words) {
        if (!first) s += ",";
        s += freewalk::to_string(w);
        first = false;
      }
      return s;
    }
    std::string operator()(const SubsetSpec::Everything&) const { return "all"; }
    std::string operator()(const SubsetSpec::SigmaSuffix& s) const {
      if (s.include_identity && !s.inverted) return "sigma";
      std::string flags = s.include_identity ? "" : "noe";
      if (s.inverted) flags += flags.empty() ? "inv" : ",inv";
      return "sigma:" + flags;
    }
    std::string operator()(const SubsetSpec::Palindromes& p) const {
      return p.include_identity ? "palindromes" : "palindromes:noe";
    }
    std::string operator()(const SubsetSpec::RayPrefixes& r) const { return "rayprefix:" + freewalk::to_string(r.ray); }
    std::string operator()(const SubsetSpec::AaA& a) const { return std::string("aaa:") + letter_char(a.letter); }
    std::string operator()(const SubsetSpec::AnLemma& a) const {
      std::string s = "an:" + std::to_string(a.n);
      if (a.sphere_cap != SubsetSpec::AnLemma{}.sphere_cap) s += ":" + std::to_string(a.sphere_cap);
      return s;
    }
  };
  return std::visit(Visitor{}, spec.variant);
}

std::vector<Word> aaa_sphere(int d, int r, Letter letter, std::uint64_t budget) {
  check_rank(d);
  if (r < 1) return {};
  if (letter.generator >= d) throw DomainError("letter outside F_d");
  const auto code = letter.code();
  std::uint64_t used = 0;
  charge(used, count_aaa(d, r, code), budget, "A_a^a ∩ S_" + std::to_string(r));
  std::vector<Word> out;
  std::vector<std::uint8_t> buf{code};
  if (r == 1) {
    out.push_back(Word::from_codes(buf));
    return out;
  }
  enumerate_aaa(d, r, code, buf, out);
  return out;
}

WordSet an_lemma_set(int n, int R, int d, std::uint64_t budget) {
  return materialize(SubsetSpec{d, SubsetSpec::AnLemma{n, std::numeric_limits<int>::max()}}, R, budget);
}

WordSet materialize(const SubsetSpec& spec, int R, std::uint64_t budget) {
  if (R < 0) throw DomainError("negative radius");
  const int d = spec.d;
  check_rank(d);
  WordSet out;
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, SubsetSpec::Explicit>) {
          for (const auto& w : v.words)
            if (static_cast<int>(w.length()) <= R) out.insert(w);
        } else if constexpr (std::is_same_v<T, SubsetSpec::Everything>) {
          for_each_in_ball(d, R, budget, "B_" + std::to_string(R), [&](const Word& w) { out.insert(out.end(), w); });
        } else if constexpr (std::is_same_v<T, SubsetSpec::SigmaSuffix> || std::is_same_v<T, SubsetSpec::Palindromes>) {
          if (v.include_identity) out.insert(Word{});
          for_each_in_ball(d, R / 2, budget, "B_" + std::to_string(R / 2), [&](const Word& g) {
            if (g.is_identity()) return;
            if constexpr (std::is_same_v<T, SubsetSpec::SigmaSuffix>)
              out.insert(v.inverted ? inv(sigma_apply(g)) : sigma_apply(g));
            else
              out.insert(palindrome_apply(g));
          });
        } else if constexpr (std::is_same_v<T, SubsetSpec::RayPrefixes>) {
          for (int i = 0; i <= R; ++i) out.insert(v.ray.truncate(static_cast<std::size_t>(i)));
        } else if constexpr (std::is_same_v<T, SubsetSpec::AaA>) {
          std::uint64_t used = 0;
          for (int r = 1; r <= R; ++r) {
            auto words = aaa_sphere(d, r, v.letter, budget - used);
            used += words.size();
            out.insert(words.begin(), words.end());
          }
        } else if constexpr (std::is_same_v<T, SubsetSpec::AnLemma>) {
          out.insert(Word{});
          std::uint64_t used = 1;
          for (std::uint64_t m = 1;; ++m) {
            const auto exponent = pairing(static_cast<std::uint64_t>(v.n), m);
            if (exponent >= 62) break;
            const std::uint64_t len = std::uint64_t{1} << exponent;
            if (len > static_cast<std::uint64_t>(R)) break;
            if (len > static_cast<std::uint64_t>(v.sphere_cap))
              throw BudgetExceeded("A_" + std::to_string(v.n) + " needs sphere radius " + std::to_string(len) +
                                   " beyond the cap " + std::to_string(v.sphere_cap));
            auto words = aaa_sphere(d, static_cast<int>(len), Letter{0, 1}, budget - used);
            used += words.size();
            out.insert(words.begin(), words.end());
          }
        }
      },
      spec.variant);
  if (out.size() > budget) throw BudgetExceeded("materialised set exceeds the enumeration budget");
  return out;
}

GrowthReport growth_rates(const SubsetSpec& spec, int R_max, std::uint64_t budget) {
  if (R_max < 4) throw DomainError("growth estimates need R_max >= 4");
  const WordSet all = materialize(spec, R_max, budget);
  GrowthReport report;
  std::vector<std::uint64_t> per_sphere(static_cast<std::size_t>(R_max) + 1, 0);
  for (const auto& w : all) ++per_sphere[w.length()];
  std::uint64_t running = 0;
  report.lower_est = std::numeric_limits<double>::infinity();
  report.upper_est = 0;
  for (int r = 0; r <= R_max; ++r) {
    running += per_sphere[static_cast<std::size_t>(r)];
    report.radii.push_back(r);
    report.counts.push_back(running);
    if (r > R_max / 2) {
      const double est = std::pow(static_cast<double>(running), 1.0 / r);
      report.lower_est = std::min(report.lower_est, est);
      report.upper_est = std::max(report.upper_est, est);
    }
  }
  return report;
}

InjectivityReport psi_injectivity_test(int n, int R, int d) {
  if (n < 1) throw DomainError("psi_n needs n >= 1");
  InjectivityReport report;
  report.n = n;
  report.R = R;
  std::vector<std::vector<Word>> factors;
  for (int i = 1; i <= n; ++i) {
    const WordSet s = an_lemma_set(i, R, d);
    factors.emplace_back(s.begin(), s.end());
    report.factor_sizes.push_back(s.size());
  }
  WordSet products;
  std::vector<std::size_t> index(static_cast<std::size_t>(n), 0);
  for (;;) {
    Word product;
    std::size_t length_sum = 0;
    for (int i = 0; i < n; ++i) {
      const Word& g = factors[static_cast<std::size_t>(i)][index[static_cast<std::size_t>(i)]];
      product = mul(product, g);
      length_sum += g.length();
    }
    ++report.tuples;
    if (product.length() != length_sum) ++report.additivity_failures;
    if (!products.insert(std::move(product)).second) ++report.collisions;
    int pos = n - 1;
    for (; pos >= 0; --pos) {
      auto& idx = index[static_cast<std::size_t>(pos)];
      if (++idx < factors[static_cast<std::size_t>(pos)].size()) break;
      idx = 0;
    }
    if (pos < 0) break;
  }
  report.passed = report.collisions == 0 && report.additivity_failures == 0;
  return report;
}

SphereCount aaa_sphere_count(int d, int r, std::uint64_t budget) {
  if (r < 1) throw DomainError("aaa_sphere_count needs r >= 1");
  SphereCount out;
  out.count = aaa_sphere(d, r, Letter{0, 1}, budget).size();
  if (r >= 3) {
    std::uint64_t bound = 1;
    for (int i = 0; i < r - 3; ++i) bound *= static_cast<std::uint64_t>(2 * d - 1);
    out.lower_bound = bound;
    out.bound_holds = out.count >= bound;
  }
  return out;
}

}  // namespace freewalk
