#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "freewalk/words.hpp"

namespace freewalk {

// Default cap on the number of words any single enumeration may produce.
inline constexpr std::uint64_t kDefaultEnumerationBudget = 5'000'000;

// sigma(s_1 ... s_r) = s_1 ... s_{r-1} s_r^(r+1); |sigma(g)| = 2|g| and g is a prefix.
// Throws DomainError for the identity.
Word sigma_apply(const Word& g);
// s_1 ... s_r s_r ... s_1 (even palindromes).
Word palindrome_apply(const Word& g);

// Injection N^2 -> N (N = {1, 2, ...}) used for the A_n construction:
// Cantor pairing of (n - 1, m - 1) shifted by one, so r(1, 1) = 1.
std::uint64_t pairing(std::uint64_t n, std::uint64_t m);

// Lazily described subset of F_d, materialisable inside any ball.
struct SubsetSpec {
  struct Explicit {
    WordSet words;
  };
  struct Everything {};  // all of F_d
  struct SigmaSuffix {
    bool include_identity = true;
    bool inverted = false;  // the inverse images sigma(g)^-1 instead
  };
  struct Palindromes {
    bool include_identity = true;
  };
  struct RayPrefixes {
    Ray ray;
  };
  struct AaA {
    Letter letter;  // words beginning and ending with this letter
  };
  struct AnLemma {
    int n = 1;
    int sphere_cap = 16;  // largest sphere radius the construction may enumerate
  };
  using Variant = std::variant<Explicit, Everything, SigmaSuffix, Palindromes, RayPrefixes, AaA, AnLemma>;

  int d = 2;
  Variant variant;
};

// Grammar: "explicit:a,ab,ba" | "explicit:" | "all" | "sigma[:flags]" with flags
// a comma list of noe, inv | "palindromes[:noe]" | "rayprefix:prefix|period" | "aaa:a" | "an:n[:cap]".
SubsetSpec parse_subset(std::string_view text, int d);
std::string to_string(const SubsetSpec& spec);

// Exactly A ∩ B_R. Throws BudgetExceeded when more than `budget` words would be produced.
WordSet materialize(const SubsetSpec& spec, int R, std::uint64_t budget = kDefaultEnumerationBudget);

// Words of length r that begin and end with the given letter, in shortlex order.
std::vector<Word> aaa_sphere(int d, int r, Letter letter, std::uint64_t budget = kDefaultEnumerationBudget);

struct GrowthReport {
  std::vector<int> radii;
  std::vector<std::uint64_t> counts;  // |A ∩ B_r|
  double lower_est = 0;
  double upper_est = 0;
};

// Counts for r = 0..R_max; estimates are min/max of |A ∩ B_r|^(1/r) over r > R_max/2.
GrowthReport growth_rates(const SubsetSpec& spec, int R_max, std::uint64_t budget = kDefaultEnumerationBudget);

// A_n ∩ B_R = {e} ∪ union_m (A_a^a ∩ S_{2^pairing(n,m)}) with a the first generator.
WordSet an_lemma_set(int n, int R, int d, std::uint64_t budget = kDefaultEnumerationBudget);

struct InjectivityReport {
  int n = 0;
  int R = 0;
  std::vector<std::size_t> factor_sizes;
  std::uint64_t tuples = 0;
  std::uint64_t collisions = 0;
  std::uint64_t additivity_failures = 0;
  bool passed = false;
};

// Exhaustive check that (g_1, ..., g_n) -> g_1 ... g_n is injective on
// (A_1 ∩ B_R) x ... x (A_n ∩ B_R) and that lengths add.
InjectivityReport psi_injectivity_test(int n, int R, int d);

struct SphereCount {
  std::uint64_t count = 0;
  std::optional<std::uint64_t> lower_bound;  // (2d-1)^(r-3) for r >= 3
  bool bound_holds = true;
};

// |A_a^a ∩ S_r| by enumeration, with the (2d-1)^(r-3) bound checked for r >= 3.
SphereCount aaa_sphere_count(int d, int r, std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace freewalk
