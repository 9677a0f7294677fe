#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "freewalk/measures.hpp"
#include "freewalk/sets.hpp"
#include "freewalk/sqrt_power_sum.hpp"

namespace freewalk {

// f_w(g) = (2d-1)^exponent with exponent = |g^-1| - 2 D(g^-1, w) = 2 lcp(g^-1, w) - |g|.
struct KernelValue {
  long exponent = 0;
};

KernelValue kernel_exponent(const Ray& w, const Word& g);
Rational martin_kernel(int d, const Ray& w, const Word& g);
// sqrt(f_w(g)) = (2d-1)^(exponent/2).
SqrtPowerSum sqrt_kernel(int d, const Ray& w, const Word& g);

// Harmonicity defect of f_w over the window under the uniform generator measure.
Rational harmonic_check_kernel(int d, const Ray& w, const WordSet& window);

// zeta-mass 1/(2d (2d-1)^(n-1)) of the cylinder of rays extending prefix; 1 for the empty prefix.
Rational hitting_cylinder(int d, const Word& prefix);

// A reduced word distributed as the first `length` letters of a zeta-random ray.
Word sample_ray(int d, int length, std::uint64_t seed);

// E_zeta[sqrt f_w(g)], summing over all depth-|g| cylinders. f_w(g) only depends on
// lcp(g^-1, w), so cylinders are counted per lcp class rather than listed.
SqrtPowerSum expected_sqrt_kernel(int d, const Word& g);

// sum_{h in S_r} sqrt f_w(h) by full enumeration of S_r.
SqrtPowerSum sphere_sqrt_sum(int d, int r, const Ray& w, std::uint64_t budget = kDefaultEnumerationBudget);

enum class Trend { BoundedLooking, Diverging };
std::string to_string(Trend t);

// Heuristic label: "bounded-looking" iff each of the last three increments is at
// most 0.8 times the one before it.
inline constexpr int kTrendWindow = 3;
inline const Rational kTrendShrink{4, 5};

template <class Value>
struct PartialSumRow {
  int radius = 0;
  Value sum;
};

template <class Value>
struct PartialSumTable {
  std::vector<PartialSumRow<Value>> rows;
  Trend trend = Trend::Diverging;
};

// Partial sums of f_w over A ∩ B_R for R = 0..R_max.
PartialSumTable<Rational> lightness_partial_sums(const Ray& w, const SubsetSpec& A, int R_max,
                                                 std::uint64_t budget = kDefaultEnumerationBudget);
// Partial sums of E_zeta[sqrt f_w(g)] over A ∩ B_R for R = 0..R_max.
PartialSumTable<SqrtPowerSum> expected_lightness_sum(const SubsetSpec& A, int R_max,
                                                     std::uint64_t budget = kDefaultEnumerationBudget);

Trend classify_trend(const std::vector<Rational>& partial_sums);
Trend classify_trend(const std::vector<SqrtPowerSum>& partial_sums);

}  // namespace freewalk
