#pragma once

// Independent reference computations. None of these route through the code
// path they are used to check.

#include "freewalk/measures.hpp"
#include "freewalk/sqrt_power_sum.hpp"

namespace freewalk::oracle {

// sum_{n<=N} mu^(n)(g) by repeated full convolution of explicit measures.
Rational green_series_bruteforce(const FinMeasure& mu, int N, const Word& g);

// min_{0 <= i <= horizon} |g^-1 s_1 ... s_i|.
std::size_t dist_to_ray_bruteforce(const Word& g, const Ray& w, std::size_t horizon);

// f_w(g) = (2d-1)^(|g^-1| - 2 D(g^-1, w)) with D from the brute-force minimum.
Rational martin_kernel_from_distance(int d, const Ray& w, const Word& g);

// E_zeta[sqrt f_w(g)] listing every depth-|g| cylinder individually.
SqrtPowerSum expected_sqrt_kernel_enumerated(int d, const Word& g);

// mu^(n)(g) for the uniform walk by dynamic programming over explicit words.
Rational uniform_walk_probability(int d, int n, const Word& g);

}  // namespace freewalk::oracle
