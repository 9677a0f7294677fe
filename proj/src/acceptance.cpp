#include "freewalk/acceptance.hpp"

#include <chrono>
#include <random>
#include <sstream>

#include "freewalk/green.hpp"
#include "freewalk/martin.hpp"
#include "freewalk/oracle.hpp"
#include "freewalk/sets.hpp"
#include "freewalk/stationary.hpp"

namespace freewalk::acceptance {
namespace {

using Clock = std::chrono::steady_clock;

WordSet as_set(const std::vector<Word>& words) { return WordSet(words.begin(), words.end()); }

// Each element kept independently with probability 1/2.
std::vector<WordSet> random_subsets(const std::vector<Word>& universe, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<WordSet> out;
  for (int i = 0; i < count; ++i) {
    WordSet s;
    for (const auto& w : universe)
      if (rng() & 1u) s.insert(w);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<Ray> rays_d2() {
  std::vector<Ray> rays;
  for (const char* s : {"e|a", "e|ab", "e|abAB", "B|a", "ab|aB"}) rays.push_back(parse_ray(s, 2));
  return rays;
}

std::vector<Ray> rays_d3() {
  std::vector<Ray> rays;
  for (const char* s : {"e|a", "e|c", "e|abc", "C|aB", "bb|cAc"}) rays.push_back(parse_ray(s, 3));
  return rays;
}

WordSet sigma_set(int R) { return materialize(parse_subset("sigma", 2), R); }

CriterionResult renewal_identity() {
  CriterionResult r{1, "renewal identity G_N - mu*G_N = delta_e - mu^(N+1), N=50, ball(2,6)", false, {}, 0};
  const auto start = Clock::now();
  const int N = 50;
  const GreenModel model = GreenModel::truncated(uniform_generator_measure(2), N);
  const auto& mu = model.step();
  std::size_t checked = 0, failures = 0;
  for (const auto& g : ball(2, 6)) {
    Rational convolved = 0;
    for (const auto& [h, weight] : mu.entries()) convolved += weight * model.at(mul(inv(h), g));
    const Rational lhs = model.at(g) - convolved;
    const Rational rhs = Rational(g.is_identity() ? 1 : 0) - model.powers().at(N + 1, g);
    ++checked;
    if (lhs != rhs) ++failures;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = failures == 0 && r.seconds < 60.0;
  r.detail = std::to_string(checked) + " points, " + std::to_string(failures) + " mismatches";
  return r;
}

CriterionResult closed_form_oracle() {
  CriterionResult r{2, "closed-form Green vs truncated series N=200 within 1e-6 on ball(2,4)", false, {}, 0};
  const auto start = Clock::now();
  const GreenModel closed = GreenModel::closed_form(2);
  const GreenModel series = GreenModel::truncated(uniform_generator_measure(2), 200);
  const Rational tol(1, 1'000'000);
  Rational worst = 0;
  for (const auto& g : ball(2, 4)) worst = std::max(worst, abs(Rational(closed.at(g) - series.at(g))));
  const bool anchors = closed.at(Word{}) == Rational(3, 2) && closed.at(parse_word("a", 2)) == Rational(1, 2);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = worst < tol && anchors && r.seconds < 120.0;
  std::ostringstream os;
  os << "max |G_closed - G_200| = " << worst.get_d() << "; anchors G(e)=3/2, G(a)=1/2 " << (anchors ? "ok" : "FAILED");
  r.detail = os.str();
  return r;
}

CriterionResult green_translate_identity() {
  CriterionResult r{3, "M_k defect = delta_{k^-1}(E)/G^k(A) exactly (closed form, d=2)", false, {}, 0};
  const auto start = Clock::now();
  const GreenModel model = GreenModel::closed_form(2);
  const auto B2 = ball(2, 2);
  const auto subsets = random_subsets(B2, 50, 0x5eed0003);
  const std::vector<WordSet> As = {WordSet{Word{}}, sigma_set(6)};
  std::size_t checked = 0, failures = 0;
  for (const auto& A : As)
    for (const auto& k : B2) {
      const GreenTranslateMeasure M(model, k, A);
      for (const auto& E : subsets) {
        ++checked;
        if (!gt_defect_identity(M, E).exact_match) ++failures;
      }
    }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = failures == 0;
  r.detail = std::to_string(checked) + " (A, k, E) triples, " + std::to_string(failures) + " mismatches";
  return r;
}

CriterionResult mk_identity() {
  CriterionResult r{4, "M_n defect = (mu^(n+1)(E) - delta_e(E))/D_n exactly, |defect| <= 1/D_n", false, {}, 0};
  const auto start = Clock::now();
  auto powers = std::make_shared<const ConvolutionPowers>(uniform_generator_measure(2));
  const auto subsets = random_subsets(ball(2, 3), 50, 0x5eed0004);
  const std::vector<WordSet> As = {WordSet{Word{}}, as_set(sphere(2, 1))};
  std::size_t checked = 0, mismatches = 0, bound_failures = 0;
  for (const auto& A : As)
    for (int n = 0; n <= 10; ++n) {
      // S_1 is not reached at n = 0 (D_0 = 0); the identity starts at the first reaching n.
      if (powers->mass(0, A) == 0 && n == 0) continue;
      const MKAverage M(powers, A, n);
      for (const auto& E : subsets) {
        const auto rep = mk_defect_identity(M, E);
        ++checked;
        if (!rep.exact_match) ++mismatches;
        if (!rep.within_bound) ++bound_failures;
      }
    }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = mismatches == 0 && bound_failures == 0;
  r.detail = std::to_string(checked) + " (A, n, E) cases, " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(bound_failures) + " bound violations";
  return r;
}

CriterionResult kernel_harmonicity() {
  CriterionResult r{5, "Martin kernel f_w exactly harmonic on ball(d,6), d in {2,3}, 5 rays each", false, {}, 0};
  const auto start = Clock::now();
  std::size_t nonzero = 0, rays = 0, oracle_mismatches = 0;
  for (int d : {2, 3}) {
    const auto window = as_set(ball(d, 6));
    for (const auto& w : d == 2 ? rays_d2() : rays_d3()) {
      ++rays;
      if (harmonic_check_kernel(d, w, window) != 0) ++nonzero;
      // the kernel itself against the distance formula, on a smaller ball
      for (const auto& g : ball(d, 4))
        if (martin_kernel(d, w, g) != oracle::martin_kernel_from_distance(d, w, g)) ++oracle_mismatches;
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = nonzero == 0 && rays == 10 && oracle_mismatches == 0;
  r.detail = std::to_string(rays) + " rays, " + std::to_string(nonzero) + " with nonzero defect, " +
             std::to_string(oracle_mismatches) + " kernel values off the distance oracle";
  return r;
}

CriterionResult spherical_symmetry() {
  CriterionResult r{6, "E_zeta[sqrt f_w(g)] |S_r| = sum_{S_r} sqrt f_w (r<=4); sphere average <= 4 r 3^(-r/2) (1<=r<=8)", false, {}, 0};
  const auto start = Clock::now();
  std::size_t checked = 0, mismatches = 0, bound_failures = 0;
  const auto rays = rays_d2();
  for (int rad = 0; rad <= 4; ++rad) {
    const Rational size(Integer(sphere_size(2, rad)));
    for (const auto& w : rays) {
      const SqrtPowerSum sum = sphere_sqrt_sum(2, rad, w);
      for (const auto& g : sphere(2, rad)) {
        ++checked;
        const SqrtPowerSum expected = expected_sqrt_kernel(2, g);
        if (!(expected * size == sum) || !(expected == oracle::expected_sqrt_kernel_enumerated(2, g))) ++mismatches;
      }
    }
  }
  for (int rad = 1; rad <= 8; ++rad) {
    const Rational size(Integer(sphere_size(2, rad)));
    const SqrtPowerSum bound = SqrtPowerSum::half_power(2, -rad) * Rational(4 * rad);
    for (const auto& w : rays)
      if (!(sphere_sqrt_sum(2, rad, w) * (1 / size) <= bound)) ++bound_failures;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = mismatches == 0 && bound_failures == 0;
  r.detail = std::to_string(checked) + " (g, w) symmetry checks, " + std::to_string(mismatches) + " mismatches, " +
             std::to_string(bound_failures) + " bound violations";
  return r;
}

CriterionResult small_translate_trend() {
  CriterionResult r{7, "find_small_translate on sigma(F_2) ∩ B_8 strictly decreasing r=0..6, final < 0.05 G(A)", false, {}, 0};
  const auto start = Clock::now();
  const GreenModel model = GreenModel::closed_form(2);
  const WordSet A = sigma_set(8);
  const auto steps = find_small_translate(model, A, 6);
  bool strict = true;
  for (std::size_t i = 1; i < steps.size(); ++i) strict = strict && steps[i].value < steps[i - 1].value;
  const Rational total = green_set(model, A);
  const bool small = steps.back().value < total * Rational(1, 20);
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = strict && small && steps.size() == 7 && r.seconds < 300.0;
  std::ostringstream os;
  os << "G(A) = " << total.get_d() << ", G^k(A) at r=6 = " << steps.back().value.get_d() << " (k = "
     << to_string(steps.back().k) << "), strictly decreasing: " << (strict ? "yes" : "no");
  r.detail = os.str();
  return r;
}

CriterionResult sigma_claim() {
  CriterionResult r{8, "|sigma(F_2) ∩ B_2r| = |B_r| (r<=6); sum_{A∩B_R} f_w >= floor(R/2) (R<=16, 3 rays)", false, {}, 0};
  const auto start = Clock::now();
  const std::vector<std::uint64_t> expected = {5, 17, 53, 161, 485, 1457};
  bool counts_ok = true;
  const WordSet all = sigma_set(12);
  for (int rad = 1; rad <= 6; ++rad) {
    const auto count = static_cast<std::uint64_t>(
        std::count_if(all.begin(), all.end(), [&](const Word& w) { return static_cast<int>(w.length()) <= 2 * rad; }));
    counts_ok = counts_ok && count == expected[static_cast<std::size_t>(rad - 1)] && count == ball_size(2, rad);
  }
  bool sums_ok = true;
  std::string failing;
  const auto rays = rays_d2();
  for (std::size_t i = 0; i < 3; ++i) {
    const auto table = lightness_partial_sums(rays[i], parse_subset("sigma", 2), 16);
    bool ray_ok = true;
    for (const auto& row : table.rows) ray_ok = ray_ok && row.sum >= row.radius / 2;
    if (!ray_ok) {
      std::ostringstream os;
      os << (failing.empty() ? "" : ", ") << to_string(rays[i]) << " (sum at 16 = " << to_double(table.rows.back().sum)
         << ")";
      failing += os.str();
    }
    sums_ok = sums_ok && ray_ok;
  }
  // Diagnostic only: the inverse images sigma(g)^-1 do carry f_w >= 1 along every ray.
  bool inverse_ok = true;
  for (std::size_t i = 0; i < 3; ++i) {
    const auto table = lightness_partial_sums(rays[i], parse_subset("sigma:inv", 2), 16);
    for (const auto& row : table.rows) inverse_ok = inverse_ok && row.sum >= row.radius / 2;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = counts_ok && sums_ok;
  r.detail = std::string("counts ") + (counts_ok ? "match 5,17,53,161,485,1457" : "MISMATCH") + "; partial sums " +
             (sums_ok ? "all >= floor(R/2) for rays " + to_string(rays[0]) + ", " + to_string(rays[1]) + ", " +
                            to_string(rays[2])
                      : "BELOW floor(R/2) for " + failing) +
             "; inverse set sigma(F_2)^-1 " +
             (inverse_ok ? "meets" : "misses") + " the bound";
  return r;
}

CriterionResult lightness_contrast() {
  CriterionResult r{9, "expected sqrt-kernel sums: ray prefixes shrink by <= 0.8 beyond R=6; sigma(F_2) increments >= 0.5 to R=14", false, {}, 0};
  const auto start = Clock::now();
  const int R_max = 14;
  const auto ray_table = expected_lightness_sum(parse_subset("rayprefix:e|ab", 2), R_max);
  bool ray_ok = true;
  for (int R = 7; R <= R_max; ++R) {
    const auto inc = ray_table.rows[R].sum - ray_table.rows[R - 1].sum;
    const auto prev = ray_table.rows[R - 1].sum - ray_table.rows[R - 2].sum;
    ray_ok = ray_ok && inc <= prev * Rational(4, 5);
  }
  // sigma(F_2) only meets even spheres, so increments are taken over two radii.
  const auto sigma_table = expected_lightness_sum(parse_subset("sigma", 2), R_max);
  bool sigma_ok = true;
  for (int R = 2; R <= R_max; ++R) {
    const auto inc = sigma_table.rows[R].sum - sigma_table.rows[R - 2].sum;
    sigma_ok = sigma_ok && SqrtPowerSum(2, Rational(1, 2), 0) <= inc;
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = ray_ok && sigma_ok;
  std::ostringstream os;
  os << "ray prefixes " << (ray_ok ? "decay" : "DO NOT decay") << " (sum at 14 = " << ray_table.rows.back().sum.to_double()
     << "); sigma two-step increments " << (sigma_ok ? ">= 1/2" : "FALL BELOW 1/2") << " (sum at 14 = "
     << sigma_table.rows.back().sum.to_double() << ")";
  r.detail = os.str();
  return r;
}

CriterionResult subsets_lemma() {
  CriterionResult r{10, "psi_2 injective with additive lengths (d=2, R=8); |A_a^a ∩ S_r| >= 3^(r-3) for 3<=r<=8", false, {}, 0};
  const auto start = Clock::now();
  const auto rep = psi_injectivity_test(2, 8, 2);
  bool bounds = true;
  for (int rad = 3; rad <= 8; ++rad) bounds = bounds && aaa_sphere_count(2, rad).bound_holds;
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = rep.passed && bounds;
  r.detail = std::to_string(rep.tuples) + " tuples, " + std::to_string(rep.collisions) + " collisions, " +
             std::to_string(rep.additivity_failures) + " additivity failures; sphere bounds " + (bounds ? "hold" : "FAIL");
  return r;
}

CriterionResult gamma_not_light() {
  CriterionResult r{11, "sum_{g in B_R} f_w(g) > R for R <= 10, every tested ray", false, {}, 0};
  const auto start = Clock::now();
  std::size_t failures = 0, rows = 0;
  for (const auto& w : rays_d2()) {
    const auto table = lightness_partial_sums(w, parse_subset("all", 2), 10);
    for (const auto& row : table.rows) {
      ++rows;
      if (!(row.sum > row.radius)) ++failures;
    }
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = failures == 0;
  r.detail = std::to_string(rows) + " (w, R) rows, " + std::to_string(failures) + " failures";
  return r;
}

CriterionResult tail_decomposition() {
  CriterionResult r{12, "tail decomposition exact for (m,N) in {(1,5),(2,6),(3,4)}, A in {{e}, S_1}", false, {}, 0};
  const auto start = Clock::now();
  const ConvolutionPowers powers(uniform_generator_measure(2));
  const std::vector<WordSet> As = {WordSet{Word{}}, as_set(sphere(2, 1))};
  std::size_t failures = 0, checked = 0;
  for (const auto& [m, N] : std::vector<std::pair<int, int>>{{1, 5}, {2, 6}, {3, 4}})
    for (const auto& A : As) {
      ++checked;
      if (!tail_decomposition_check(powers, A, m, N).holds) ++failures;
    }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = failures == 0;
  r.detail = std::to_string(checked) + " cases, " + std::to_string(failures) + " failures";
  return r;
}

}  // namespace

std::vector<Criterion> criteria() {
  return {
      {1, "renewal identity", renewal_identity},
      {2, "closed-form Green oracle", closed_form_oracle},
      {3, "Green-translate defect identity", green_translate_identity},
      {4, "MK defect identity", mk_identity},
      {5, "Martin kernel harmonicity", kernel_harmonicity},
      {6, "spherical symmetry", spherical_symmetry},
      {7, "small translate trend", small_translate_trend},
      {8, "sigma set not light", sigma_claim},
      {9, "lightness contrast", lightness_contrast},
      {10, "injectivity lemma", subsets_lemma},
      {11, "whole group not light", gamma_not_light},
      {12, "tail decomposition", tail_decomposition},
  };
}

CriterionResult run_one(const Criterion& c) {
  try {
    return c.run();
  } catch (const std::exception& e) {
    return {c.id, c.name, false, std::string("exception: ") + e.what(), 0};
  }
}

std::vector<CriterionResult> run_all() {
  std::vector<CriterionResult> out;
  for (const auto& c : criteria()) out.push_back(run_one(c));
  return out;
}

}  // namespace freewalk::acceptance
