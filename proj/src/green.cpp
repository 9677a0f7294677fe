#include "freewalk/green.hpp"

#include <algorithm>

#include "freewalk/errors.hpp"

namespace freewalk {

GreenModel::GreenModel(Kind kind, int d, int truncation, std::shared_ptr<const ConvolutionPowers> powers)
    : kind_(kind), d_(d), truncation_(truncation), powers_(std::move(powers)), cache_(std::make_shared<Cache>()) {}

GreenModel GreenModel::truncated(FinMeasure mu, int N) {
  if (N < 0) throw DomainError("truncation depth must be >= 0");
  const int d = mu.d();
  return GreenModel(Kind::TruncatedSeries, d, N, std::make_shared<const ConvolutionPowers>(std::move(mu)));
}

GreenModel GreenModel::closed_form(int d) {
  check_rank(d);
  return GreenModel(Kind::ClosedFormUniform, d, -1,
                    std::make_shared<const ConvolutionPowers>(uniform_generator_measure(d)));
}

std::string GreenModel::describe() const {
  if (kind_ == Kind::ClosedFormUniform) return "closed-form-uniform(d=" + std::to_string(d_) + ")";
  return std::string("truncated-series(d=") + std::to_string(d_) + ",N=" + std::to_string(truncation_) +
         (powers_->radial() ? ",mu=uniform)" : ",mu=custom)");
}

Rational GreenModel::at(const Word& g) const {
  if (kind_ == Kind::ClosedFormUniform) {
    const long q = 2L * d_ - 1;
    return Rational(q, q - 1) * rational_pow(q, -static_cast<long>(g.length()));
  }
  std::lock_guard lock(cache_->mutex);
  if (powers_->radial()) {
    auto [it, inserted] = cache_->by_length.try_emplace(g.length());
    if (inserted) {
      Rational total = 0;
      for (int n = static_cast<int>(g.length()); n <= truncation_; ++n) total += powers_->at(n, g);
      it->second = total;
    }
    return it->second;
  }
  auto [it, inserted] = cache_->by_word.try_emplace(g);
  if (inserted) {
    Rational total = 0;
    for (int n = 0; n <= truncation_; ++n) total += powers_->at(n, g);
    it->second = total;
  }
  return it->second;
}

Rational green_at(const GreenModel& model, const Word& g) { return model.at(g); }

Rational green_set(const GreenModel& model, const WordSet& set) {
  Rational total = 0;
  for (const auto& g : set) total += model.at(g);
  return total;
}

Rational green_translated(const GreenModel& model, const Word& k, const WordSet& set) {
  Rational total = 0;
  for (const auto& g : set) total += model.at(mul(g, k));
  return total;
}

EpsilonWitness epsilon_witness(const ConvolutionPowers& powers, const Word& h, int depth) {
  if (depth < 0) throw DomainError("negative witness depth");
  if (h.is_identity()) return {h, Rational(1), depth};
  const Word h_inv = inv(h);
  Rational best_inv = 0;
  Rational best = 0;
  for (int n = 0; n <= depth; ++n) {
    best_inv = std::max(best_inv, powers.at(n, h_inv));
    best = std::max(best, powers.at(n, h));
  }
  if (best_inv == 0 || best == 0)
    throw DegenerateError("no path to " + to_string(best_inv == 0 ? h_inv : h) + " within depth " +
                          std::to_string(depth) + "; increase depth");
  Rational value = std::min(best_inv, best);
  if (value > 1) value = 1;
  return {h, value, depth};
}

EpsilonWitness epsilon_witness(const FinMeasure& mu, const Word& h, int depth) {
  return epsilon_witness(ConvolutionPowers(mu), h, depth);
}

GammaBoundsReport verify_gamma_bounds(const GreenModel& model, const EpsilonWitness& witness, const Word& k,
                                      const WordSet& sample) {
  GammaBoundsReport report;
  const Rational& eps = witness.value;
  const Rational inv_eps = 1 / eps;
  const Word h_inv = inv(witness.h);
  const Word k_inv = inv(k);
  auto check = [&](const Word& x, const char* name, const Rational& base, const Rational& mid) {
    const Rational lo = eps * base;
    const Rational hi = inv_eps * base;
    if (lo > mid || mid > hi) {
      report.holds = false;
      report.violations.push_back({x, name, lo, mid, hi});
    }
  };
  for (const auto& x : sample) {
    check(x, "eps*G^k <= hG^k <= G^k/eps", model.at(mul(x, k)), model.at(mul(mul(h_inv, x), k)));
    check(x, "eps*kG <= kG^h <= kG/eps", model.at(mul(k_inv, x)), model.at(mul(mul(k_inv, x), witness.h)));
    ++report.points_checked;
  }
  return report;
}

std::vector<TranslateStep> find_small_translate(const GreenModel& model, const WordSet& A, int radius_max) {
  if (radius_max < 0) throw DomainError("negative radius_max");
  const bool radial = model.kind() == GreenModel::Kind::ClosedFormUniform || model.powers().radial();
  std::vector<TranslateStep> steps;
  for (int r = 0; r <= radius_max; ++r) {
    std::optional<TranslateStep> best;
    auto consider = [&](const Word& k) {
      Rational v = 0;
      for (const auto& x : A) v += model.at(mul(x, k));
      // Strict comparison keeps the first minimiser in shortlex order.
      if (!best || v < best->value) best = TranslateStep{r, k, std::move(v)};
    };
    if (radial) {
      for_each_in_sphere(model.d(), r, consider);
    } else {
      for (int s = 0; s <= r; ++s) for_each_in_sphere(model.d(), s, consider);
    }
    steps.push_back(std::move(*best));
  }
  return steps;
}

TailDecomposition tail_decomposition_check(const ConvolutionPowers& powers, const WordSet& A, int m, int N) {
  if (m < 0 || N < 0) throw DomainError("tail decomposition needs m, N >= 0");
  TailDecomposition out;
  for (int n = m; n <= m + N; ++n) out.lhs += powers.mass(n, A);
  // Support of mu^(m) taken from the full measure so the right side never uses
  // the radial shortcut for its outer sum.
  const FinMeasure head = powers.measure(m);
  for (const auto& [y, weight] : head.entries()) {
    const Word k = inv(y);
    WordSet shifted;
    for (const auto& x : A) shifted.insert(mul(x, k));
    Rational inner = 0;
    for (int n = 0; n <= N; ++n) inner += powers.mass(n, shifted);
    out.rhs += weight * inner;
  }
  out.holds = out.lhs == out.rhs;
  return out;
}

TailDecomposition tail_decomposition_check(const FinMeasure& mu, const WordSet& A, int m, int N) {
  return tail_decomposition_check(ConvolutionPowers(mu), A, m, N);
}

}  // namespace freewalk
