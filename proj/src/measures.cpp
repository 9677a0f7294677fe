#include "freewalk/measures.hpp"

#include <algorithm>

#include "freewalk/errors.hpp"

namespace freewalk {

FinMeasure::FinMeasure(int d) : d_(d) { check_rank(d); }

FinMeasure FinMeasure::delta(int d, const Word& g) {
  FinMeasure m(d);
  m.add(g, 1);
  return m;
}

void FinMeasure::add(const Word& g, const Rational& mass) {
  if (mass == 0) return;
  Rational m = mass;
  m.canonicalize();
  if (g.max_generator() >= d_) throw DomainError("word " + to_string(g) + " is not in F_" + std::to_string(d_));
  auto it = entries_.find(g);
  const Rational total = it == entries_.end() ? m : Rational(it->second + m);
  if (total < 0) throw DomainError("negative mass at " + to_string(g));
  if (total == 0)
    entries_.erase(it);
  else if (it == entries_.end())
    entries_.emplace(g, total);
  else
    it->second = total;
}

Rational FinMeasure::at(const Word& g) const {
  auto it = entries_.find(g);
  return it == entries_.end() ? Rational(0) : it->second;
}

Rational FinMeasure::mass(const WordSet& set) const {
  Rational total = 0;
  if (set.size() < entries_.size()) {
    for (const auto& g : set) total += at(g);
  } else {
    for (const auto& [g, m] : entries_)
      if (set.count(g)) total += m;
  }
  return total;
}

Rational FinMeasure::total_mass() const {
  Rational total = 0;
  for (const auto& [g, m] : entries_) total += m;
  return total;
}

std::size_t FinMeasure::max_length() const {
  std::size_t n = 0;
  for (const auto& [g, m] : entries_) n = std::max(n, g.length());
  return n;
}

FinMeasure uniform_generator_measure(int d) {
  FinMeasure mu(d);
  const Rational mass(1, 2 * d);
  for (const auto& g : sphere(d, 1)) mu.add(g, mass);
  return mu;
}

bool is_uniform_generator_measure(const FinMeasure& mu) { return mu == uniform_generator_measure(mu.d()); }

FinMeasure convolve(const FinMeasure& mu, const FinMeasure& nu) {
  if (mu.d() != nu.d()) throw DomainError("convolution of measures on different free groups");
  FinMeasure out(mu.d());
  for (const auto& [h, a] : mu.entries())
    for (const auto& [x, b] : nu.entries()) out.add(mul(h, x), a * b);
  return out;
}

FinMeasure power(const FinMeasure& mu, int n) {
  if (n < 0) throw DomainError("negative convolution power");
  FinMeasure out = FinMeasure::delta(mu.d(), Word{});
  for (int i = 0; i < n; ++i) out = convolve(out, mu);
  return out;
}

WindowedPower windowed_power(const FinMeasure& mu, int n, int radius) {
  if (n < 0) throw DomainError("negative convolution power");
  if (radius < 0) throw DomainError("negative window radius");
  const auto step_len = mu.max_length();
  WindowedPower result{FinMeasure::delta(mu.d(), Word{}), false};
  for (int i = 1; i <= n; ++i) {
    FinMeasure next(mu.d());
    // After step i, only words within radius + (n - i) * step_len can come back.
    const std::size_t keep = static_cast<std::size_t>(radius) + static_cast<std::size_t>(n - i) * step_len;
    for (const auto& [x, a] : result.measure.entries())
      for (const auto& [h, b] : mu.entries()) {
        Word y = mul(x, h);
        if (y.length() <= keep)
          next.add(y, a * b);
        else
          result.discarded_outside = true;
      }
    result.measure = std::move(next);
  }
  return result;
}

ConvolutionPowers::ConvolutionPowers(FinMeasure mu) : mu_(std::move(mu)), radial_(is_uniform_generator_measure(mu_)) {
  powers_.push_back(FinMeasure::delta(mu_.d(), Word{}));
  radial_law_.push_back({Rational(1)});
}

void ConvolutionPowers::extend_radial(int n) const {
  const int d = mu_.d();
  const Rational up(2 * d - 1, 2 * d);
  const Rational down(1, 2 * d);
  while (static_cast<int>(radial_law_.size()) <= n) {
    const auto& prev = radial_law_.back();
    std::vector<Rational> next(prev.size() + 1, Rational(0));
    for (std::size_t r = 0; r < prev.size(); ++r) {
      if (prev[r] == 0) continue;
      if (r == 0) {
        next[1] += prev[0];
      } else {
        next[r + 1] += prev[r] * up;
        next[r - 1] += prev[r] * down;
      }
    }
    radial_law_.push_back(std::move(next));
  }
}

Rational ConvolutionPowers::radial_mass(int n, int r) const {
  if (!radial_) throw DomainError("radial law requires the uniform generator measure");
  if (n < 0) throw DomainError("negative convolution power");
  if (r < 0 || r > n) return 0;
  std::lock_guard lock(mutex_);
  extend_radial(n);
  return radial_law_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)];
}

const FinMeasure& ConvolutionPowers::full_power_locked(int n) const {
  while (static_cast<int>(powers_.size()) <= n) powers_.push_back(convolve(powers_.back(), mu_));
  return powers_[static_cast<std::size_t>(n)];
}

Rational ConvolutionPowers::at(int n, const Word& g) const {
  if (n < 0) throw DomainError("negative convolution power");
  if (radial_) {
    const auto r = static_cast<int>(g.length());
    if (r > n) return 0;
    std::lock_guard lock(mutex_);
    extend_radial(n);
    return radial_law_[static_cast<std::size_t>(n)][static_cast<std::size_t>(r)] / Rational(Integer(sphere_size(mu_.d(), r)));
  }
  std::lock_guard lock(mutex_);
  return full_power_locked(n).at(g);
}

Rational ConvolutionPowers::mass(int n, const WordSet& set) const {
  Rational total = 0;
  for (const auto& g : set) total += at(n, g);
  return total;
}

FinMeasure ConvolutionPowers::measure(int n) const {
  if (n < 0) throw DomainError("negative convolution power");
  std::lock_guard lock(mutex_);
  return full_power_locked(n);
}

std::optional<Rational> WindowFn::at(const Word& g) const {
  auto it = values_.find(g);
  if (it == values_.end()) return std::nullopt;
  return it->second;
}

WordSet WindowFn::window() const {
  WordSet w;
  for (const auto& [g, v] : values_) w.insert(w.end(), g);
  return w;
}

FnProvider provider(const WindowFn& f) {
  return [f](const Word& g) { return f.at(g); };
}

FnProvider provider(std::function<Rational(const Word&)> total) {
  return [total = std::move(total)](const Word& g) -> std::optional<Rational> { return total(g); };
}

Rational left_convolve_fn(const FinMeasure& mu, const FnProvider& f, const Word& g) {
  Rational total = 0;
  for (const auto& [h, m] : mu.entries()) {
    const Word x = mul(inv(h), g);
    auto v = f(x);
    if (!v) throw EvaluationError("function not evaluable at " + to_string(x) + " (needed for [mu*f](" + to_string(g) + "))");
    total += m * *v;
  }
  return total;
}

Rational harmonicity_defect(const FinMeasure& mu, const FnProvider& f, const WordSet& window) {
  Rational worst = 0;
  for (const auto& g : window) {
    auto v = f(g);
    if (!v) throw EvaluationError("function not evaluable at " + to_string(g));
    const Rational diff = abs(left_convolve_fn(mu, f, g) - *v);
    if (diff > worst) worst = diff;
  }
  return worst;
}

}  // namespace freewalk
