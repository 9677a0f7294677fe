#pragma once

#include <deque>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "freewalk/rational.hpp"
#include "freewalk/words.hpp"

namespace freewalk {

// Finitely supported map from F_d to the nonnegative rationals. Zero entries
// are never stored.
class FinMeasure {
 public:
  explicit FinMeasure(int d);

  static FinMeasure delta(int d, const Word& g);

  int d() const { return d_; }
  // Adds mass at g; the resulting entry must stay nonnegative.
  void add(const Word& g, const Rational& mass);
  Rational at(const Word& g) const;
  Rational mass(const WordSet& set) const;
  Rational total_mass() const;
  std::size_t support_size() const { return entries_.size(); }
  const std::map<Word, Rational>& entries() const { return entries_; }
  // Longest word in the support (0 for an empty measure).
  std::size_t max_length() const;

  friend bool operator==(const FinMeasure&, const FinMeasure&) = default;

 private:
  int d_;
  std::map<Word, Rational> entries_;
};

// Mass 1/(2d) on every generator and inverse.
FinMeasure uniform_generator_measure(int d);
bool is_uniform_generator_measure(const FinMeasure& mu);

// (mu * nu)(g) = sum_h mu(h) nu(h^-1 g).
FinMeasure convolve(const FinMeasure& mu, const FinMeasure& nu);
// mu^(0) = delta_e; mu^(n) = mu^(n-1) * mu.
FinMeasure power(const FinMeasure& mu, int n);

struct WindowedPower {
  FinMeasure measure;           // exactly mu^(n) restricted to B_radius
  bool discarded_outside = false;  // true when mu^(n) had mass outside B_radius
};

// mu^(n) on B_radius only; intermediate steps keep just the ball that can still
// reach the window, so the restriction is exact.
WindowedPower windowed_power(const FinMeasure& mu, int n, int radius);

// Memoised convolution powers of one measure. For the uniform generator measure
// point values come from the exact radial law of |X_n| (a birth-death chain on
// the tree), which avoids materialising supports of size ~(2d-1)^n.
// Thread-safe: lookups are serialised and return values.
class ConvolutionPowers {
 public:
  explicit ConvolutionPowers(FinMeasure mu);

  const FinMeasure& step() const { return mu_; }
  int d() const { return mu_.d(); }
  bool radial() const { return radial_; }

  // mu^(n)(g).
  Rational at(int n, const Word& g) const;
  Rational mass(int n, const WordSet& set) const;
  // P(|X_n| = r) for the uniform walk; DomainError otherwise.
  Rational radial_mass(int n, int r) const;
  // Full mu^(n), memoised; materialises the whole support.
  FinMeasure measure(int n) const;

 private:
  void extend_radial(int n) const;
  const FinMeasure& full_power_locked(int n) const;

  FinMeasure mu_;
  bool radial_;
  mutable std::mutex mutex_;
  mutable std::deque<FinMeasure> powers_;
  mutable std::vector<std::vector<Rational>> radial_law_;  // [n][r]
  mutable std::vector<Rational> sphere_sizes_;
};

// Finite window of a function on F_d; the domain of values is the window.
class WindowFn {
 public:
  WindowFn() = default;
  explicit WindowFn(std::map<Word, Rational> values) : values_(std::move(values)) {}

  void set(const Word& g, Rational v) { values_[g] = std::move(v); }
  std::optional<Rational> at(const Word& g) const;
  WordSet window() const;
  const std::map<Word, Rational>& values() const { return values_; }

 private:
  std::map<Word, Rational> values_;
};

// Any function that may or may not be defined at a given point.
using FnProvider = std::function<std::optional<Rational>(const Word&)>;

FnProvider provider(const WindowFn& f);
FnProvider provider(std::function<Rational(const Word&)> total);

// [mu * f](g) = sum_h mu(h) f(h^-1 g). Throws EvaluationError when f is undefined
// at a required point.
Rational left_convolve_fn(const FinMeasure& mu, const FnProvider& f, const Word& g);

// max_{g in window} |[mu * f](g) - f(g)|.
Rational harmonicity_defect(const FinMeasure& mu, const FnProvider& f, const WordSet& window);

}  // namespace freewalk
