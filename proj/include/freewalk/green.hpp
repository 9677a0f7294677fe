#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "freewalk/measures.hpp"

namespace freewalk {

// Green function G(g) = sum_n mu^(n)(g), either as an exact truncated series or
// as the closed form ((2d-1)/(2d-2)) (2d-1)^-|g| for the uniform walk on F_d.
class GreenModel {
 public:
  enum class Kind { TruncatedSeries, ClosedFormUniform };

  // Truncation depth used when none is given (d = 2).
  static constexpr int kDefaultTruncation = 200;

  static GreenModel truncated(FinMeasure mu, int N);
  static GreenModel closed_form(int d);

  Kind kind() const { return kind_; }
  int d() const { return d_; }
  // N for a truncated series, -1 for the closed form.
  int truncation() const { return truncation_; }
  const FinMeasure& step() const { return powers_->step(); }
  const ConvolutionPowers& powers() const { return *powers_; }
  std::string describe() const;

  Rational at(const Word& g) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::map<std::size_t, Rational> by_length;  // radial models
    std::map<Word, Rational> by_word;
  };

  GreenModel(Kind kind, int d, int truncation, std::shared_ptr<const ConvolutionPowers> powers);

  Kind kind_;
  int d_;
  int truncation_;
  std::shared_ptr<const ConvolutionPowers> powers_;
  std::shared_ptr<Cache> cache_;
};

Rational green_at(const GreenModel& model, const Word& g);
// G(E) = sum_{g in E} G(g).
Rational green_set(const GreenModel& model, const WordSet& set);
// G^k(E) = G(E k).
Rational green_translated(const GreenModel& model, const Word& k, const WordSet& set);

// A valid Harnack constant: eps_h G^k <= hG^k <= G^k / eps_h and the same for right translates.
struct EpsilonWitness {
  Word h;
  Rational value;
  int depth = 0;
};

// value = min(max_{n<=depth} mu^(n)(h^-1), max_{n<=depth} mu^(n)(h)), capped at 1.
// Path concatenation gives G(h^-1 x) >= mu^(n)(h^-1) G(x) and G(x) >= mu^(n)(h) G(h^-1 x).
// Throws DegenerateError if either maximum vanishes within depth.
EpsilonWitness epsilon_witness(const FinMeasure& mu, const Word& h, int depth);
EpsilonWitness epsilon_witness(const ConvolutionPowers& powers, const Word& h, int depth);

struct GammaViolation {
  Word point;
  std::string inequality;
  Rational lower;
  Rational middle;
  Rational upper;
};

struct GammaBoundsReport {
  bool holds = true;
  std::size_t points_checked = 0;
  std::vector<GammaViolation> violations;
};

// Pointwise check on the sample of
//   eps G^k <= hG^k <= G^k / eps   with hG^k(x) = G(h^-1 x k),
//   eps kG  <= kG^h <= kG / eps    with kG^h(x) = G(k^-1 x h).
GammaBoundsReport verify_gamma_bounds(const GreenModel& model, const EpsilonWitness& witness, const Word& k,
                                      const WordSet& sample);

struct TranslateStep {
  int radius = 0;
  Word k;
  Rational value;  // G^k(A)
};

// For each r <= radius_max the candidate k minimising G^k(A), ties broken by
// shortlex order. Candidates are S_r for the uniform walk and B_r otherwise.
std::vector<TranslateStep> find_small_translate(const GreenModel& model, const WordSet& A, int radius_max);

struct TailDecomposition {
  Rational lhs;  // sum_{n=m}^{m+N} mu^(n)(A)
  Rational rhs;  // sum_k mu^(m)(k^-1) sum_{n<=N} mu^(n)(A k)
  bool holds = false;
};

TailDecomposition tail_decomposition_check(const ConvolutionPowers& powers, const WordSet& A, int m, int N);
TailDecomposition tail_decomposition_check(const FinMeasure& mu, const WordSet& A, int m, int N);

}  // namespace freewalk
