#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "freewalk/green.hpp"

namespace freewalk {

// Signed stationarity defect on one finite test set E.
struct DefectReport {
  WordSet E;
  Rational lhs;
  Rational rhs;
  bool exact_match = false;  // lhs == rhs
  // M_n only: |lhs| <= 1/D_n.
  std::optional<Rational> bound;
  bool within_bound = true;
  // Truncated Green models only: residual = lhs - rhs and the predicted
  // truncation term -mu^(N+1)(E k) / G_N^k(A).
  std::optional<Rational> residual;
  std::optional<Rational> truncation_term;
  bool residual_explained = true;
};

// M_n(E) = sum_{m<=n} mu^(m)(E) / D_n with D_n = sum_{m<=n} mu^(m)(A).
class MKAverage {
 public:
  // Throws DegenerateError when D_n = 0, naming the first n that reaches A.
  MKAverage(std::shared_ptr<const ConvolutionPowers> powers, WordSet A, int n);
  MKAverage(const FinMeasure& mu, WordSet A, int n);

  const ConvolutionPowers& powers() const { return *powers_; }
  const WordSet& A() const { return A_; }
  int n() const { return n_; }
  const Rational& denominator() const { return denominator_; }

  // Unnormalised sum_{m<=n} mu^(m)(E).
  Rational occupation(const WordSet& E) const;

 private:
  std::shared_ptr<const ConvolutionPowers> powers_;
  WordSet A_;
  int n_;
  Rational denominator_;
};

Rational mk_measure(const MKAverage& M, const WordSet& E);

// lhs = [mu * M_n](E) - M_n(E) by direct convolution; rhs = (mu^(n+1)(E) - delta_e(E)) / D_n.
DefectReport mk_defect_identity(const MKAverage& M, const WordSet& E);

// M_k(E) = G^k(E) / G^k(A).
class GreenTranslateMeasure {
 public:
  // Throws DegenerateError when G^k(A) = 0 (only possible for truncated models).
  GreenTranslateMeasure(GreenModel model, Word k, WordSet A);

  const GreenModel& model() const { return model_; }
  const Word& k() const { return k_; }
  const WordSet& A() const { return A_; }
  const Rational& normaliser() const { return normaliser_; }

  Rational measure(const WordSet& E) const;
  // [mu * M_k](E) = sum_h mu(h) M_k(h^-1 E).
  Rational convolved(const WordSet& E) const;

 private:
  GreenModel model_;
  Word k_;
  WordSet A_;
  Rational normaliser_;
};

Rational gt_measure(const GreenTranslateMeasure& M, const WordSet& E);

// lhs = M_k(E) - [mu * M_k](E); rhs = delta_{k^-1}(E) / G^k(A). Exact for the
// closed form; for truncated series the residual is reported and compared to
// the exact truncation term.
DefectReport gt_defect_identity(const GreenTranslateMeasure& M, const WordSet& E);

struct ScheduleRow {
  int radius = 0;
  Word k;
  Rational translated_mass;  // G^k(A)
  Rational defect;           // M_k(E) - [mu * M_k](E)
  bool k_inverse_in_E = false;
};

// Defects along the translate sequence of find_small_translate.
std::vector<ScheduleRow> vanishing_defect_schedule(const GreenModel& model, const WordSet& A, const WordSet& E,
                                                   int radius_max);

struct LowerBoundCheck {
  Rational convolved;  // [mu * M_k](E)
  Rational factor;     // sum_h mu(h) eps_h
  Rational measure;    // M_k(E)
  bool holds = false;  // convolved >= factor * measure
};

// [mu * M_k](E) >= (sum_h mu(h) eps_h) M_k(E) with eps_h from epsilon_witness(depth).
LowerBoundCheck stationarity_lower_bound(const GreenTranslateMeasure& M, const WordSet& E, int witness_depth);

}  // namespace freewalk
