#include "freewalk/stationary.hpp"

#include "freewalk/errors.hpp"

namespace freewalk {
namespace {

WordSet left_translate(const Word& g, const WordSet& E) {
  WordSet out;
  for (const auto& x : E) out.insert(mul(g, x));
  return out;
}

WordSet right_translate(const WordSet& E, const Word& k) {
  WordSet out;
  for (const auto& x : E) out.insert(mul(x, k));
  return out;
}

// First n' > n with mu^(n')(A) > 0, searched up to a fixed horizon.
std::optional<int> first_reaching_step(const ConvolutionPowers& powers, const WordSet& A, int from) {
  constexpr int kHorizon = 64;
  for (int m = from; m <= from + kHorizon; ++m)
    if (powers.mass(m, A) > 0) return m;
  return std::nullopt;
}

}  // namespace

MKAverage::MKAverage(std::shared_ptr<const ConvolutionPowers> powers, WordSet A, int n)
    : powers_(std::move(powers)), A_(std::move(A)), n_(n) {
  if (n_ < 0) throw DomainError("MK average needs n >= 0");
  denominator_ = occupation(A_);
  if (denominator_ == 0) {
    auto first = first_reaching_step(*powers_, A_, n_ + 1);
    throw DegenerateError("A is not reached within n = " + std::to_string(n_) + " steps" +
                          (first ? "; first reachable n is " + std::to_string(*first) : "; not reached within 64 further steps"));
  }
}

MKAverage::MKAverage(const FinMeasure& mu, WordSet A, int n)
    : MKAverage(std::make_shared<const ConvolutionPowers>(mu), std::move(A), n) {}

Rational MKAverage::occupation(const WordSet& E) const {
  Rational total = 0;
  for (int m = 0; m <= n_; ++m) total += powers_->mass(m, E);
  return total;
}

Rational mk_measure(const MKAverage& M, const WordSet& E) { return M.occupation(E) / M.denominator(); }

DefectReport mk_defect_identity(const MKAverage& M, const WordSet& E) {
  DefectReport report;
  report.E = E;
  // [mu * M_n](E) = sum_h mu(h) M_n(h^-1 E)
  Rational convolved = 0;
  for (const auto& [h, weight] : M.powers().step().entries()) convolved += weight * mk_measure(M, left_translate(inv(h), E));
  report.lhs = convolved - mk_measure(M, E);
  const Rational delta_e = E.count(Word{}) ? 1 : 0;
  report.rhs = (M.powers().mass(M.n() + 1, E) - delta_e) / M.denominator();
  report.exact_match = report.lhs == report.rhs;
  report.bound = 1 / M.denominator();
  report.within_bound = abs(report.lhs) <= *report.bound;
  return report;
}

GreenTranslateMeasure::GreenTranslateMeasure(GreenModel model, Word k, WordSet A)
    : model_(std::move(model)), k_(std::move(k)), A_(std::move(A)) {
  normaliser_ = green_translated(model_, k_, A_);
  if (normaliser_ == 0)
    throw DegenerateError("G^k(A) = 0 for k = " + to_string(k_) + " under " + model_.describe() +
                          "; increase the truncation depth or check A is nonempty");
}

Rational GreenTranslateMeasure::measure(const WordSet& E) const { return green_translated(model_, k_, E) / normaliser_; }

Rational GreenTranslateMeasure::convolved(const WordSet& E) const {
  Rational total = 0;
  for (const auto& [h, weight] : model_.step().entries())
    total += weight * green_translated(model_, k_, left_translate(inv(h), E));
  return total / normaliser_;
}

Rational gt_measure(const GreenTranslateMeasure& M, const WordSet& E) { return M.measure(E); }

DefectReport gt_defect_identity(const GreenTranslateMeasure& M, const WordSet& E) {
  DefectReport report;
  report.E = E;
  report.lhs = M.measure(E) - M.convolved(E);
  const Rational hit = E.count(inv(M.k())) ? 1 : 0;
  report.rhs = hit / M.normaliser();
  report.exact_match = report.lhs == report.rhs;
  if (M.model().kind() == GreenModel::Kind::TruncatedSeries) {
    const int N = M.model().truncation();
    report.residual = report.lhs - report.rhs;
    report.truncation_term = -M.model().powers().mass(N + 1, right_translate(E, M.k())) / M.normaliser();
    report.residual_explained = *report.residual == *report.truncation_term;
  }
  return report;
}

std::vector<ScheduleRow> vanishing_defect_schedule(const GreenModel& model, const WordSet& A, const WordSet& E,
                                                   int radius_max) {
  std::vector<ScheduleRow> rows;
  for (auto& step : find_small_translate(model, A, radius_max)) {
    GreenTranslateMeasure M(model, step.k, A);
    auto report = gt_defect_identity(M, E);
    rows.push_back({step.radius, step.k, step.value, report.lhs, E.count(inv(step.k)) > 0});
  }
  return rows;
}

LowerBoundCheck stationarity_lower_bound(const GreenTranslateMeasure& M, const WordSet& E, int witness_depth) {
  LowerBoundCheck out;
  const auto& powers = M.model().powers();
  for (const auto& [h, weight] : M.model().step().entries())
    out.factor += weight * epsilon_witness(powers, h, witness_depth).value;
  out.convolved = M.convolved(E);
  out.measure = M.measure(E);
  out.holds = out.convolved >= out.factor * out.measure;
  return out;
}

}  // namespace freewalk
