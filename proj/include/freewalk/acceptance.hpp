#pragma once

#include <functional>
#include <string>
#include <vector>

namespace freewalk::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;  // deterministic summary of what was checked
  double seconds = 0;  // wall time, reported but never written to artifacts
};

struct Criterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

// The twelve exit criteria, in order.
std::vector<Criterion> criteria();

CriterionResult run_one(const Criterion& c);
std::vector<CriterionResult> run_all();

}  // namespace freewalk::acceptance
