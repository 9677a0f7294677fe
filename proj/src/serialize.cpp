#include "freewalk/serialize.hpp"

#include <cstdio>

#include "freewalk/errors.hpp"

namespace freewalk {

Json to_json(const FinMeasure& mu) {
  Json j = Json::object();
  for (const auto& [g, m] : mu.entries()) j[to_string(g)] = to_string(m);
  return j;
}

FinMeasure measure_from_json(const Json& j, int d) {
  if (!j.is_object()) throw ParseError("measure JSON must be an object");
  FinMeasure mu(d);
  for (const auto& [key, value] : j.items()) {
    if (!value.is_string()) throw ParseError("measure mass for '" + key + "' must be a \"p/q\" string");
    const Rational m = parse_rational(value.get<std::string>());
    if (m < 0) throw ParseError("negative mass for '" + key + "'");
    mu.add(parse_word(key, d), m);
  }
  return mu;
}

Json to_json(const SqrtPowerSum& x) {
  Json j = Json::object();
  for (const auto& [k, c] : x.coeffs()) j[std::to_string(k)] = to_string(c);
  return j;
}

SqrtPowerSum sqrt_power_sum_from_json(const Json& j, int d) {
  if (!j.is_object()) throw ParseError("SqrtPowerSum JSON must be an object");
  SqrtPowerSum out(d);
  for (const auto& [key, value] : j.items()) {
    long k = 0;
    try {
      std::size_t used = 0;
      k = std::stol(key, &used);
      if (used != key.size()) throw ParseError("bad exponent");
    } catch (const std::exception&) {
      throw ParseError("SqrtPowerSum exponent '" + key + "' is not an integer");
    }
    if (!value.is_string()) throw ParseError("SqrtPowerSum coefficient must be a \"p/q\" string");
    out += SqrtPowerSum::half_power(d, k) * parse_rational(value.get<std::string>());
  }
  return out;
}

Json to_json(const WordSet& set) {
  Json j = Json::array();
  for (const auto& g : set) j.push_back(to_string(g));
  return j;
}

Json to_json(const DefectReport& r) {
  Json j;
  j["E"] = to_json(r.E);
  j["lhs"] = to_string(r.lhs);
  j["rhs"] = to_string(r.rhs);
  j["exact_match"] = r.exact_match;
  j["lhs_float"] = to_double(r.lhs);
  if (r.bound) {
    j["bound"] = to_string(*r.bound);
    j["within_bound"] = r.within_bound;
  }
  if (r.residual) {
    j["residual"] = to_string(*r.residual);
    j["truncation_term"] = to_string(*r.truncation_term);
    j["residual_explained"] = r.residual_explained;
  }
  return j;
}

Json to_json(const GrowthReport& r) {
  Json j;
  j["radii"] = r.radii;
  j["counts"] = r.counts;
  j["lower_est"] = r.lower_est;
  j["upper_est"] = r.upper_est;
  return j;
}

Json to_json(const InjectivityReport& r) {
  Json j;
  j["n"] = r.n;
  j["R"] = r.R;
  j["factor_sizes"] = r.factor_sizes;
  j["tuples"] = r.tuples;
  j["collisions"] = r.collisions;
  j["additivity_failures"] = r.additivity_failures;
  j["passed"] = r.passed;
  return j;
}

Json to_json(const GammaBoundsReport& r) {
  Json j;
  j["holds"] = r.holds;
  j["points_checked"] = r.points_checked;
  Json v = Json::array();
  for (const auto& x : r.violations)
    v.push_back({{"point", to_string(x.point)},
                 {"inequality", x.inequality},
                 {"lower", to_string(x.lower)},
                 {"value", to_string(x.middle)},
                 {"upper", to_string(x.upper)}});
  j["violations"] = v;
  return j;
}

std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

std::string csv_row(const std::vector<std::string>& fields) {
  std::string line;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) line += ',';
    const auto& f = fields[i];
    if (f.find_first_of(",\"\n") != std::string::npos) {
      line += '"';
      for (char c : f) {
        if (c == '"') line += '"';
        line += c;
      }
      line += '"';
    } else {
      line += f;
    }
  }
  return line;
}

}  // namespace freewalk
