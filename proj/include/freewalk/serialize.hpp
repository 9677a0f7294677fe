#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "freewalk/green.hpp"
#include "freewalk/martin.hpp"
#include "freewalk/measures.hpp"
#include "freewalk/sets.hpp"
#include "freewalk/sqrt_power_sum.hpp"
#include "freewalk/stationary.hpp"

namespace freewalk {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"word": "p/q", ...} in shortlex order.
Json to_json(const FinMeasure& mu);
FinMeasure measure_from_json(const Json& j, int d);

// {"0": "p/q", "1": "p/q"}: coefficient of (2d-1)^(k/2) keyed by k.
Json to_json(const SqrtPowerSum& x);
SqrtPowerSum sqrt_power_sum_from_json(const Json& j, int d);

Json to_json(const WordSet& set);
Json to_json(const DefectReport& report);
Json to_json(const GrowthReport& report);
Json to_json(const InjectivityReport& report);
Json to_json(const GammaBoundsReport& report);

// Fixed-precision float rendering for the convenience columns.
std::string format_double(double x);

// One CSV line; fields containing separators or quotes are quoted.
std::string csv_row(const std::vector<std::string>& fields);

}  // namespace freewalk
