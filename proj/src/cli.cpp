#include "freewalk/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <random>

#include "freewalk/acceptance.hpp"
#include "freewalk/errors.hpp"
#include "freewalk/green.hpp"
#include "freewalk/martin.hpp"
#include "freewalk/serialize.hpp"
#include "freewalk/sets.hpp"
#include "freewalk/stationary.hpp"

namespace freewalk::cli {
namespace {

namespace fs = std::filesystem;

struct Options {
  int d = 2;
  std::string out_dir = "freewalk-out";
  std::string model = "closed";
  int N = GreenModel::kDefaultTruncation;
  std::string set = "all";
  int radius = 2;
  std::string A = "explicit:e";
  int A_radius = 8;
  std::vector<std::string> E;
  int E_radius = 8;
  std::string k = "e";
  int n = 2;
  int rmax = 6;
  std::string ray = "e|a";
  bool expected = false;
  int length = 2;
  int count = 10000;
  std::optional<std::uint64_t> seed;
  std::uint64_t budget = kDefaultEnumerationBudget;
};

class Artifacts {
 public:
  Artifacts(const std::string& dir, std::ostream& log) : dir_(dir), log_(log) { fs::create_directories(dir_); }

  void write(const std::string& name, const std::string& content) {
    const fs::path path = dir_ / name;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + path.string());
    f << content;
    log_ << "wrote " << path.string() << "\n";
  }

  void write_json(const std::string& name, const Json& j) { write(name, j.dump(2) + "\n"); }

 private:
  fs::path dir_;
  std::ostream& log_;
};

Json envelope(const std::string& command, const Options& o) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["d"] = o.d;
  return j;
}

GreenModel make_model(const Options& o) {
  if (o.model == "closed") return GreenModel::closed_form(o.d);
  if (o.model == "truncated") return GreenModel::truncated(uniform_generator_measure(o.d), o.N);
  throw ParseError("--model must be 'closed' or 'truncated', got '" + o.model + "'");
}

std::string exact_cell(const SqrtPowerSum& x) { return to_json(x).dump(); }

int cmd_green(const Options& o, Artifacts& art) {
  const GreenModel model = make_model(o);
  const WordSet points = materialize(parse_subset(o.set, o.d), o.radius, o.budget);
  Json j = envelope("green", o);
  j["model"] = model.describe();
  j["set"] = o.set;
  j["radius"] = o.radius;
  Json pts = Json::array();
  for (const auto& g : points) {
    const Rational v = model.at(g);
    pts.push_back({{"word", to_string(g)}, {"value", to_string(v)}, {"value_float", to_double(v)}});
  }
  j["points"] = pts;
  art.write_json("green.json", j);
  return kExitOk;
}

int cmd_translate_search(const Options& o, Artifacts& art) {
  const GreenModel model = make_model(o);
  const WordSet A = materialize(parse_subset(o.A, o.d), o.A_radius, o.budget);
  std::string csv = csv_row({"r", "k", "value", "value_float"}) + "\n";
  for (const auto& step : find_small_translate(model, A, o.rmax))
    csv += csv_row({std::to_string(step.radius), to_string(step.k), to_string(step.value),
                    format_double(to_double(step.value))}) +
           "\n";
  art.write("translate_search.csv", csv);
  return kExitOk;
}

std::vector<WordSet> test_sets(const Options& o) {
  std::vector<WordSet> sets;
  for (const auto& spec : o.E) {
    WordSet E = materialize(parse_subset(spec, o.d), o.E_radius, o.budget);
    if (!E.empty()) sets.push_back(std::move(E));
  }
  return sets;
}

int emit_defects(const std::string& kind, const Options& o, Artifacts& art, const std::vector<DefectReport>& reports,
                 Json header, bool truncated) {
  Json arr = Json::array();
  std::string csv = csv_row({"E", "lhs", "rhs", "exact_match", "lhs_float"}) + "\n";
  bool failed = false;
  for (const auto& r : reports) {
    arr.push_back(to_json(r));
    std::string e;
    for (const auto& g : r.E) e += (e.empty() ? "" : " ") + to_string(g);
    csv += csv_row({e, to_string(r.lhs), to_string(r.rhs), r.exact_match ? "true" : "false",
                    format_double(to_double(r.lhs))}) +
           "\n";
    if (truncated)
      failed = failed || !r.residual_explained;
    else
      failed = failed || !r.exact_match || !r.within_bound;
  }
  header["reports"] = arr;
  art.write_json("defect_" + kind + ".json", header);
  art.write("defect_" + kind + ".csv", csv);
  if (failed) {
    for (const auto& r : reports)
      if (!r.exact_match || !r.within_bound || !r.residual_explained) {
        art.write_json("defect_" + kind + "_failure.json", to_json(r));
        break;
      }
    return kExitCheckFailed;
  }
  (void)o;
  return kExitOk;
}

int cmd_defect_mk(const Options& o, Artifacts& art) {
  const WordSet A = materialize(parse_subset(o.A, o.d), o.A_radius, o.budget);
  const MKAverage M(uniform_generator_measure(o.d), A, o.n);
  std::vector<DefectReport> reports;
  for (const auto& E : test_sets(o)) reports.push_back(mk_defect_identity(M, E));
  Json j = envelope("defect mk", o);
  j["A"] = o.A;
  j["n"] = o.n;
  j["denominator"] = to_string(M.denominator());
  return emit_defects("mk", o, art, reports, j, false);
}

int cmd_defect_green(const Options& o, Artifacts& art) {
  const GreenModel model = make_model(o);
  const WordSet A = materialize(parse_subset(o.A, o.d), o.A_radius, o.budget);
  const GreenTranslateMeasure M(model, parse_word(o.k, o.d), A);
  std::vector<DefectReport> reports;
  for (const auto& E : test_sets(o)) reports.push_back(gt_defect_identity(M, E));
  Json j = envelope("defect green", o);
  j["model"] = model.describe();
  j["A"] = o.A;
  j["k"] = o.k;
  j["normaliser"] = to_string(M.normaliser());
  return emit_defects("green", o, art, reports, j, model.kind() == GreenModel::Kind::TruncatedSeries);
}

int cmd_kernel(const Options& o, Artifacts& art) {
  const Ray w = parse_ray(o.ray, o.d);
  const WordSet window = materialize(parse_subset(o.set, o.d), o.radius, o.budget);
  std::string csv = csv_row({"word", "exponent", "value", "value_float"}) + "\n";
  for (const auto& g : window) {
    const auto e = kernel_exponent(w, g).exponent;
    const Rational v = martin_kernel(o.d, w, g);
    csv += csv_row({to_string(g), std::to_string(e), to_string(v), format_double(to_double(v))}) + "\n";
  }
  const Rational defect = harmonic_check_kernel(o.d, w, window);
  Json j = envelope("kernel", o);
  j["ray"] = to_string(w);
  j["set"] = o.set;
  j["radius"] = o.radius;
  j["harmonicity_defect"] = to_string(defect);
  art.write("kernel.csv", csv);
  art.write_json("kernel.json", j);
  return defect == 0 ? kExitOk : kExitCheckFailed;
}

int cmd_lightness(const Options& o, Artifacts& art) {
  const SubsetSpec A = parse_subset(o.set, o.d);
  Json j = envelope("lightness", o);
  j["set"] = o.set;
  j["rmax"] = o.rmax;
  std::string csv = csv_row({"R", "sum", "sum_float"}) + "\n";
  Json rows = Json::array();
  if (o.expected) {
    const auto table = expected_lightness_sum(A, o.rmax, o.budget);
    for (const auto& row : table.rows) {
      csv += csv_row({std::to_string(row.radius), exact_cell(row.sum), format_double(row.sum.to_double())}) + "\n";
      rows.push_back({{"R", row.radius}, {"sum", to_json(row.sum)}, {"sum_float", row.sum.to_double()}});
    }
    j["quantity"] = "expected_sqrt_kernel";
    j["trend"] = to_string(table.trend);
  } else {
    const Ray w = parse_ray(o.ray, o.d);
    const auto table = lightness_partial_sums(w, A, o.rmax, o.budget);
    for (const auto& row : table.rows) {
      csv += csv_row({std::to_string(row.radius), to_string(row.sum), format_double(to_double(row.sum))}) + "\n";
      rows.push_back({{"R", row.radius}, {"sum", to_string(row.sum)}, {"sum_float", to_double(row.sum)}});
    }
    j["quantity"] = "kernel";
    j["ray"] = to_string(w);
    j["trend"] = to_string(table.trend);
  }
  j["trend_rule"] = "bounded-looking iff each of the last 3 increments <= 0.8 x the previous (heuristic)";
  j["rows"] = rows;
  art.write(o.expected ? "expected_lightness.csv" : "lightness.csv", csv);
  art.write_json(o.expected ? "expected_lightness.json" : "lightness.json", j);
  return kExitOk;
}

int cmd_zeta_sample(const Options& o, Artifacts& art) {
  if (!o.seed) throw ParseError("zeta-sample requires --seed");
  if (o.count < 1) throw ParseError("--count must be >= 1");
  std::string csv = csv_row({"index", "prefix"}) + "\n";
  std::map<Word, std::uint64_t> freq;
  const int depth = std::min(o.length, 2);
  std::mt19937_64 seeder(*o.seed);
  for (int i = 0; i < o.count; ++i) {
    const Word w = sample_ray(o.d, o.length, seeder());
    csv += csv_row({std::to_string(i), to_string(w)}) + "\n";
    ++freq[Word::from_codes(w.codes().subspan(0, static_cast<std::size_t>(depth)))];
  }
  Json j = envelope("zeta-sample", o);
  j["length"] = o.length;
  j["count"] = o.count;
  j["seed"] = *o.seed;
  Json cyl = Json::array();
  for (const auto& c : sphere(o.d, depth)) {
    const auto observed = freq.count(c) ? freq.at(c) : 0;
    const Rational exact = hitting_cylinder(o.d, c);
    cyl.push_back({{"prefix", to_string(c)},
                   {"observed", observed},
                   {"empirical", static_cast<double>(observed) / o.count},
                   {"exact", to_string(exact)},
                   {"exact_float", to_double(exact)}});
  }
  j["cylinders"] = cyl;
  art.write("zeta_sample.csv", csv);
  art.write_json("zeta_sample.json", j);
  return kExitOk;
}

int cmd_growth(const Options& o, Artifacts& art) {
  const auto report = growth_rates(parse_subset(o.set, o.d), o.rmax, o.budget);
  Json j = envelope("growth", o);
  j["set"] = o.set;
  j["report"] = to_json(report);
  std::string csv = csv_row({"r", "count"}) + "\n";
  for (std::size_t i = 0; i < report.radii.size(); ++i)
    csv += csv_row({std::to_string(report.radii[i]), std::to_string(report.counts[i])}) + "\n";
  art.write_json("growth.json", j);
  art.write("growth.csv", csv);
  return kExitOk;
}

int cmd_injectivity(const Options& o, Artifacts& art) {
  const auto report = psi_injectivity_test(o.n, o.radius, o.d);
  Json j = envelope("injectivity", o);
  j["report"] = to_json(report);
  Json counts = Json::array();
  for (int r = 1; r <= o.radius; ++r) {
    const auto c = aaa_sphere_count(o.d, r, o.budget);
    counts.push_back({{"r", r},
                      {"count", c.count},
                      {"lower_bound", c.lower_bound ? Json(*c.lower_bound) : Json(nullptr)},
                      {"bound_holds", c.bound_holds}});
  }
  j["aaa_sphere_counts"] = counts;
  art.write_json("injectivity.json", j);
  return report.passed ? kExitOk : kExitCheckFailed;
}

int cmd_sphere_sum(const Options& o, Artifacts& art) {
  const Ray w = parse_ray(o.ray, o.d);
  std::string csv = csv_row({"r", "sum", "sum_float", "average_float", "matches_expected_kernel"}) + "\n";
  bool ok = true;
  for (int r = 0; r <= o.rmax; ++r) {
    const SqrtPowerSum sum = sphere_sqrt_sum(o.d, r, w, o.budget);
    const Rational size(Integer(sphere_size(o.d, r)));
    // Spherical symmetry: the sphere sum equals |S_r| times the zeta-average at any g in S_r.
    const Word g = w.truncate(static_cast<std::size_t>(r));
    const bool match = expected_sqrt_kernel(o.d, g) * size == sum;
    ok = ok && match;
    csv += csv_row({std::to_string(r), exact_cell(sum), format_double(sum.to_double()),
                    format_double(sum.to_double() / size.get_d()), match ? "true" : "false"}) +
           "\n";
  }
  art.write("sphere_sum.csv", csv);
  return ok ? kExitOk : kExitCheckFailed;
}

int cmd_verify_all(Artifacts& art, std::ostream& out) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = "verify-all";
  Json arr = Json::array();
  std::string csv = csv_row({"criterion", "name", "passed", "detail"}) + "\n";
  bool all = true;
  for (const auto& c : acceptance::criteria()) {
    const auto r = acceptance::run_one(c);
    all = all && r.passed;
    out << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " -- " << r.detail << " ("
        << format_double(r.seconds) << " s)\n";
    arr.push_back({{"criterion", r.id}, {"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
    csv += csv_row({std::to_string(r.id), r.name, r.passed ? "true" : "false", r.detail}) + "\n";
  }
  j["criteria"] = arr;
  j["all_passed"] = all;
  art.write_json("acceptance.json", j);
  art.write("acceptance.csv", csv);
  return all ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact random walks, Green functions and stationary measures on free groups", "freewalk"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--d", o.d, "rank of the free group")->check(CLI::Range(2, kMaxRank));
    sub->add_option("--out", o.out_dir, "output directory for artifacts");
    sub->add_option("--budget", o.budget, "maximum words per enumeration");
  };
  auto add_model = [&](CLI::App* sub) {
    sub->add_option("--model", o.model, "closed | truncated");
    sub->add_option("--N", o.N, "truncation depth for --model truncated")->check(CLI::NonNegativeNumber);
  };

  auto* green = app.add_subcommand("green", "Green function values on a set");
  add_common(green);
  add_model(green);
  green->add_option("--set", o.set, "subset spec of evaluation points");
  green->add_option("--radius", o.radius, "materialisation radius")->check(CLI::NonNegativeNumber);

  auto* search = app.add_subcommand("translate-search", "greedy search for translates with small G^k(A)");
  add_common(search);
  add_model(search);
  search->add_option("--A", o.A, "subset spec for A");
  search->add_option("--A-radius", o.A_radius, "materialisation radius of A")->check(CLI::NonNegativeNumber);
  search->add_option("--rmax", o.rmax, "largest |k|")->check(CLI::NonNegativeNumber);

  auto* defect = app.add_subcommand("defect", "exact stationarity-defect identities");
  defect->require_subcommand(1);
  auto* defect_mk = defect->add_subcommand("mk", "averaged measures M_n");
  auto* defect_green = defect->add_subcommand("green", "Green-translate measures M_k");
  for (auto* sub : {defect_mk, defect_green}) {
    add_common(sub);
    sub->add_option("--A", o.A, "subset spec for A");
    sub->add_option("--A-radius", o.A_radius, "materialisation radius of A")->check(CLI::NonNegativeNumber);
    sub->add_option("--E", o.E, "subset spec of a test set E (repeatable)")->required();
    sub->add_option("--E-radius", o.E_radius, "materialisation radius of E")->check(CLI::NonNegativeNumber);
  }
  defect_mk->add_option("--n", o.n, "averaging horizon")->check(CLI::NonNegativeNumber);
  add_model(defect_green);
  defect_green->add_option("--k", o.k, "translate k");

  auto* kernel = app.add_subcommand("kernel", "Martin kernel values and harmonicity check");
  add_common(kernel);
  kernel->add_option("--ray", o.ray, "boundary ray prefix|period");
  kernel->add_option("--set", o.set, "subset spec of evaluation points");
  kernel->add_option("--radius", o.radius, "materialisation radius")->check(CLI::NonNegativeNumber);

  auto* lightness = app.add_subcommand("lightness", "partial sums of f_w (or E[sqrt f_w]) over A ∩ B_R");
  add_common(lightness);
  lightness->add_option("--ray", o.ray, "boundary ray prefix|period");
  lightness->add_option("--set", o.set, "subset spec for A");
  lightness->add_option("--rmax", o.rmax, "largest radius")->check(CLI::NonNegativeNumber);
  lightness->add_flag("--expected", o.expected, "sum E_zeta[sqrt f_w] instead of f_w");

  auto* zeta = app.add_subcommand("zeta-sample", "sample ray prefixes from the hitting measure");
  add_common(zeta);
  zeta->add_option("--length", o.length, "prefix length")->check(CLI::PositiveNumber);
  zeta->add_option("--count", o.count, "number of samples")->check(CLI::PositiveNumber);
  zeta->add_option("--seed", o.seed, "random seed")->required();

  auto* growth = app.add_subcommand("growth", "exponential growth estimates of a subset");
  add_common(growth);
  growth->add_option("--set", o.set, "subset spec");
  growth->add_option("--rmax", o.rmax, "largest radius (>= 4)");

  auto* injectivity = app.add_subcommand("injectivity", "injectivity of the product map on A_1 x ... x A_n");
  add_common(injectivity);
  injectivity->add_option("--n", o.n, "number of factors")->check(CLI::Range(1, 3));
  injectivity->add_option("--radius", o.radius, "materialisation radius")->check(CLI::NonNegativeNumber);

  auto* sphere_sum = app.add_subcommand("sphere-sum", "exact sums of sqrt f_w over spheres");
  add_common(sphere_sum);
  sphere_sum->add_option("--ray", o.ray, "boundary ray prefix|period");
  sphere_sum->add_option("--rmax", o.rmax, "largest radius")->check(CLI::NonNegativeNumber);

  auto* verify = app.add_subcommand("verify-all", "run every acceptance check");
  verify->add_option("--out", o.out_dir, "output directory for artifacts");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    Artifacts art(o.out_dir, out);
    if (*green) return cmd_green(o, art);
    if (*search) return cmd_translate_search(o, art);
    if (*defect_mk) return cmd_defect_mk(o, art);
    if (*defect_green) return cmd_defect_green(o, art);
    if (*kernel) return cmd_kernel(o, art);
    if (*lightness) return cmd_lightness(o, art);
    if (*zeta) return cmd_zeta_sample(o, art);
    if (*growth) return cmd_growth(o, art);
    if (*injectivity) return cmd_injectivity(o, art);
    if (*sphere_sum) return cmd_sphere_sum(o, art);
    if (*verify) return cmd_verify_all(art, out);
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kExitBudget;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DegenerateError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const EvaluationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace freewalk::cli
