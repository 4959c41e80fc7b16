#include "condagg/cli.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "condagg/equivalence.hpp"
#include "condagg/io.hpp"
#include "condagg/render.hpp"

namespace condagg::cli {

namespace {

using nlohmann::json;

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
      return 2;
    case ErrorCode::MissingEmptySet:
    case ErrorCode::MissingFullSet:
    case ErrorCode::OutOfRangeIndex:
    case ErrorCode::NonZeroEmptySet:
    case ErrorCode::MonotonicityViolation:
    case ErrorCode::NegativeValue:
    case ErrorCode::ZeroFullSet:
    case ErrorCode::GapOrOverlap:
    case ErrorCode::NegativeComponent:
    case ErrorCode::ZeroDivision:
    case ErrorCode::BadLevels:
    case ErrorCode::InconsistentTargets:
      return 3;
    case ErrorCode::DivergentIntegral:
    case ErrorCode::SetNotInCollection:
    case ErrorCode::DomainMismatch:
    case ErrorCode::PreconditionViolated:
    case ErrorCode::MeasureNotOnPowerset:
    case ErrorCode::IndexOutOfRange:
      return 4;
  }
  return 4;
}

// exact value, with a decimal reading appended when it differs
std::string format_value(const Rational& r, int digits) {
  std::string fraction = to_fraction_string(r);
  std::string decimal = to_decimal_string(r, digits);
  if (fraction == decimal) return fraction;
  return fraction + " (" + decimal + ")";
}

std::string format_bound(const ExtRational& e, int digits) {
  return e.infinite ? "inf" : format_value(e.finite(), digits);
}

void print_step(const StepFunction& f, int digits, std::ostream& out) {
  for (const Piece& piece : f.pieces()) {
    out << "[" << to_fraction_string(piece.lo) << ", " << to_fraction_string(piece.hi) << ") -> "
        << format_value(piece.value, digits) << "\n";
  }
}

json step_to_json(const StepFunction& f, int digits) {
  json pieces = json::array();
  for (const Piece& piece : f.pieces()) {
    pieces.push_back(json{{"lo", to_fraction_string(piece.lo)},
                          {"hi", to_fraction_string(piece.hi)},
                          {"value", to_fraction_string(piece.value)},
                          {"value_decimal", to_decimal_string(piece.value, digits)}});
  }
  return pieces;
}

struct GsfOptions {
  std::string path;
  std::string route = "agg";
  std::string at;
  int digits = 6;
  bool as_json = false;
};

StepFunction compute_route(const Instance& instance, const std::string& route) {
  if (route == "def") return survival_definition(instance);
  Arrangement arr = build_arrangement(instance);
  if (route == "agg") return survival_agg_scan(arr);
  if (route == "measure") return survival_measure_scan(arr);
  PermutationTables pt = build_permutations(arr);
  if (route == "i") return survival_via_maps(arr, pt, MapRoute::I);
  if (route == "j") return survival_via_maps(arr, pt, MapRoute::J);
  if (route == "compact") {
    PlateauBounds pb = plateau_bounds(arr, pt);
    return survival_compact(arr, pt, pb, CompactRoute::Phi);
  }
  throw Error(ErrorCode::ParseError, "unknown route '" + route + "'");
}

int cmd_gsf(const GsfOptions& opt, std::ostream& out) {
  io::InstanceFile file = io::load_instance(opt.path);
  StepFunction f = compute_route(file.instance, opt.route);
  if (!opt.at.empty()) {
    Rational alpha = parse_rational(opt.at);
    const Rational& value = f.value_at(alpha);
    if (opt.as_json) {
      out << json{{"route", opt.route},
                  {"at", to_fraction_string(alpha)},
                  {"value", to_fraction_string(value)},
                  {"value_decimal", to_decimal_string(value, opt.digits)}}
                 .dump(2)
          << "\n";
    } else {
      out << format_value(value, opt.digits) << "\n";
    }
    return 0;
  }
  if (opt.as_json) {
    out << json{{"route", opt.route}, {"pieces", step_to_json(f, opt.digits)}}.dump(2) << "\n";
  } else {
    print_step(f, opt.digits, out);
  }
  return 0;
}

struct ChoquetOptions {
  std::string path;
  std::string route = "integrate";
  bool all_routes = false;
  int digits = 6;
  bool as_json = false;
};

ChoquetRoute parse_choquet_route(const std::string& name) {
  static const std::map<std::string, ChoquetRoute> routes = {
      {"integrate", ChoquetRoute::Integrate},
      {"i", ChoquetRoute::FormulaI},
      {"ii", ChoquetRoute::FormulaII},
      {"iii", ChoquetRoute::FormulaIII},
      {"iv", ChoquetRoute::FormulaIV},
  };
  auto it = routes.find(name);
  if (it == routes.end()) throw Error(ErrorCode::ParseError, "unknown route '" + name + "'");
  return it->second;
}

int cmd_choquet(const ChoquetOptions& opt, std::ostream& out) {
  io::InstanceFile file = io::load_instance(opt.path);
  if (opt.all_routes) {
    static const char* names[] = {"integrate", "i", "ii", "iii", "iv"};
    json values = json::object();
    bool agree = true;
    std::optional<Rational> first;
    std::ostringstream table;
    for (const char* name : names) {
      ChoquetResult result = choquet_generalized(file.instance, parse_choquet_route(name));
      table << name << ": " << format_value(result.value, opt.digits) << "\n";
      values[name] = to_fraction_string(result.value);
      if (!first) {
        first = result.value;
      } else if (*first != result.value) {
        agree = false;
      }
    }
    if (opt.as_json) {
      out << json{{"values", values}, {"agreement", agree}}.dump(2) << "\n";
    } else {
      out << table.str() << "agreement: " << (agree ? "ok" : "MISMATCH") << "\n";
    }
    return agree ? 0 : 4;
  }
  ChoquetResult result = choquet_generalized(file.instance, parse_choquet_route(opt.route));
  if (opt.as_json) {
    out << json{{"route", opt.route},
                {"value", to_fraction_string(result.value)},
                {"value_decimal", to_decimal_string(result.value, opt.digits)},
                {"survival", step_to_json(result.survival, opt.digits)}}
               .dump(2)
        << "\n";
  } else {
    out << format_value(result.value, opt.digits) << "\n";
  }
  return 0;
}

struct RankOptions {
  std::string path;
  std::string method = "both";
  int digits = 6;
  bool as_json = false;
};

std::string preference_line(const std::vector<RankedAlternative>& ranked) {
  std::string line;
  for (std::size_t i = 0; i < ranked.size(); ++i) {
    if (i > 0) line += ranked[i].rank == ranked[i - 1].rank ? " = " : " > ";
    line += ranked[i].name;
  }
  return line;
}

int cmd_rank(const RankOptions& opt, std::ostream& out) {
  io::RankBundle bundle = io::load_rank_bundle(opt.path);
  std::vector<Alternative> alternatives =
      bundle.normalized ? bundle.alternatives : normalize_criteria(bundle.criteria, bundle.alternatives);

  json report = json::object();
  auto run_method = [&](RankMethod method, const std::string& name) {
    std::vector<RankedAlternative> ranked = rank_alternatives(alternatives, bundle.measure, method);
    if (opt.as_json) {
      json rows = json::array();
      for (const RankedAlternative& r : ranked) {
        rows.push_back(json{{"name", r.name},
                            {"score", to_fraction_string(r.score)},
                            {"score_decimal", to_decimal_string(r.score, opt.digits)},
                            {"rank", r.rank}});
      }
      report[name] = json{{"ranking", rows}, {"preference", preference_line(ranked)}};
    } else {
      out << name << ":\n";
      for (const RankedAlternative& r : ranked) {
        out << "  " << r.rank << ". " << r.name << " = " << format_value(r.score, opt.digits) << "\n";
      }
      out << "  preference: " << preference_line(ranked) << "\n";
    }
  };

  if (opt.method == "standard" || opt.method == "both") run_method(RankMethod::Standard, "standard");
  if (opt.method == "generalized" || opt.method == "both") {
    run_method(RankMethod::Generalized, "generalized");
  }
  if (opt.method != "standard" && opt.method != "generalized" && opt.method != "both") {
    throw Error(ErrorCode::ParseError, "unknown method '" + opt.method + "'");
  }
  if (opt.as_json) out << report.dump(2) << "\n";
  return 0;
}

struct KnapsackOptions {
  std::string path;
  std::string budget;
  bool all = false;
  int digits = 6;
  bool as_json = false;
};

int cmd_knapsack(const KnapsackOptions& opt, std::ostream& out) {
  io::InstanceFile file = io::load_instance(opt.path);
  Rational budget = parse_rational(opt.budget);
  KnapsackResult result = knapsack_select(file.instance.x, file.instance.measure, budget,
                                          file.instance.fca.collection());
  if (opt.as_json) {
    json minimizers = json::array();
    for (IndexSet e : result.minimizers) minimizers.push_back(e.to_string(file.labels));
    out << json{{"budget", to_fraction_string(budget)},
                {"unpacked_price", to_fraction_string(result.unpacked_price)},
                {"chosen", result.chosen.to_string(file.labels)},
                {"minimizers", minimizers}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "budget: " << format_value(budget, opt.digits) << "\n";
  out << "unpacked price: " << format_value(result.unpacked_price, opt.digits) << "\n";
  out << "chosen: " << result.chosen.to_string(file.labels) << "\n";
  if (opt.all) {
    out << "minimizers:";
    for (IndexSet e : result.minimizers) out << " " << e.to_string(file.labels);
    out << "\n";
  }
  return 0;
}

struct EquivOptions {
  std::string left;
  std::string right;
  int digits = 6;
  bool as_json = false;
};

int cmd_equiv(const EquivOptions& opt, std::ostream& out) {
  io::InstanceFile a = io::load_instance(opt.left);
  io::InstanceFile b = io::load_instance(opt.right);
  bool direct = integral_equivalent(a.instance, b.instance);
  EquivalenceReport report = equivalence_condition(a.instance, b.instance);
  if (direct != report.equivalent) {
    throw Error(ErrorCode::PreconditionViolated, "equivalence routes disagree");
  }
  if (opt.as_json) {
    json j{{"equivalent", direct}};
    if (direct) {
      j["survival"] = step_to_json(survival_agg_scan(build_arrangement(a.instance)), opt.digits);
    } else if (report.witness) {
      j["witness"] = json{{"side", report.witness_side == 1 ? "left" : "right"},
                          {"value", to_fraction_string(report.witness->value)},
                          {"lo", to_fraction_string(report.witness->interval.lo)},
                          {"hi", to_fraction_string(report.witness->interval.hi)}};
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "equivalent: " << (direct ? "true" : "false") << "\n";
  if (direct) {
    out << "common survival function:\n";
    print_step(survival_agg_scan(build_arrangement(a.instance)), opt.digits, out);
  } else if (report.witness) {
    out << "unmatched level on the " << (report.witness_side == 1 ? "left" : "right") << ": value "
        << format_value(report.witness->value, opt.digits) << " on ["
        << format_value(report.witness->interval.lo, opt.digits) << ", "
        << format_bound(report.witness->interval.hi, opt.digits) << ")\n";
  }
  return 0;
}

struct ShapleyOptions {
  std::string path;
  int digits = 6;
  bool as_json = false;
};

int cmd_shapley(const ShapleyOptions& opt, std::ostream& out) {
  MonotoneMeasure mu = io::load_powerset_measure(opt.path);
  std::vector<Rational> phi = shapley_vector(mu);
  Rational sum = 0;
  for (const Rational& v : phi) sum += v;
  if (opt.as_json) {
    json values = json::array();
    for (const Rational& v : phi) values.push_back(to_fraction_string(v));
    out << json{{"shapley", values}, {"sum", to_fraction_string(sum)}}.dump(2) << "\n";
    return 0;
  }
  for (std::size_t i = 0; i < phi.size(); ++i) {
    out << "criterion " << (i + 1) << ": " << format_value(phi[i], opt.digits) << "\n";
  }
  out << "sum: " << format_value(sum, opt.digits) << "\n";
  return 0;
}

struct CalibrateOptions {
  std::vector<std::string> targets;
  std::vector<std::string> singletons;
  std::vector<std::string> verify;
  int digits = 6;
  bool as_json = false;
};

std::vector<Rational> parse_values(const std::vector<std::string>& texts) {
  std::vector<Rational> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse_rational(t));
  return out;
}

int cmd_calibrate(const CalibrateOptions& opt, std::ostream& out) {
  std::vector<Rational> targets = parse_values(opt.targets);
  std::vector<Rational> singletons = opt.singletons.empty() ? targets : parse_values(opt.singletons);

  if (!opt.verify.empty()) {
    CalibrationCheck check = verify_calibration(targets, singletons, parse_values(opt.verify));
    if (opt.as_json) {
      json residuals = json::array();
      for (const Rational& r : check.residuals) residuals.push_back(to_fraction_string(r));
      out << json{{"residuals", residuals},
                  {"max_abs_residual", to_fraction_string(check.max_abs_residual)},
                  {"monotone", check.monotone}}
                 .dump(2)
          << "\n";
      return 0;
    }
    out << "residuals:";
    for (const Rational& r : check.residuals) out << " " << format_value(r, opt.digits);
    out << "\nmax |residual|: " << format_value(check.max_abs_residual, opt.digits) << "\n";
    out << "monotone: " << (check.monotone ? "yes" : "no") << "\n";
    return 0;
  }

  CalibrationResult result = calibrate_measure(targets, singletons);
  static const char* pair_names[] = {"{1,2}", "{1,3}", "{2,3}"};
  if (opt.as_json) {
    json pairs = json::object();
    for (int p = 0; p < 3; ++p) pairs[pair_names[p]] = to_fraction_string(result.pair_values[p]);
    json j{{"pair_values", pairs}, {"monotone", result.monotone}};
    if (result.monotone_shift_range) {
      j["monotone_shift_range"] = json::array({to_fraction_string(result.monotone_shift_range->first),
                                               to_fraction_string(result.monotone_shift_range->second)});
    }
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "normalized targets:";
  for (const Rational& t : result.normalized_targets) out << " " << format_value(t, opt.digits);
  out << "\nminimum-norm pair values:\n";
  for (int p = 0; p < 3; ++p) {
    out << "  mu(" << pair_names[p] << ") = " << format_value(result.pair_values[p], opt.digits) << "\n";
  }
  out << "solution family: add any t * (1,1,1)\n";
  out << "monotone: " << (result.monotone ? "yes" : "no");
  if (!result.monotone && result.violation) {
    out << " (" << result.violation->first.to_string() << " ⊆ " << result.violation->second.to_string()
        << " violated)";
  }
  out << "\n";
  if (result.monotone_shift_range) {
    out << "monotone shifts: t in [" << format_value(result.monotone_shift_range->first, opt.digits)
        << ", " << format_value(result.monotone_shift_range->second, opt.digits) << "]\n";
  } else {
    out << "monotone shifts: none\n";
  }
  return 0;
}

struct CheckOptions {
  std::string path;
  bool as_json = false;
};

int cmd_check(const CheckOptions& opt, std::ostream& out) {
  io::InstanceFile file = io::load_instance(opt.path);  // throws on any defect
  AxiomReport axioms = check_axioms(file.instance.fca);
  if (!axioms.passed) {
    std::string detail = "axiom " + std::to_string(axioms.counterexample->condition) + " fails on " +
                         axioms.counterexample->set.to_string();
    throw Error(ErrorCode::PreconditionViolated, detail);
  }
  if (opt.as_json) {
    out << json{{"ok", true},
                {"kappa", file.instance.fca.collection().size()},
                {"axiom_checks", axioms.checks}}
               .dump(2)
        << "\n";
    return 0;
  }
  out << "ok: kappa = " << file.instance.fca.collection().size() << ", measure monotone, "
      << axioms.checks << " axiom checks passed\n";
  return 0;
}

struct PlotOptions {
  std::string path;
  std::string what = "gsf";
  std::string format = "svg";
  std::string out_path;
  std::string route = "agg";
};

int cmd_plot(const PlotOptions& opt, std::ostream& out) {
  io::InstanceFile file = io::load_instance(opt.path);
  std::string content;
  Arrangement arr = build_arrangement(file.instance);
  PermutationTables pt = build_permutations(arr);

  if (opt.what == "gsf") {
    StepFunction f = compute_route(file.instance, opt.route);
    content = opt.format == "svg" ? render::svg_step(f, "alpha", "value") : render::ascii_step(f);
  } else if (opt.what == "indexed") {
    StepFunction f = indexed_survival(pt);
    content = opt.format == "svg" ? render::svg_step(f, "index", "index") : render::ascii_step(f);
  } else if (opt.what == "perm-diagram") {
    content = opt.format == "svg" ? render::svg_permutation(pt) : render::ascii_permutation(pt);
  } else {
    throw Error(ErrorCode::ParseError, "unknown plot kind '" + opt.what + "'");
  }
  if (opt.format != "svg" && opt.format != "ascii") {
    throw Error(ErrorCode::ParseError, "unknown format '" + opt.format + "'");
  }

  if (opt.out_path.empty()) {
    out << content;
  } else {
    io::write_file(opt.out_path, content);
    out << "wrote " << opt.out_path << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"survival functions and Choquet integrals over conditional aggregation families"};
  app.name("condagg");
  app.require_subcommand(1);

  GsfOptions gsf_opt;
  CLI::App* gsf = app.add_subcommand("gsf", "survival function of an instance");
  gsf->add_option("instance", gsf_opt.path, "instance JSON file")->required();
  gsf->add_option("--route", gsf_opt.route, "def|agg|measure|i|j|compact");
  gsf->add_option("--at", gsf_opt.at, "evaluate at a single threshold");
  gsf->add_option("--digits", gsf_opt.digits, "decimal digits");
  gsf->add_flag("--json", gsf_opt.as_json, "JSON output");

  ChoquetOptions choquet_opt;
  CLI::App* choquet = app.add_subcommand("choquet", "integral of the survival function");
  choquet->add_option("instance", choquet_opt.path, "instance JSON file")->required();
  choquet->add_option("--route", choquet_opt.route, "integrate|i|ii|iii|iv");
  choquet->add_flag("--all-routes", choquet_opt.all_routes, "evaluate and compare every route");
  choquet->add_option("--digits", choquet_opt.digits, "decimal digits");
  choquet->add_flag("--json", choquet_opt.as_json, "JSON output");

  RankOptions rank_opt;
  CLI::App* rank = app.add_subcommand("rank", "score and order alternatives");
  rank->add_option("bundle", rank_opt.path, "bundle JSON file")->required();
  rank->add_option("--method", rank_opt.method, "standard|generalized|both");
  rank->add_option("--digits", rank_opt.digits, "decimal digits");
  rank->add_flag("--json", rank_opt.as_json, "JSON output");

  KnapsackOptions knapsack_opt;
  CLI::App* knapsack = app.add_subcommand("knapsack", "pick a combination within a volume budget");
  knapsack->add_option("instance", knapsack_opt.path, "instance JSON file")->required();
  knapsack->add_option("--budget", knapsack_opt.budget, "volume budget")->required();
  knapsack->add_flag("--all", knapsack_opt.all, "list every minimizer");
  knapsack->add_option("--digits", knapsack_opt.digits, "decimal digits");
  knapsack->add_flag("--json", knapsack_opt.as_json, "JSON output");

  EquivOptions equiv_opt;
  CLI::App* equiv = app.add_subcommand("equiv", "test two instances for integral equivalence");
  equiv->add_option("left", equiv_opt.left, "first instance JSON file")->required();
  equiv->add_option("right", equiv_opt.right, "second instance JSON file")->required();
  equiv->add_option("--digits", equiv_opt.digits, "decimal digits");
  equiv->add_flag("--json", equiv_opt.as_json, "JSON output");

  ShapleyOptions shapley_opt;
  CLI::App* shapley = app.add_subcommand("shapley", "Shapley values of a powerset measure");
  shapley->add_option("measure", shapley_opt.path, "measure JSON file")->required();
  shapley->add_option("--digits", shapley_opt.digits, "decimal digits");
  shapley->add_flag("--json", shapley_opt.as_json, "JSON output");

  CalibrateOptions calibrate_opt;
  CLI::App* calibrate = app.add_subcommand("calibrate", "three-criteria capacity from importance targets");
  calibrate->add_option("--targets", calibrate_opt.targets, "three importance targets")
      ->required()
      ->expected(3);
  calibrate->add_option("--singletons", calibrate_opt.singletons, "three singleton values")->expected(3);
  calibrate->add_option("--verify", calibrate_opt.verify, "three pair values to check")->expected(3);
  calibrate->add_option("--digits", calibrate_opt.digits, "decimal digits");
  calibrate->add_flag("--json", calibrate_opt.as_json, "JSON output");

  CheckOptions check_opt;
  CLI::App* check = app.add_subcommand("check", "validate an instance file");
  check->add_option("instance", check_opt.path, "instance JSON file")->required();
  check->add_flag("--json", check_opt.as_json, "JSON output");

  PlotOptions plot_opt;
  CLI::App* plot = app.add_subcommand("plot", "render a plot or diagram");
  plot->add_option("instance", plot_opt.path, "instance JSON file")->required();
  plot->add_option("--what", plot_opt.what, "gsf|indexed|perm-diagram");
  plot->add_option("--format", plot_opt.format, "svg|ascii");
  plot->add_option("--out", plot_opt.out_path, "output file (stdout when omitted)");
  plot->add_option("--route", plot_opt.route, "survival route for --what gsf");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("condagg");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (gsf->parsed()) return cmd_gsf(gsf_opt, out);
    if (choquet->parsed()) return cmd_choquet(choquet_opt, out);
    if (rank->parsed()) return cmd_rank(rank_opt, out);
    if (knapsack->parsed()) return cmd_knapsack(knapsack_opt, out);
    if (equiv->parsed()) return cmd_equiv(equiv_opt, out);
    if (shapley->parsed()) return cmd_shapley(shapley_opt, out);
    if (calibrate->parsed()) return cmd_calibrate(calibrate_opt, out);
    if (check->parsed()) return cmd_check(check_opt, out);
    if (plot->parsed()) return cmd_plot(plot_opt, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  }
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace condagg::cli
