// Command-line front end: reproduces the three-level comparison table,
// sweeps the qutrit/qubit experiment states, scans the oscillator trial
// bound, and evaluates the bound relations on a user-supplied problem file.
//
// Exit codes: 0 success, 1 I/O or parse error, 2 precondition violation,
// 3 reference-value mismatch in the self-verifying table command.

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "uncert/auxopt.hpp"
#include "uncert/bounds.hpp"
#include "uncert/hilbert.hpp"
#include "uncert/oscillator.hpp"
#include "uncert/problem_io.hpp"
#include "uncert/spin.hpp"

namespace {

using nlohmann::json;
using namespace uncert;

constexpr int kExitOk = 0;
constexpr int kExitIoError = 1;
constexpr int kExitPrecondition = 2;
constexpr int kExitMismatch = 3;

struct OutputOptions {
  std::string format = "csv"; // csv | json
  std::string out;            // empty = stdout
  std::optional<double> tolerance; // overrides the saturation tolerance
};

// All numbers pass through format_value/rounded_value so CSV and JSON carry
// the same 12-significant-digit values.
json num(double x) { return json(rounded_value(x)); }

void write_output(const OutputOptions& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out, std::ios::binary);
  if (!f) throw ProblemFileError("cannot open output file: " + opt.out);
  f << text;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct ReportFlags {
  bool valid;
  bool saturated;
};

ReportFlags flags_with_tolerance(const BoundReport& r,
                                 const OutputOptions& opt) {
  if (!opt.tolerance) return {r.valid, r.saturated};
  const double tol = *opt.tolerance;
  return {r.rhs <= r.lhs + tol, std::abs(r.lhs - r.rhs) <= tol};
}

std::string join_aux(const std::vector<std::string>& ids) {
  std::string s;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i) s += ';';
    s += ids[i];
  }
  return s;
}

json report_to_json(const BoundReport& r, const OutputOptions& opt) {
  const ReportFlags f = flags_with_tolerance(r, opt);
  json j;
  j["relation"] = relation_name(r.relation);
  j["lhs"] = num(r.lhs);
  j["rhs"] = num(r.rhs);
  j["aux"] = r.aux_ids;
  j["lambda"] = r.lambda ? json(num(*r.lambda)) : json(nullptr);
  j["sign"] = r.sign_choice ? json(*r.sign_choice) : json(nullptr);
  j["non_canonical"] = r.non_canonical;
  j["valid"] = f.valid;
  j["saturated"] = f.saturated;
  return j;
}

// ---------------------------------------------------------------------------
// table1

int cmd_table1(const OutputOptions& opt) {
  const std::vector<Table1Entry> rows = table1_scenario();
  const HeadlineBounds head = headline_bounds();
  constexpr double kMatchTol = 1e-12;

  bool all_match = true;
  auto matches = [&](const Table1Entry& e) {
    return std::abs(e.report.rhs - e.expected) <= kMatchTol;
  };
  for (const auto& e : rows) all_match = all_match && matches(e);
  all_match = all_match && matches(head.product) &&
              matches(head.sum_variances) && matches(head.sum_deviations) &&
              std::abs(head.combined_value - head.combined_expected) <= kMatchTol;

  if (opt.format == "json") {
    json doc;
    doc["rows"] = json::array();
    for (const auto& e : rows) {
      json row = report_to_json(e.report, opt);
      row["row"] = e.row;
      row["exact"] = e.exact;
      row["expected"] = num(e.expected);
      row["match"] = matches(e);
      doc["rows"].push_back(std::move(row));
    }
    json headline;
    for (const Table1Entry* e :
         {&head.product, &head.sum_variances, &head.sum_deviations}) {
      json row = report_to_json(e->report, opt);
      row["row"] = e->row;
      row["exact"] = e->exact;
      row["expected"] = num(e->expected);
      row["match"] = matches(*e);
      headline.push_back(std::move(row));
    }
    json combined;
    combined["row"] = "combined";
    combined["exact"] = "sqrt(59)/9";
    combined["value"] = num(head.combined_value);
    combined["expected"] = num(head.combined_expected);
    combined["match"] =
        std::abs(head.combined_value - head.combined_expected) <= kMatchTol;
    headline.push_back(std::move(combined));
    doc["headline"] = std::move(headline);
    doc["all_match"] = all_match;
    write_output(opt, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "row,exact,value,expected,lhs,valid,saturated,match\n";
    auto emit = [&](const Table1Entry& e) {
      const ReportFlags f = flags_with_tolerance(e.report, opt);
      os << csv_escape(e.row) << ',' << csv_escape(e.exact) << ','
         << format_value(e.report.rhs) << ',' << format_value(e.expected) << ','
         << format_value(e.report.lhs) << ',' << (f.valid ? "true" : "false")
         << ',' << (f.saturated ? "true" : "false") << ','
         << (matches(e) ? "true" : "false") << '\n';
    };
    for (const auto& e : rows) emit(e);
    emit(head.product);
    emit(head.sum_variances);
    emit(head.sum_deviations);
    os << "combined,sqrt(59)/9," << format_value(head.combined_value) << ','
       << format_value(head.combined_expected) << ",,,,"
       << (std::abs(head.combined_value - head.combined_expected) <= kMatchTol
               ? "true"
               : "false")
       << '\n';
    write_output(opt, os.str());
  }
  return all_match ? kExitOk : kExitMismatch;
}

// ---------------------------------------------------------------------------
// sweep

int cmd_sweep(const std::string& system, double start, double end, int steps,
              const OutputOptions& opt) {
  if (steps < 1) throw CLI::ValidationError("--steps must be >= 1");
  if (end < start) throw CLI::ValidationError("--end must be >= --start");
  const SweepSystem kind =
      system == "qutrit" ? SweepSystem::Qutrit : SweepSystem::Qubit;
  const std::vector<SweepRow> rows = sweep(kind, linspace(start, end, steps));

  if (opt.format == "json") {
    json doc;
    doc["system"] = system;
    doc["rows"] = json::array();
    for (const auto& r : rows) {
      json row;
      row["phi"] = num(r.phi);
      row["case"] = case_name(r.tag);
      row["mean_a"] = num(r.mean_a);
      row["mean_b"] = num(r.mean_b);
      row["var_a"] = num(r.var_a);
      row["var_b"] = num(r.var_b);
      row["var_sum"] = num(r.var_a + r.var_b);
      row["eq2_lhs"] = num(r.eq2_lhs);
      row["eq2_rhs"] = num(r.eq2_rhs);
      row["eq2_saturated"] = std::abs(r.eq2_lhs - r.eq2_rhs) <= kSaturationTol;
      row["eq4a_rhs"] = num(r.eq4a_rhs);
      row["eq4b_rhs"] = num(r.eq4b_rhs);
      row["bypass_delta"] =
          r.bypass_delta ? json(num(*r.bypass_delta)) : json(nullptr);
      doc["rows"].push_back(std::move(row));
    }
    write_output(opt, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "phi,case,mean_a,mean_b,var_a,var_b,var_sum,eq2_lhs,eq2_rhs,"
          "eq2_saturated,eq4a_rhs,eq4b_rhs,bypass_delta\n";
    for (const auto& r : rows) {
      os << format_value(r.phi) << ',' << case_name(r.tag) << ','
         << format_value(r.mean_a) << ',' << format_value(r.mean_b) << ','
         << format_value(r.var_a) << ',' << format_value(r.var_b) << ','
         << format_value(r.var_a + r.var_b) << ',' << format_value(r.eq2_lhs)
         << ',' << format_value(r.eq2_rhs) << ','
         << (std::abs(r.eq2_lhs - r.eq2_rhs) <= kSaturationTol ? "true" : "false")
         << ',' << format_value(r.eq4a_rhs) << ',' << format_value(r.eq4b_rhs)
         << ',' << (r.bypass_delta ? format_value(*r.bypass_delta) : "")
         << '\n';
    }
    write_output(opt, os.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// oscillator

int cmd_oscillator(double eta_min, double eta_max, int steps,
                   const OutputOptions& opt) {
  if (!(eta_min > 0.0) || !(eta_max > eta_min))
    throw CLI::ValidationError("need 0 < --eta-min < --eta-max");
  if (steps < 2) throw CLI::ValidationError("--steps must be >= 2");

  const GridPtr grid = Grid::make_default();
  const std::vector<double> etas = linspace(eta_min, eta_max, steps);
  const FunctionState dev_a = deviation_function(DeviationKind::XSquared, grid);
  const FunctionState dev_b = deviation_function(DeviationKind::Momentum, grid);

  std::vector<double> values;
  values.reserve(etas.size());
  for (double eta : etas) values.push_back(bound17_eta(eta, grid));

  const double split = split_aux_bound(grid);
  const double half_line = half_line_product_bound(dev_a, dev_b);
  const double exact_lhs = 0.5; // Delta(x^2) Delta(p) on the ground state

  if (opt.format == "json") {
    json doc;
    doc["scan"] = json::array();
    for (std::size_t i = 0; i < etas.size(); ++i) {
      json row;
      row["eta"] = num(etas[i]);
      row["bound17"] = num(values[i]);
      doc["scan"].push_back(std::move(row));
    }
    doc["split_aux"] = num(split);
    doc["half_line"] = num(half_line);
    doc["exact_lhs"] = num(exact_lhs);
    write_output(opt, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "kind,eta,value\n";
    for (std::size_t i = 0; i < etas.size(); ++i)
      os << "scan," << format_value(etas[i]) << ',' << format_value(values[i])
         << '\n';
    os << "split_aux,," << format_value(split) << '\n';
    os << "half_line,," << format_value(half_line) << '\n';
    os << "exact_lhs,," << format_value(exact_lhs) << '\n';
    write_output(opt, os.str());
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bounds

struct EvaluationError {
  std::string relation;
  std::string message;
};

int cmd_bounds(const std::string& path, const OutputOptions& opt) {
  const ProblemFile pf = load_problem_file(path);
  const Observable& a = pf.observables.at("A");
  const Observable& b = pf.observables.at("B");
  const double lambda = pf.lambda.value_or(1.0);

  const DeviationVector da = deviation_vector(a, pf.state);
  const DeviationVector db = deviation_vector(b, pf.state);
  const UncertaintyCase uc = classify_case(da, db);

  std::vector<Relation> relations = pf.relations;
  if (!pf.relations_given) {
    relations = {Relation::Eq2, Relation::Eq3, Relation::ChenFei};
    if (!pf.aux.empty()) {
      relations.insert(relations.end(), {Relation::Eq4a, Relation::Eq4b,
                                         Relation::Eq13, Relation::Eq14});
      if (pf.aux.size() >= 2)
        relations.insert(relations.end(), {Relation::Eq5a, Relation::Eq5b,
                                           Relation::Eq15, Relation::Eq16});
    }
  }

  auto aux_at = [&](std::size_t i) -> std::pair<std::string, QuantumState> {
    auto it = pf.aux.begin();
    std::advance(it, i);
    return {it->first, it->second};
  };

  std::vector<BoundReport> reports;
  std::vector<EvaluationError> errors;
  auto need_aux = [&](std::size_t n, const char* what) {
    if (pf.aux.size() < n)
      throw PreconditionViolated(std::string(what) + " needs " +
                                 std::to_string(n) + " aux state(s)");
  };

  for (Relation rel : relations) {
    try {
      switch (rel) {
        case Relation::Eq2:
          reports.push_back(robertson_product(a, b, pf.state));
          break;
        case Relation::Eq3:
          reports.push_back(robertson_decomposition(a, b, pf.state));
          break;
        case Relation::Eq4a:
          need_aux(1, "EQ4A");
          for (const auto& [id, aux] : pf.aux)
            reports.push_back(sum_bound_4a(a, b, pf.state, aux, id));
          break;
        case Relation::Eq4b:
          if (pf.aux.empty()) {
            reports.push_back(sum_bound_4b(a, b, pf.state));
          } else {
            for (const auto& [id, aux] : pf.aux)
              reports.push_back(sum_bound_4b(a, b, pf.state, aux, id));
          }
          break;
        case Relation::Eq5a: {
          need_aux(2, "EQ5A");
          const auto [id1, aux1] = aux_at(0);
          const auto [id2, aux2] = aux_at(1);
          reports.push_back(
              weighted_sum_5a(a, b, pf.state, aux1, aux2, lambda, id1, id2));
          break;
        }
        case Relation::Eq5b: {
          need_aux(2, "EQ5B");
          const auto [id1, aux1] = aux_at(0);
          const auto [id2, aux2] = aux_at(1);
          reports.push_back(
              weighted_sum_5b(a, b, pf.state, aux1, aux2, lambda, id1, id2));
          break;
        }
        case Relation::Eq13:
          need_aux(1, "EQ13");
          for (const auto& [id, aux] : pf.aux)
            reports.push_back(product_one_aux(a, b, pf.state, aux, id));
          break;
        case Relation::Eq14:
          need_aux(1, "EQ14");
          for (const auto& [id, aux] : pf.aux)
            reports.push_back(sum_one_aux(a, b, pf.state, aux, id));
          break;
        case Relation::Eq15: {
          need_aux(2, "EQ15");
          const auto [id1, aux1] = aux_at(0);
          const auto [id2, aux2] = aux_at(1);
          reports.push_back(product_two_aux(a, b, pf.state, aux1, aux2, id1, id2));
          break;
        }
        case Relation::Eq16: {
          need_aux(2, "EQ16");
          const auto [id1, aux1] = aux_at(0);
          const auto [id2, aux2] = aux_at(1);
          reports.push_back(sum_two_aux(a, b, pf.state, aux1, aux2, id1, id2));
          break;
        }
        case Relation::Eq17:
          need_aux(1, "EQ17");
          for (const auto& [id, aux] : pf.aux)
            reports.push_back(strengthened_product(a, b, pf.state, aux, id));
          break;
        case Relation::Multi: {
          need_aux(1, "MULTI");
          std::vector<Observable> obs;
          for (const auto& [name, o] : pf.observables) obs.push_back(o);
          const auto [id, aux] = aux_at(0);
          reports.push_back(multi_observable_product(obs, pf.state, aux, id));
          break;
        }
        case Relation::ChenFei:
          reports.push_back(chen_fei_sum(a, b, pf.state));
          break;
      }
    } catch (const PreconditionViolated& e) {
      errors.push_back({relation_name(rel), e.what()});
    } catch (const ZeroDeviation& e) {
      errors.push_back({relation_name(rel), e.what()});
    }
  }

  if (opt.format == "json") {
    json doc;
    doc["case"] = case_name(uc.tag);
    if (uc.dependence_ratio)
      doc["mu"] = {num(uc.dependence_ratio->real()), num(uc.dependence_ratio->imag())};
    doc["reports"] = json::array();
    for (const auto& r : reports) doc["reports"].push_back(report_to_json(r, opt));
    doc["errors"] = json::array();
    for (const auto& e : errors) {
      json err;
      err["relation"] = e.relation;
      err["message"] = e.message;
      doc["errors"].push_back(std::move(err));
    }
    write_output(opt, doc.dump(2) + "\n");
  } else {
    std::ostringstream os;
    os << "relation,aux,lambda,sign,lhs,rhs,valid,saturated,non_canonical,status\n";
    for (const auto& r : reports) {
      const ReportFlags f = flags_with_tolerance(r, opt);
      os << relation_name(r.relation) << ',' << csv_escape(join_aux(r.aux_ids))
         << ',' << (r.lambda ? format_value(*r.lambda) : "") << ','
         << (r.sign_choice ? std::to_string(*r.sign_choice) : "") << ','
         << format_value(r.lhs) << ',' << format_value(r.rhs) << ','
         << (f.valid ? "true" : "false") << ',' << (f.saturated ? "true" : "false")
         << ',' << (r.non_canonical ? "true" : "false") << ",ok\n";
    }
    for (const auto& e : errors)
      os << e.relation << ",,,,,,,,," << csv_escape("precondition_violated: " + e.message)
         << '\n';
    write_output(opt, os.str());
  }

  if (!errors.empty()) {
    for (const auto& e : errors)
      std::cerr << "uncert: " << e.relation << ": " << e.message << '\n';
    return kExitPrecondition;
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variance-based quantum uncertainty bounds"};
  app.require_subcommand(1);
  app.fallthrough(); // accept global flags after the subcommand too

  OutputOptions opt;
  app.add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  app.add_option("--out", opt.out, "Output file (default stdout)");
  double tolerance = 0.0;
  auto* tol_opt = app.add_option(
      "--tolerance", tolerance,
      "Override the valid/saturated tolerance in printed reports");

  auto* table1 = app.add_subcommand(
      "table1", "Reproduce the three-level bound-comparison table");

  auto* sweep_cmd =
      app.add_subcommand("sweep", "Sweep the qutrit/qubit experiment states");
  std::string system = "qutrit";
  double start = 0.0, end = std::numbers::pi;
  int steps = 181;
  sweep_cmd->add_option("--system", system, "System kind")
      ->check(CLI::IsMember({"qutrit", "qubit"}))
      ->capture_default_str();
  sweep_cmd->add_option("--start", start, "First phi (radians)")
      ->capture_default_str();
  sweep_cmd->add_option("--end", end, "Last phi (radians)")
      ->capture_default_str();
  sweep_cmd->add_option("--steps", steps, "Number of grid points")
      ->capture_default_str();

  auto* osc = app.add_subcommand(
      "oscillator", "Scan the oscillator trial bound over eta");
  double eta_min = 0.05, eta_max = 4.0;
  int osc_steps = 80;
  osc->add_option("--eta-min", eta_min, "Smallest eta")->capture_default_str();
  osc->add_option("--eta-max", eta_max, "Largest eta")->capture_default_str();
  osc->add_option("--steps", osc_steps, "Number of scan points")
      ->capture_default_str();

  auto* bounds_cmd = app.add_subcommand(
      "bounds", "Evaluate bound relations on a JSON problem file");
  std::string problem_path;
  bounds_cmd->add_option("file", problem_path, "Problem file path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitIoError;
  }
  if (tol_opt->count() > 0) opt.tolerance = tolerance;

  try {
    if (table1->parsed()) return cmd_table1(opt);
    if (sweep_cmd->parsed()) return cmd_sweep(system, start, end, steps, opt);
    if (osc->parsed()) return cmd_oscillator(eta_min, eta_max, osc_steps, opt);
    if (bounds_cmd->parsed()) return cmd_bounds(problem_path, opt);
  } catch (const ProblemFileError& e) {
    std::cerr << "uncert: " << e.what() << '\n';
    return kExitIoError;
  } catch (const PreconditionViolated& e) {
    std::cerr << "uncert: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const ZeroDeviation& e) {
    std::cerr << "uncert: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const EvennessViolated& e) {
    std::cerr << "uncert: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "uncert: " << e.what() << '\n';
    return kExitIoError;
  } catch (const std::exception& e) {
    std::cerr << "uncert: " << e.what() << '\n';
    return kExitIoError;
  }
  return kExitOk;
}
