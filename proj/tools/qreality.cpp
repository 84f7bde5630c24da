#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "qr/census.hpp"
#include "qr/coevent.hpp"
#include "qr/error.hpp"
#include "qr/filters.hpp"
#include "qr/json_io.hpp"
#include "qr/parallel.hpp"
#include "qr/qmeasure.hpp"

namespace {

using namespace qr;

int cmd_eval(int n, const std::string& coevent, const std::string& event) {
  CoeventTable phi = parse_coevent(coevent, n);
  std::cout << phi.eval(parse_event(event, n)) << "\n";
  return 0;
}

int cmd_classify(int n, const std::string& coevent) {
  CoeventClass c = classify(parse_coevent(coevent, n));
  std::cout << "classical=" << (c.classical ? "true" : "false")
            << " unital=" << (c.unital ? "true" : "false")
            << " additive=" << (c.additive ? "true" : "false")
            << " multiplicative=" << (c.multiplicative ? "true" : "false")
            << " quadratic=" << (c.quadratic ? "true" : "false") << "\n";
  return 0;
}

int cmd_check(const std::string& mode_s, const std::string& coevent, int n_opt,
              const std::string& measure_path, bool existential, const std::string& out_path,
              long long max_branches) {
  Mode mode = mode_from_name(mode_s);
  if (existential == !measure_path.empty())
    throw ParseError("give exactly one of --measure or --existential");

  std::optional<QMeasure> mu;
  int n = n_opt;
  if (!measure_path.empty()) {
    mu = measure_from_json(load_json_file(measure_path));
    if (n > 0 && n != mu->n)
      throw ParseError("--n disagrees with the measure file (" + std::to_string(mu->n) + ")");
    n = mu->n;
  }
  if (n <= 0) throw ParseError("--n is required with --existential");

  CoeventTable phi = parse_coevent(coevent, n);
  SolveOptions opt;
  if (max_branches > 0) opt.max_branches = max_branches;

  FilterVerdict v;
  if (mu) {
    v = mode == Mode::gen1   ? check_1generated(phi, *mu, opt)
        : mode == Mode::gen2 ? check_2generated(phi, *mu, opt)
                             : check_actualized(phi, *mu, opt);
  } else {
    v = mode == Mode::gen1   ? check_1generated_existential(phi, opt)
        : mode == Mode::gen2 ? check_2generated_existential(phi, opt)
                             : check_actualized_existential(phi, opt);
  }
  std::cout << (v.feasible ? "FEASIBLE" : "INFEASIBLE") << "\n";
  std::cerr << "branches_explored=" << v.branches_explored << "\n";
  if (!out_path.empty()) save_json_file(out_path, verdict_to_json(v));
  return 0;
}

int cmd_verify(const std::string& verdict_path, const std::string& measure_path) {
  FilterVerdict v = verdict_from_json(load_json_file(verdict_path));
  std::optional<QMeasure> mu;
  if (!measure_path.empty()) mu = measure_from_json(load_json_file(measure_path));
  std::string why;
  if (verify_witness(v, mu, &why)) {
    std::cout << "OK\n";
    return 0;
  }
  std::cout << "FAIL: " << why << "\n";
  return 1;
}

int cmd_census(int n, const std::string& modes_s, int jobs, long long max_branches,
               const std::string& format_s, const std::string& out_path) {
  CensusModes modes;
  std::size_t pos = 0;
  while (pos <= modes_s.size()) {
    std::size_t comma = modes_s.find(',', pos);
    std::string tok =
        modes_s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok == "classify")
      modes.classify = true;
    else if (tok == "gen1")
      modes.gen1 = true;
    else if (tok == "gen2")
      modes.gen2 = true;
    else if (tok == "actualize")
      modes.actualize = true;
    else
      throw ParseError("unknown census mode '" + tok + "'");
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }

  SolveOptions opt;
  if (max_branches > 0) opt.max_branches = max_branches;
  CensusReport report = run_census(n, modes, jobs, opt);

  bool report_to_stdout = out_path.empty() && !format_s.empty();
  if (!out_path.empty() || !format_s.empty()) {
    ReportFormat format =
        format_s.empty() ? ReportFormat::json : report_format_from_name(format_s);
    std::string text = emit_report(report, format);
    if (report_to_stdout) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw ParseError("cannot open " + out_path + " for writing");
      out << text;
    }
  }
  (report_to_stdout ? std::cerr : std::cout) << aggregate_line(report) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coevent reality-filter toolkit"};
  app.require_subcommand(1);

  int n = 0;
  std::string coevent, event;
  auto* eval = app.add_subcommand("eval", "evaluate a coevent expression on an event");
  eval->add_option("--n", n, "point count")->required();
  eval->add_option("--coevent", coevent, "expression over w1..wn, + (xor) and * (and)")
      ->required();
  eval->add_option("--event", event, "event like {1,3} or {}")->required();

  auto* classify_cmd = app.add_subcommand("classify", "class flags of a coevent");
  classify_cmd->add_option("--n", n, "point count")->required();
  classify_cmd->add_option("--coevent", coevent, "coevent expression")->required();

  std::string mode_s, measure_path, out_path, format_s, verdict_path;
  bool existential = false;
  long long max_branches = 0;
  int jobs = 0;
  auto* check = app.add_subcommand("check", "decide whether a coevent generates a measure");
  check->add_option("--mode", mode_s, "gen1, gen2 or actualize")->required();
  check->add_option("--coevent", coevent, "coevent expression")->required();
  check->add_option("--n", n, "point count (required with --existential)");
  check->add_option("--measure", measure_path, "measure JSON file");
  check->add_flag("--existential", existential, "search over all q-measures");
  check->add_option("--out", out_path, "write the verdict JSON here");
  check->add_option("--max-branches", max_branches, "branch budget for the solver");

  auto* census = app.add_subcommand("census", "sweep every coevent on n points");
  census->add_option("--n", n, "point count")->required();
  census->add_option("--modes", mode_s, "comma list from classify,gen1,gen2,actualize")
      ->required();
  census->add_option("--jobs", jobs, "worker threads (default: QREALITY_JOBS or all cores)");
  census->add_option("--max-branches", max_branches, "branch budget per decision");
  census->add_option("--format", format_s, "json, csv or markdown");
  census->add_option("--out", out_path, "write the report here");

  auto* verify = app.add_subcommand("verify", "re-check a stored verdict");
  verify->add_option("--verdict", verdict_path, "verdict JSON file")->required();
  verify->add_option("--measure", measure_path, "measure the verdict was solved against");

  try {
    app.parse(argc, argv);
    if (eval->parsed()) return cmd_eval(n, coevent, event);
    if (classify_cmd->parsed()) return cmd_classify(n, coevent);
    if (check->parsed())
      return cmd_check(mode_s, coevent, n, measure_path, existential, out_path, max_branches);
    if (census->parsed())
      return cmd_census(n, mode_s, jobs, max_branches, format_s, out_path);
    if (verify->parsed()) return cmd_verify(verdict_path, measure_path);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qr::ResourceGuardError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
