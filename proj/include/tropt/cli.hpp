#pragma once

// Command-line front end.  run_cli takes the arguments after the program
// name in natural order and writes to the given streams, so tests can run
// it in-process.
//
// Exit codes: 0 success, 1 any error, 2 verification found violations.

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "tropt/errors.hpp"
#include "tropt/oracle.hpp"
#include "tropt/project_io.hpp"
#include "tropt/scheduling.hpp"
#include "tropt/semifield.hpp"

namespace tropt {

namespace cli_detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ParseError("cannot read file '" + path + "'");
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

template <class SF>
void print_named(std::ostream& out, const std::vector<std::string>& names,
                 const Vec<SF>& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    out << (i == 0 ? "" : ", ") << names[i] << "=" << v[i];
  }
}

template <class SF>
void print_mat_rows(std::ostream& out, const std::string& indent,
                    const Mat<SF>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out << indent << "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      out << (j == 0 ? "" : ", ") << m(i, j);
    }
    out << "]\n";
  }
}

template <class SF>
void print_result_text(std::ostream& out, const ProjectFile& pf,
                       const ScheduleResult<SF>& r, ProjectModel model) {
  out << "model: " << to_string(model) << "\n";
  out << "makespan: " << r.makespan << "\n";
  out << "earliest: ";
  print_named(out, pf.activities, r.earliest);
  out << "\ncompletions: ";
  print_named(out, pf.activities, r.completions);
  out << "\n";
  if (r.solutions.is_box()) {
    const auto& box = r.solutions.box_form();
    out << "optimal schedules (box" << (box.scale_free ? ", shiftable" : "")
        << "):\n  low:  ";
    print_named(out, pf.activities, box.low);
    out << "\n  high: ";
    print_named(out, pf.activities, box.high);
    out << "\n";
  } else {
    const auto& gen = r.solutions.generator_form();
    out << "optimal schedules (generated"
        << (gen.scale_free ? ", shiftable" : "") << "):\n  star:\n";
    print_mat_rows(out, "    ", gen.star);
    out << "  u_low:  ";
    print_named(out, pf.activities, gen.u_low);
    out << "\n";
    if (gen.u_high) {
      out << "  u_high: ";
      print_named(out, pf.activities, *gen.u_high);
      out << "\n";
    }
  }
  if (r.box) {
    const auto& box = r.box->box_form();
    out << "equivalent box" << (box.scale_free ? " (shiftable)" : "")
        << ":\n  low:  ";
    print_named(out, pf.activities, box.low);
    out << "\n  high: ";
    print_named(out, pf.activities, box.high);
    out << "\n";
  }
}

template <class SF>
int run_solve(std::ostream& out, const ProjectFile& pf,
              const std::string& format) {
  const ProjectSpec<SF> spec = to_project_spec<SF>(pf);
  const ProjectModel model = classify(spec);
  const ScheduleResult<SF> result = solve_project(spec);
  if (format == "json") {
    out << result_to_json(pf, result, model).dump(2) << "\n";
  } else {
    print_result_text(out, pf, result, model);
  }
  return 0;
}

inline void print_report_text(std::ostream& out, const OracleReport& r) {
  out << "check: " << r.checked << ": "
      << (r.ok() ? "ok" : "FAILED") << " (" << r.points << " points";
  if (r.best_found) out << ", best found " << format_rational(*r.best_found);
  out << ")\n";
  for (const auto& v : r.violations) {
    out << "  violation: " << v << "\n";
  }
}

inline int run_verify(std::ostream& out, const ProjectFile& pf,
                      std::uint64_t samples, std::uint64_t seed,
                      const std::string& format) {
  using SF = MaxPlusRat;
  const ProjectSpec<SF> spec = to_project_spec<SF>(pf);
  const ScheduleResult<SF> result = solve_project(spec);

  std::vector<OracleReport> reports;
  reports.push_back(sample_check(spec, result, samples, seed));
  if (spec.size() <= 4) {
    reports.push_back(
        grid_check(spec, result.makespan, auto_box(spec, result)));
  }
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();

  if (format == "json") {
    nlohmann::json j;
    j["makespan"] = io_detail::scalar_to_json(result.makespan);
    j["checks"] = nlohmann::json::array();
    for (const auto& r : reports) j["checks"].push_back(report_to_json(r));
    j["ok"] = ok;
    out << j.dump(2) << "\n";
  } else {
    out << "makespan: " << result.makespan << "\n";
    for (const auto& r : reports) print_report_text(out, r);
    if (spec.size() > 4) {
      out << "check: grid sweep: skipped (more than four activities)\n";
    }
    out << "verdict: " << (ok ? "ok" : "FAILED") << "\n";
  }
  return ok ? 0 : 2;
}

}  // namespace cli_detail

inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
  CLI::App app{"Minimum-makespan project scheduling over the max-plus "
               "semifield"};
  app.require_subcommand(1);

  std::string backend = "rational";
  double float_eps = FloatTolerance::eps;
  app.add_option("--backend", backend,
                 "Arithmetic backend: exact rationals or doubles")
      ->check(CLI::IsMember({"rational", "float"}));
  app.add_option("--float-eps", float_eps,
                 "Comparison tolerance for the float backend");

  std::string solve_file;
  std::string solve_format = "text";
  CLI::App* solve = app.add_subcommand(
      "solve", "Compute the minimum makespan and all optimal schedules");
  solve->add_option("file", solve_file, "Project JSON file")->required();
  solve->add_option("--format", solve_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::string verify_file;
  std::string verify_format = "text";
  std::uint64_t samples = 10000;
  std::uint64_t seed = 42;
  CLI::App* verify = app.add_subcommand(
      "verify", "Audit the solver's answer by brute force");
  verify->add_option("file", verify_file, "Project JSON file")->required();
  verify->add_option("--samples", samples, "Random schedules to try");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_option("--format", verify_format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  const double saved_eps = FloatTolerance::eps;
  FloatTolerance::eps = float_eps;
  int code = 0;
  try {
    if (solve->parsed()) {
      const ProjectFile pf =
          load_project_text(cli_detail::read_file(solve_file));
      code = backend == "float"
                 ? cli_detail::run_solve<MaxPlusDouble>(out, pf, solve_format)
                 : cli_detail::run_solve<MaxPlusRat>(out, pf, solve_format);
    } else {
      if (backend == "float") {
        err << "note: verify always uses exact arithmetic\n";
      }
      const ProjectFile pf =
          load_project_text(cli_detail::read_file(verify_file));
      code = cli_detail::run_verify(out, pf, samples, seed, verify_format);
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    code = 1;
  }
  FloatTolerance::eps = saved_eps;
  return code;
}

}  // namespace tropt
