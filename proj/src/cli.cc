// Copyright 2026 The scsolve Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "scsolve/cli.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "scsolve/error.h"
#include "scsolve/problem_io.h"
#include "scsolve/relative_interior.h"
#include "scsolve/report.h"
#include "scsolve/strict_complementarity.h"

namespace scs {
namespace {

struct Flags {
  std::string problem_path;
  std::string solution_path;
  std::string method = "two-phase";
  std::optional<double> zstar;
  double tol_feas = kDefaultFeasibilityTol;
  double tol_supp = kDefaultSupportTol;
  std::string pivot = "dantzig";
  std::string maxmin_reading = "complement";
  bool verbose = false;
};

class FileError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string quoted(const std::string& s) { return nlohmann::json(s).dump(); }

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string stem_of(const std::string& path) {
  std::string base = path.substr(path.find_last_of('/') + 1);
  for (const char* suffix : {".lp.json", ".json", ".txt", ".lp"}) {
    const std::string s = suffix;
    if (base.size() > s.size() &&
        base.compare(base.size() - s.size(), s.size(), s) == 0) {
      return base.substr(0, base.size() - s.size());
    }
  }
  return base;
}

ProblemFile load_problem(const Flags& f, bool require_objective) {
  ProblemFile p = parse_problem(read_file(f.problem_path),
                                ParseOptions{require_objective});
  if (p.name.empty()) p.name = stem_of(f.problem_path);
  return p;
}

Options make_options(const Flags& f) {
  Options opts;
  opts.simplex.eps_feas = f.tol_feas;
  opts.eps_supp = f.tol_supp;
  opts.simplex.pivot_rule = f.pivot == "bland"
                                ? PivotRule::kBland
                                : PivotRule::kDantzigWithBlandFallback;
  return opts;
}

ScsMethod parse_method(const std::string& s) {
  if (s == "single") return ScsMethod::kSingleLp;
  if (s == "maxmin") return ScsMethod::kMaxMinDualFace;
  return ScsMethod::kTwoPhase;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNoOptimalFace:
      return kExitNoSolution;
    case ErrorCode::kParseError:
    case ErrorCode::kValidationError:
    case ErrorCode::kInfeasibleInput:
      return kExitInputError;
    default:
      return kExitSolverFailure;
  }
}

std::string value_pair(double v) {
  return format_value(v) + " " + format_display(v);
}

int cmd_solve(const Flags& f, std::ostream& out) {
  const ProblemFile file = load_problem(f, true);
  const OptimalValue value = optimal_value(file.to_canonical(), make_options(f));
  out << report_line("problem", file.name);
  out << report_line("status", std::string(status_name(value.status)));
  if (value.z_star) out << report_line("z_star", value_pair(*value.z_star));
  if (f.verbose) {
    out << report_line("diag.simplex_iterations",
                       std::to_string(value.iterations));
  }
  return value.z_star ? kExitOk : kExitNoSolution;
}

int cmd_interior(const Flags& f, std::ostream& out) {
  const ProblemFile file = load_problem(f, false);
  const EqualityPolyhedron p = file.to_polyhedron();
  const MaximalResult r = relative_interior_point(p, make_options(f));
  out << report_line("problem", file.name);
  out << report_line("status", r.empty ? "EMPTY" : "NONEMPTY");
  out << report_line("w1_star", value_pair(r.w1_star));
  out << report_line("w2_star", value_pair(r.w2_star));
  if (!r.empty) {
    const Vector& x = *r.x_bar;
    for (std::size_t j = 0; j < x.size(); ++j) {
      out << report_line("x_bar[" + std::to_string(j + 1) + "]",
                         value_pair(x[j]));
    }
    out << report_line("support", format_indices(r.support));
    out << report_line("zero_set",
                       format_indices(r.support.complement(p.num_vars())));
  }
  if (f.verbose) {
    out << report_line("diag.simplex_iterations",
                       std::to_string(r.simplex_iterations));
  }
  return r.empty ? kExitNoSolution : kExitOk;
}

int cmd_scs(const Flags& f, std::ostream& out, bool partition_only) {
  const ProblemFile file = load_problem(f, true);
  const CanonicalLp lp = file.to_canonical();
  const Options opts = make_options(f);
  const ScsMethod method = parse_method(f.method);

  auto header = [&](const std::string& status) {
    out << report_line("problem", file.name);
    out << report_line("method", std::string(method_name(method)));
    out << report_line("status", status);
  };

  std::optional<ScsRun> run;
  if (method == ScsMethod::kSingleLp) {
    run = scs_single(lp, opts);
    if (!run) {
      header("NO_OPTIMAL_PAIR");
      return kExitNoSolution;
    }
  } else {
    std::optional<double> z = f.zstar ? f.zstar : file.z_star;
    if (!z) {
      const OptimalValue value = optimal_value(lp, opts);
      if (!value.z_star) {
        header(std::string(status_name(value.status)));
        return kExitNoSolution;
      }
      z = value.z_star;
    }
    if (method == ScsMethod::kTwoPhase) {
      run = scs_two_phase(lp, *z, opts);
    } else {
      const MaxMinReading reading = f.maxmin_reading == "literal"
                                        ? MaxMinReading::kLiteral
                                        : MaxMinReading::kComplement;
      run = scs_maxmin(lp, *z, reading, opts);
    }
  }

  const Report report = make_report(file.name, lp, run->result, method);
  if (partition_only) {
    header("OPTIMAL");
    out << render_partition(report);
  } else {
    out << render_report(report, f.verbose);
  }
  return kExitOk;
}

int cmd_verify(const Flags& f, std::ostream& out) {
  const ProblemFile file = load_problem(f, true);
  const CanonicalLp lp = file.to_canonical();
  ScsResult candidate = parse_solution(read_file(f.solution_path), file);
  const ScsVerification check = verify_scs_detailed(lp, candidate, f.tol_supp);
  auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
  out << report_line("problem", file.name);
  out << report_line("verify", check.ok() ? "PASS" : "FAIL");
  out << report_line("primal_feasible", yes_no(check.primal_feasible));
  out << report_line("dual_feasible", yes_no(check.dual_feasible));
  out << report_line("zero_gap", yes_no(check.zero_gap));
  out << report_line("strictly_positive", yes_no(check.strictly_positive));
  out << report_line("complementary", yes_no(check.complementary));
  if (check.ok()) {
    candidate.partition =
        optimal_partition(candidate.x_bar, candidate.u_bar, candidate.y_bar,
                          candidate.v_bar, f.tol_supp);
    Report report = make_report(file.name, lp, candidate, ScsMethod::kTwoPhase);
    out << render_partition(report);
    out << report_line("binding_primal", format_indices(report.binding_primal));
    out << report_line("binding_dual", format_indices(report.binding_dual));
  }
  if (f.verbose) {
    out << report_line("diag.primal_residual", format_value(check.primal_residual));
    out << report_line("diag.dual_residual", format_value(check.dual_residual));
    out << report_line("diag.gap", format_value(check.gap));
  }
  return check.ok() ? kExitOk : kExitNoSolution;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  Flags f;
  CLI::App app{"Strictly complementary solutions and optimal partitions of LPs",
               "scsolve"};
  app.require_subcommand(1, 1);

  auto add_common = [&f](CLI::App* sub) {
    sub->add_option("--tol-feas", f.tol_feas, "Feasibility tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--tol-supp", f.tol_supp, "Support (positivity) tolerance")
        ->check(CLI::PositiveNumber);
    sub->add_option("--pivot", f.pivot, "Pricing rule")
        ->check(CLI::IsMember({"dantzig", "bland"}));
    sub->add_flag("--verbose", f.verbose, "Print solver diagnostics");
  };
  auto add_scs = [&f](CLI::App* sub) {
    sub->add_option("--method", f.method, "Procedure")
        ->check(CLI::IsMember({"two-phase", "single", "maxmin"}));
    sub->add_option("--zstar", f.zstar, "Known optimal value");
    sub->add_option("--maxmin-reading", f.maxmin_reading,
                    "Index sets pushed up by the max-min dual problem")
        ->check(CLI::IsMember({"literal", "complement"}));
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "Optimal value of the primal");
  CLI::App* interior_cmd = app.add_subcommand(
      "interior", "Relative-interior point of {x | Ax = b, x >= 0}");
  CLI::App* scs_cmd =
      app.add_subcommand("scs", "Strictly complementary solution and partition");
  CLI::App* partition_cmd =
      app.add_subcommand("partition", "Optimal partition only");
  CLI::App* verify_cmd = app.add_subcommand(
      "verify", "Check a primal-dual pair for strict complementarity");
  for (CLI::App* sub :
       {solve_cmd, interior_cmd, scs_cmd, partition_cmd, verify_cmd}) {
    sub->add_option("problem", f.problem_path, "Problem file")->required();
    add_common(sub);
  }
  verify_cmd->add_option("solution", f.solution_path, "Solution file")
      ->required();
  add_scs(scs_cmd);
  add_scs(partition_cmd);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: code=UsageError message=" << quoted(e.what()) << "\n";
    return kExitInputError;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(f, out);
    if (interior_cmd->parsed()) return cmd_interior(f, out);
    if (scs_cmd->parsed()) return cmd_scs(f, out, false);
    if (partition_cmd->parsed()) return cmd_scs(f, out, true);
    if (verify_cmd->parsed()) return cmd_verify(f, out);
  } catch (const FileError& e) {
    err << "error: code=FileError message=" << quoted(e.what()) << "\n";
    return kExitInputError;
  } catch (const ParseError& e) {
    err << "error: code=ParseError line=" << e.line() << " column=" << e.column();
    if (!e.field().empty()) err << " field=" << e.field();
    err << " message=" << quoted(e.what()) << "\n";
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: code=" << error_code_name(e.code())
        << " message=" << quoted(e.what()) << "\n";
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "error: code=Internal message=" << quoted(e.what()) << "\n";
    return kExitSolverFailure;
  }
  return kExitInputError;
}

}  // namespace scs
