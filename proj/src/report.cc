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

#include "scsolve/report.h"

#include <cstdio>

namespace scs {
namespace {

void vector_lines(std::string& out, const char* key, const Vector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += report_line(std::string(key) + "[" + std::to_string(i + 1) + "]",
                       format_value(v[i]) + " " + format_display(v[i]));
  }
}

}  // namespace

std::string format_value(double value) {
  if (value == 0.0) return "0";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

std::string format_display(double value) {
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.3f", value);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::string format_indices(const Support& s) {
  std::string out;
  for (std::size_t k : s.indices()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(k);
  }
  return out;
}

std::string report_line(const std::string& key, const std::string& value) {
  return value.empty() ? key + ":\n" : key + ": " + value + "\n";
}

Report make_report(const std::string& problem, const CanonicalLp& lp,
                   const ScsResult& result, ScsMethod method) {
  Report r;
  r.problem = problem;
  r.z_star = result.z_star;
  r.method = method;
  r.x_bar = result.x_bar;
  r.u_bar = result.u_bar;
  r.y_bar = result.y_bar;
  r.v_bar = result.v_bar;
  r.partition = result.partition;
  r.binding_primal = binding_primal(result.partition, lp.m());
  r.binding_dual = binding_dual(result.partition, lp.n());
  const ScsVerification check = verify_scs_detailed(lp, result);
  r.diagnostics.simplex_iterations = result.simplex_iterations;
  r.diagnostics.primal_residual = check.primal_residual;
  r.diagnostics.dual_residual = check.dual_residual;
  r.diagnostics.gap = check.gap;
  return r;
}

std::string render_partition(const Report& r) {
  std::string out;
  out += report_line("sigma_x", format_indices(r.partition.sigma_x));
  out += report_line("sigma_v", format_indices(r.partition.sigma_v));
  out += report_line("sigma_u", format_indices(r.partition.sigma_u));
  out += report_line("sigma_y", format_indices(r.partition.sigma_y));
  return out;
}

std::string render_report(const Report& r, bool verbose) {
  std::string out;
  out += report_line("problem", r.problem);
  out += report_line("method", std::string(method_name(r.method)));
  out += report_line("status", "OPTIMAL");
  out += report_line("z_star", format_value(r.z_star) + " " +
                                   format_display(r.z_star));
  vector_lines(out, "x_bar", r.x_bar);
  vector_lines(out, "u_bar", r.u_bar);
  vector_lines(out, "y_bar", r.y_bar);
  vector_lines(out, "v_bar", r.v_bar);
  out += render_partition(r);
  out += report_line("binding_primal", format_indices(r.binding_primal));
  out += report_line("binding_dual", format_indices(r.binding_dual));
  if (verbose) {
    out += report_line("diag.simplex_iterations",
                       std::to_string(r.diagnostics.simplex_iterations));
    out += report_line("diag.primal_residual",
                       format_value(r.diagnostics.primal_residual));
    out += report_line("diag.dual_residual",
                       format_value(r.diagnostics.dual_residual));
    out += report_line("diag.gap", format_value(r.diagnostics.gap));
  }
  return out;
}

}  // namespace scs
