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

// Line-oriented `key: value` reports. Values print with 9 significant digits
// followed by a 3-decimal display column; index lists are 1-based, ascending
// and space-separated. Output depends only on the inputs.

#ifndef SCSOLVE_REPORT_H_
#define SCSOLVE_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "scsolve/core_model.h"
#include "scsolve/strict_complementarity.h"

namespace scs {

struct ReportDiagnostics {
  std::size_t simplex_iterations = 0;
  double primal_residual = 0.0;
  double dual_residual = 0.0;
  double gap = 0.0;
};

struct Report {
  std::string problem;
  double z_star = 0.0;
  ScsMethod method = ScsMethod::kTwoPhase;
  Vector x_bar;
  Vector u_bar;
  Vector y_bar;
  Vector v_bar;
  OptimalPartition partition;
  Support binding_primal;
  Support binding_dual;
  ReportDiagnostics diagnostics;
};

Report make_report(const std::string& problem, const CanonicalLp& lp,
                   const ScsResult& result, ScsMethod method);

std::string format_value(double value);          // %.9g, no "-0"
std::string format_display(double value);        // %.3f, no "-0.000"
std::string format_indices(const Support& s);    // "1 2 3", or ""

// "key: value" with no trailing space when value is empty.
std::string report_line(const std::string& key, const std::string& value);

std::string render_report(const Report& report, bool verbose);
std::string render_partition(const Report& report);

}  // namespace scs

#endif  // SCSOLVE_REPORT_H_
