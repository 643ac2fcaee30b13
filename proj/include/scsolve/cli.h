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

#ifndef SCSOLVE_CLI_H_
#define SCSOLVE_CLI_H_

#include <iosfwd>
#include <string>
#include <vector>

namespace scs {

enum ExitCode : int {
  kExitOk = 0,
  kExitNoSolution = 1,  // infeasible, unbounded, no optimal pair, verify FAIL
  kExitInputError = 2,
  kExitSolverFailure = 3,
};

// Subcommands: solve, interior, scs, partition, verify. `args` excludes the
// program name. Reports go to `out`; failures produce one
// `error: code=<Code> ... message="..."` line on `err`.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace scs

#endif  // SCSOLVE_CLI_H_
