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

#ifndef SCSOLVE_ERROR_H_
#define SCSOLVE_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace scs {

// Failure categories. LP statuses (infeasible, unbounded) are not errors and
// are reported through return values instead.
enum class ErrorCode {
  kIterationLimit,
  kNumericalBreakdown,
  kInvariantViolation,
  kNoOptimalFace,
  kDegenerateCertificate,
  kPartitionViolation,
  kInfeasibleInput,
  kParseError,
  kValidationError,
};

std::string_view error_code_name(ErrorCode code);

// True for the codes a simplex solve can raise (IterationLimit and
// NumericalBreakdown). Callers above the solver see them as SolverFailure.
inline bool is_solver_failure(ErrorCode code) {
  return code == ErrorCode::kIterationLimit ||
         code == ErrorCode::kNumericalBreakdown;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Input text could not be read. line/column are 1-based; 0 means unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::string field = {})
      : Error(ErrorCode::kParseError, message),
        line_(line),
        column_(column),
        field_(std::move(field)) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& field() const { return field_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string field_;
};

[[noreturn]] inline void throw_error(ErrorCode code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace scs

#endif  // SCSOLVE_ERROR_H_
