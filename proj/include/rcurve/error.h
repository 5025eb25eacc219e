// Copyright 2026 The rcurve Authors
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

#ifndef RCURVE_ERROR_H_
#define RCURVE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace rcurve {

// Machine-readable failure categories. The CLI maps kParse to exit code 2 and
// everything else to exit code 1.
enum class ErrorCode {
  kParse,
  kSideRequired,
  kSideForbidden,
  kNotComessatti,
  kTableMismatch,
  kInvalidComplex,
  kNotEmbedded,
  kNoSuchNode,
  kDimensionMismatch,
  kNonIntegralClass,
  kDomain,
  kParity,
  kNotContractible,
  kMinusThreeOutOfScope,
  kOutOfScope,
  kFitFailure,
  kNoWitness,
};

std::string_view ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace rcurve

#endif  // RCURVE_ERROR_H_
