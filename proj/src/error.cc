// Copyright 2026 The Authors.
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

#include "extdom/error.h"

namespace extdom {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidVertex:
      return "invalid-vertex";
    case ErrorCode::kInvalidCandidate:
      return "invalid-candidate";
    case ErrorCode::kInfeasibleCardinality:
      return "infeasible-cardinality";
    case ErrorCode::kStructural:
      return "structural";
    case ErrorCode::kWrongSetting:
      return "wrong-setting";
    case ErrorCode::kSettingViolation:
      return "setting-violation";
    case ErrorCode::kInvalidAllocation:
      return "invalid-allocation";
    case ErrorCode::kInstance:
      return "instance";
    case ErrorCode::kOracleBudget:
      return "oracle-budget";
    case ErrorCode::kParse:
      return "parse";
    case ErrorCode::kInvalidArgument:
      return "invalid-argument";
  }
  return "unknown";
}

}  // namespace extdom
