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

#include "rcurve/enumerate.h"
#include "rcurve/json_io.h"

namespace rcurve {

const std::string& GoldenTableJson() {
  static const std::string kJson = R"json({
  "rows": [
    {"e": "even>=6", "families": [{"family": "T2L + r*RP2", "constraint": "r>=0"}]},
    {"e": "odd>=5", "families": [{"family": "KL + r*RP2", "constraint": "r>=0"}]},
    {"e": 4, "families": [{"family": "r1*RP2 + S2L + r2*RP2", "constraint": "r1+r2>=1"}]},
    {"e": 3, "families": []},
    {"e": 2, "families": [{"pair": "S2L"}]},
    {"e": 1, "families": [{"pair": "RP2L"}]},
    {"e": 0, "families": [{"pair": "KF"}]},
    {"e": -1, "families": [{"pair": "RP2L + T2"}]},
    {"e": -2, "families": [{"pair": "KF + T2"}]}
  ]
}
)json";
  return kJson;
}

const TypeTable& GoldenTable() {
  static const TypeTable kTable = ParseJson<TypeTable>(GoldenTableJson());
  return kTable;
}

}  // namespace rcurve
