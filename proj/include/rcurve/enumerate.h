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

#ifndef RCURVE_ENUMERATE_H_
#define RCURVE_ENUMERATE_H_

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rcurve/mmp.h"
#include "rcurve/pairalg.h"

namespace rcurve {

// Pairs with the given (C^2) = e and underlying complexity <= bound that the
// step calculus produces from some end state: r1 pair-sums with (RP2, l)
// followed by crosscap sums, with sides when the pair is still separating.
// Throws kOutOfScope for e < -2.
std::set<TopPair> ReachableTypes(int e, int bound);

// ReachableTypes(e) minus ReachableTypes(e + 2).
std::set<TopPair> NewTypes(int e, int bound);

struct ParamFamily {
  enum class Kind {
    kSingle,      // one pair
    kCrosscaps,   // base + r*RP2, r >= r_min
    kSeparating,  // r1*RP2 + S2L + r2*RP2, r1 + r2 >= r_min
  };
  Kind kind = Kind::kSingle;
  BaseToken base = BaseToken::kS2L;
  int r_min = 0;
  std::optional<TopPair> pair;

  static ParamFamily Single(TopPair p);
  static ParamFamily Crosscaps(BaseToken base, int r_min);
  static ParamFamily Separating(int r_min);

  // Members of complexity <= bound.
  std::set<TopPair> Instances(int bound) const;
  // "T2L + r*RP2", "r1*RP2 + S2L + r2*RP2" or a canonical word.
  std::string Template() const;
  std::string Constraint() const;  // "r>=0", "r1+r2>=1" or ""
  std::string ToString() const;
  friend bool operator==(const ParamFamily&, const ParamFamily&) = default;
};

struct TableRow {
  // "even>=6", "odd>=5" for the stable rows, otherwise the value of e.
  std::string label;
  std::vector<ParamFamily> families;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct TypeTable {
  std::vector<TableRow> rows;
  std::string ToString() const;
  friend bool operator==(const TypeTable&, const TypeTable&) = default;
};

// Fits a concrete set to families; throws kFitFailure.
std::vector<ParamFamily> FitFamilies(const std::set<TopPair>& types, int bound);

// Rows from e_max down to e_min. Beyond the largest (C^2) of a fixed end
// state only sections remain, so each parity gets one stable row, checked
// for stability up to e_max + 4. Throws kOutOfScope, kFitFailure.
TypeTable TheoremTable(int e_min, int e_max, int bound);

// The table as printed in the literature, embedded as JSON data.
const TypeTable& GoldenTable();
const std::string& GoldenTableJson();

struct ConstructionPlan {
  enum class Kind { kMmp, kDoubleEquator };
  Kind kind = Kind::kMmp;
  TopPair target = named::SphereLine();
  // kMmp
  std::optional<EndStateKind> end_state;
  std::vector<Step> steps;
  // kDoubleEquator: the curve with 2g+1 nodes, all resolved, then
  // extra_crosscaps off-curve blow-ups on the non-orientable side.
  int g = 0;
  int extra_crosscaps = 0;

  std::string ToString() const;
  friend bool operator==(const ConstructionPlan&, const ConstructionPlan&) = default;
};

// Replays a plan in mmp or in cellsurf and returns the resulting pair.
TopPair ReplayPlan(const ConstructionPlan& plan);

// A plan whose replay equals p. Throws kNotComessatti for non-realizable
// pairs and kNoWitness otherwise.
ConstructionPlan Witness(const TopPair& p);

enum class Approximability { kApproximable, kNotApproximable, kNotRealizable };
std::string_view ApproximabilityName(Approximability a);

struct Verdict {
  Approximability kind = Approximability::kNotRealizable;
  std::string reason;
  std::optional<ConstructionPlan> witness;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

Verdict ClassifyApproximable(const TopPair& p);

// Every pair whose underlying surface has complexity <= bound.
std::vector<TopPair> AllPairs(int bound);

}  // namespace rcurve

#endif  // RCURVE_ENUMERATE_H_
