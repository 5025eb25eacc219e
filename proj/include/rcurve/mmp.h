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

#ifndef RCURVE_MMP_H_
#define RCURVE_MMP_H_

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rcurve/pairalg.h"
#include "rcurve/piclattice.h"

namespace rcurve {

enum class EndStateTag {
  kP1BundleSection,
  kP2Conic,
  kQuadricSection,
  kP2Line,
  kConicBundleFiber,
  kMinusOne,
  kMinusTwoKFT2,
};

struct EndStateKind {
  EndStateTag tag = EndStateTag::kP2Line;
  int csq = 0;                           // P1BundleSection
  std::optional<ClosedSurface> surface;  // bundle or fiber type, or the rest

  static EndStateKind P1BundleSection(int csq,
                                      std::optional<ClosedSurface> real_locus = std::nullopt);
  static EndStateKind P2Conic();
  static EndStateKind QuadricSection();
  static EndStateKind P2Line();
  static EndStateKind ConicBundleFiber(ClosedSurface type);
  static EndStateKind MinusOne(ClosedSurface rest);
  static EndStateKind MinusTwoKFT2();

  std::string ToString() const;
  friend bool operator==(const EndStateKind&, const EndStateKind&) = default;
};

// "P1BundleSection:4", "P1BundleSection:3:K", "P2Conic", "QuadricSection",
// "P2Line", "ConicBundleFiber:S2", "MinusOne:2RP2", "MinusTwoKF_T2".
EndStateKind ParseEndStateKind(std::string_view text);

enum class StepKind {
  kConjPairOffCurve,
  kConjPairOnCurve,
  kRealOffCurve,
  kRealOnCurve,
  kContractC,
};

struct Step {
  StepKind kind = StepKind::kRealOffCurve;
  Side side = Side::kAny;  // RealOffCurve only

  std::string ToString() const;
  friend bool operator==(const Step&, const Step&) = default;
};

// Long names ("RealOffCurve:Left") or short ones: C, C*, R, R*, R:L, R:R.
Step ParseStep(std::string_view text);

struct AppliedStep {
  Step step;
  int record = 0;  // index into lattice().exceptionals()
};

class MmpState {
 public:
  // Throws kParity for a bundle section whose csq parity contradicts the
  // requested real locus, kDomain for an invalid rest.
  static MmpState FromEndState(const EndStateKind& k);

  const EndStateKind& end_state() const { return end_; }
  const PicLattice& lattice() const { return lattice_; }
  const DivClass& curve() const { return curve_; }
  const TopPair& pair() const { return pair_; }
  long long csq() const { return csq_; }
  const std::vector<AppliedStep>& history() const { return history_; }

  // The pair of the end state; separating end states also keep their two
  // sides in order, and Left/Right tags always refer to these.
  const TopPair& end_pair() const { return end_pair_; }
  const std::optional<std::pair<ClosedSurface, ClosedSurface>>& end_sides() const {
    return end_sides_;
  }

 private:
  MmpState(EndStateKind end, PicLattice lattice, DivClass curve, TopPair pair);
  void Refresh();  // recomputes pair and csq from lattice and history

  EndStateKind end_;
  PicLattice lattice_;
  DivClass curve_;
  TopPair end_pair_;
  std::optional<std::pair<ClosedSurface, ClosedSurface>> end_sides_;
  TopPair pair_;
  long long csq_ = 0;
  std::vector<AppliedStep> history_;

  friend MmpState ApplyInverseStep(const MmpState& s, const Step& step);
  friend MmpState ContractExceptional(const MmpState& s, int record);
};

// Throws kSideRequired / kSideForbidden as SumSurface does, kDomain for
// ContractC.
MmpState ApplyInverseStep(const MmpState& s, const Step& step);

// Undoes the inverse step that created a tracked exceptional record.
// Throws kNotContractible for untracked or non-(-1) records.
MmpState ContractExceptional(const MmpState& s, int record);

struct ContractedSurface {
  ClosedSurface real_locus = ClosedSurface::Sphere();
  std::optional<PicLattice> lattice;  // when C is a basis class
  friend bool operator==(const ContractedSurface&, const ContractedSurface&) = default;
};

struct SurfaceCase {
  std::string name;
  bool rational = false;
  friend bool operator==(const SurfaceCase&, const SurfaceCase&) = default;
};

struct MinusTwoReport {
  std::vector<SurfaceCase> cases;
  std::vector<MinusTwoSolution> solutions;
  std::vector<MinusTwoSolution> irreducible;
  friend bool operator==(const MinusTwoReport&, const MinusTwoReport&) = default;
};

using ContractResult = std::variant<ContractedSurface, MinusTwoReport>;

// Contracts the curve itself. csq = -1 gives the contracted surface,
// csq = -2 the case report. Throws kNotContractible for csq >= 0 and
// kMinusThreeOutOfScope for csq <= -3.
ContractResult ContractCurve(const MmpState& s);

struct TraceEntry {
  std::string step;
  long long csq = 0;
  TopPair pair = named::SphereLine();
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct ForwardTrace {
  std::vector<TraceEntry> entries;  // starting state first
  MmpState terminal;
};

// Contracts tracked exceptional records until none remain: conjugate pairs
// first, then real records, most recent first.
ForwardTrace RunForward(const MmpState& s);

// Inverse steps in order, each entry after the step; the end state first.
std::vector<TraceEntry> SimulateInverse(const EndStateKind& k, const std::vector<Step>& steps);

}  // namespace rcurve

#endif  // RCURVE_MMP_H_
