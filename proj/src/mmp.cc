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

#include "rcurve/mmp.h"

#include <algorithm>

#include "rcurve/error.h"

namespace rcurve {
namespace {

using SidePair = std::pair<ClosedSurface, ClosedSurface>;

const ClosedSurface kRP2 = ClosedSurface::ProjectivePlane();

TopPair Replay(const TopPair& end_pair, const std::optional<SidePair>& end_sides,
               const std::vector<AppliedStep>& history) {
  std::optional<SidePair> sides = end_sides;
  TopPair p = end_pair;
  for (const AppliedStep& h : history) {
    switch (h.step.kind) {
      case StepKind::kConjPairOffCurve:
      case StepKind::kConjPairOnCurve:
      case StepKind::kContractC:
        break;
      case StepKind::kRealOffCurve:
        if (!sides) {
          p = SumSurface(p, kRP2, h.step.side);
        } else if (h.step.side == Side::kLeft) {
          sides->first = SurfaceSum(sides->first, kRP2);
        } else if (h.step.side == Side::kRight) {
          sides->second = SurfaceSum(sides->second, kRP2);
        } else {
          throw Error(ErrorCode::kSideRequired, "real blow-up off a separating curve needs a side");
        }
        break;
      case StepKind::kRealOnCurve:
        if (sides) {
          p = TopPair::MakeSeparating(sides->first, sides->second);
          sides.reset();
        }
        p = SumProjectiveLine(p);
        break;
    }
    if (sides) p = TopPair::MakeSeparating(sides->first, sides->second);
  }
  return p;
}

std::vector<std::string> Split(std::string_view text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    out.emplace_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

Side ParseSide(std::string_view s) {
  if (s == "L" || s == "Left") return Side::kLeft;
  if (s == "R" || s == "Right") return Side::kRight;
  if (s == "Any") return Side::kAny;
  throw Error(ErrorCode::kParse, "unknown side '" + std::string(s) + "'");
}

}  // namespace

// ---------------------------------------------------------------------------

EndStateKind EndStateKind::P1BundleSection(int csq, std::optional<ClosedSurface> real_locus) {
  return {EndStateTag::kP1BundleSection, csq, real_locus};
}
EndStateKind EndStateKind::P2Conic() { return {EndStateTag::kP2Conic, 4, std::nullopt}; }
EndStateKind EndStateKind::QuadricSection() {
  return {EndStateTag::kQuadricSection, 2, std::nullopt};
}
EndStateKind EndStateKind::P2Line() { return {EndStateTag::kP2Line, 1, std::nullopt}; }
EndStateKind EndStateKind::ConicBundleFiber(ClosedSurface type) {
  return {EndStateTag::kConicBundleFiber, 0, type};
}
EndStateKind EndStateKind::MinusOne(ClosedSurface rest) {
  return {EndStateTag::kMinusOne, -1, rest};
}
EndStateKind EndStateKind::MinusTwoKFT2() { return {EndStateTag::kMinusTwoKFT2, -2, std::nullopt}; }

std::string EndStateKind::ToString() const {
  switch (tag) {
    case EndStateTag::kP1BundleSection:
      return "P1BundleSection:" + std::to_string(csq) +
             (surface ? ":" + surface->ToString() : std::string());
    case EndStateTag::kP2Conic: return "P2Conic";
    case EndStateTag::kQuadricSection: return "QuadricSection";
    case EndStateTag::kP2Line: return "P2Line";
    case EndStateTag::kConicBundleFiber: return "ConicBundleFiber:" + surface->ToString();
    case EndStateTag::kMinusOne: return "MinusOne:" + surface->ToString();
    case EndStateTag::kMinusTwoKFT2: return "MinusTwoKF_T2";
  }
  return "?";
}

EndStateKind ParseEndStateKind(std::string_view text) {
  const std::vector<std::string> parts = Split(text, ':');
  const std::string& head = parts[0];
  auto arity = [&](size_t lo, size_t hi) {
    if (parts.size() < lo || parts.size() > hi) {
      throw Error(ErrorCode::kParse, "bad end state '" + std::string(text) + "'");
    }
  };
  if (head == "P1BundleSection") {
    arity(2, 3);
    int csq = 0;
    try {
      size_t used = 0;
      csq = std::stoi(parts[1], &used);
      if (used != parts[1].size()) throw std::invalid_argument("csq");
    } catch (const std::exception&) {
      throw Error(ErrorCode::kParse, "bad csq '" + parts[1] + "'");
    }
    std::optional<ClosedSurface> s;
    if (parts.size() == 3) s = ParseClosedSurface(parts[2]);
    return EndStateKind::P1BundleSection(csq, s);
  }
  if (head == "ConicBundleFiber") {
    arity(2, 2);
    return EndStateKind::ConicBundleFiber(ParseClosedSurface(parts[1]));
  }
  if (head == "MinusOne") {
    arity(2, 2);
    return EndStateKind::MinusOne(ParseClosedSurface(parts[1]));
  }
  arity(1, 1);
  if (head == "P2Conic") return EndStateKind::P2Conic();
  if (head == "QuadricSection") return EndStateKind::QuadricSection();
  if (head == "P2Line") return EndStateKind::P2Line();
  if (head == "MinusTwoKF_T2") return EndStateKind::MinusTwoKFT2();
  throw Error(ErrorCode::kParse, "unknown end state '" + std::string(text) + "'");
}

std::string Step::ToString() const {
  switch (kind) {
    case StepKind::kConjPairOffCurve: return "ConjPairOffCurve";
    case StepKind::kConjPairOnCurve: return "ConjPairOnCurve";
    case StepKind::kRealOffCurve:
      return side == Side::kAny ? "RealOffCurve" : "RealOffCurve:" + std::string(SideName(side));
    case StepKind::kRealOnCurve: return "RealOnCurve";
    case StepKind::kContractC: return "ContractC";
  }
  return "?";
}

Step ParseStep(std::string_view text) {
  const std::vector<std::string> parts = Split(text, ':');
  if (parts.size() > 2) throw Error(ErrorCode::kParse, "bad step '" + std::string(text) + "'");
  const std::string& h = parts[0];
  Step s;
  if (h == "C" || h == "ConjPairOffCurve") {
    s.kind = StepKind::kConjPairOffCurve;
  } else if (h == "C*" || h == "ConjPairOnCurve") {
    s.kind = StepKind::kConjPairOnCurve;
  } else if (h == "R" || h == "RealOffCurve") {
    s.kind = StepKind::kRealOffCurve;
  } else if (h == "R*" || h == "RealOnCurve") {
    s.kind = StepKind::kRealOnCurve;
  } else if (h == "ContractC") {
    s.kind = StepKind::kContractC;
  } else {
    throw Error(ErrorCode::kParse, "unknown step '" + std::string(text) + "'");
  }
  if (parts.size() == 2) {
    if (s.kind != StepKind::kRealOffCurve) {
      throw Error(ErrorCode::kParse, "only RealOffCurve takes a side");
    }
    s.side = ParseSide(parts[1]);
  }
  return s;
}

// ---------------------------------------------------------------------------

MmpState::MmpState(EndStateKind end, PicLattice lattice, DivClass curve, TopPair pair)
    : end_(std::move(end)),
      lattice_(std::move(lattice)),
      curve_(std::move(curve)),
      end_pair_(pair),
      pair_(std::move(pair)) {}

void MmpState::Refresh() {
  pair_ = Replay(end_pair_, end_sides_, history_);
  csq_ = lattice_.Intersect(curve_, curve_).numerator();
}

MmpState MmpState::FromEndState(const EndStateKind& k) {
  const ClosedSurface s2 = ClosedSurface::Sphere();
  std::optional<SidePair> sides;
  PicLattice lat(SurfaceBase::P2());
  DivClass curve;
  TopPair pair = named::ProjectiveLine();
  auto untracked = [&](const Center& c, int count) {
    for (int i = 0; i < count; ++i) std::tie(lat, curve) = lat.BlowUp(c, curve, 1, false);
  };
  switch (k.tag) {
    case EndStateTag::kP1BundleSection: {
      const int n = std::abs(k.csq);
      const bool even = n % 2 == 0;
      if (k.surface && *k.surface != (even ? ClosedSurface::Torus() : ClosedSurface::Klein())) {
        throw Error(ErrorCode::kParity, "a section with (C^2) = " + std::to_string(k.csq) +
                                            " cannot lie on " + k.surface->ToString());
      }
      lat = PicLattice(SurfaceBase::Hirzebruch(n));
      curve = k.csq <= 0 ? DivClass::Integral({1, 0}) : DivClass::Integral({1, n});
      pair = even ? named::TorusLine() : named::KleinLine();
      break;
    }
    case EndStateTag::kP2Conic:
      curve = DivClass::Integral({2});
      pair = TopPair::MakeSeparating(kRP2, s2);
      // The outer side is the Moebius band.
      sides = SidePair{kRP2, s2};
      break;
    case EndStateTag::kQuadricSection:
      lat = PicLattice(SurfaceBase::Quadric());
      curve = DivClass::Integral({1, 1});
      pair = named::SphereLine();
      sides = SidePair{s2, s2};
      break;
    case EndStateTag::kP2Line:
      curve = DivClass::Integral({1});
      break;
    case EndStateTag::kConicBundleFiber: {
      const ClosedSurface t = k.surface.value_or(ClosedSurface::Torus());
      if (t == ClosedSurface::Torus()) {
        lat = PicLattice(SurfaceBase::P1xP1());
        curve = DivClass::Integral({0, 1});
        pair = named::TorusLine();
      } else if (t == ClosedSurface::Klein()) {
        lat = PicLattice(SurfaceBase::Hirzebruch(1));
        curve = DivClass::Integral({0, 1});
        pair = named::KleinFiber();
      } else if (t == s2) {
        lat = PicLattice(SurfaceBase::Quadric());
        curve = DivClass::Integral({1, 1});
        untracked(ConjPairCenter{true}, 1);
        pair = named::SphereLine();
        sides = SidePair{s2, s2};
      } else {
        throw Error(ErrorCode::kDomain, "conic bundle fiber type must be T2, K or S2");
      }
      break;
    }
    case EndStateTag::kMinusOne: {
      const ClosedSurface rest = k.surface.value_or(s2);
      if (rest == s2) {
        lat = PicLattice(SurfaceBase::Quadric());
        curve = lat.Zero();
      } else if (rest == ClosedSurface::Torus()) {
        lat = PicLattice(SurfaceBase::P1xP1());
        curve = lat.Zero();
      } else if (!rest.orientable()) {
        curve = lat.Zero();
        untracked(RealCenter{}, rest.crosscaps() - 1);
      } else {
        throw Error(ErrorCode::kDomain, "rest must be S2, T2 or non-orientable");
      }
      untracked(RealCenter{}, 1);
      curve = lat.Basis(lat.rank() - 1);
      pair = TopPair::MakeOneSided(rest);
      break;
    }
    case EndStateTag::kMinusTwoKFT2:
      lat = PicLattice(SurfaceBase::Quadric());
      curve = DivClass::Integral({1, 1});
      untracked(RealCenter{true, Side::kAny}, 4);
      pair = SumSurface(named::KleinFiber(), ClosedSurface::Torus(), Side::kAny);
      break;
  }
  MmpState st(k, std::move(lat), std::move(curve), pair);
  st.end_sides_ = sides;
  st.Refresh();
  if (EulerChar(st.pair_) != st.lattice_.RealTopology().euler()) {
    throw Error(ErrorCode::kDomain, "end state topology mismatch");
  }
  return st;
}

MmpState ApplyInverseStep(const MmpState& s, const Step& step) {
  Center center;
  switch (step.kind) {
    case StepKind::kConjPairOffCurve: center = ConjPairCenter{false}; break;
    case StepKind::kConjPairOnCurve: center = ConjPairCenter{true}; break;
    case StepKind::kRealOffCurve: center = RealCenter{false, step.side}; break;
    case StepKind::kRealOnCurve: center = RealCenter{true, Side::kAny}; break;
    case StepKind::kContractC:
      throw Error(ErrorCode::kDomain, "ContractC is a forward step");
  }
  MmpState out = s;
  std::tie(out.lattice_, out.curve_) = s.lattice_.BlowUp(center, s.curve_);
  out.history_.push_back({step, static_cast<int>(out.lattice_.exceptionals().size()) - 1});
  out.Refresh();
  return out;
}

MmpState ContractExceptional(const MmpState& s, int record) {
  const auto& ex = s.lattice_.exceptionals();
  if (record < 0 || record >= static_cast<int>(ex.size()) || !ex[record].tracked) {
    throw Error(ErrorCode::kNotContractible, "record " + std::to_string(record) + " is not tracked");
  }
  MmpState out = s;
  std::tie(out.lattice_, out.curve_) = s.lattice_.Contract(record, s.curve_);
  auto& h = out.history_;
  h.erase(std::remove_if(h.begin(), h.end(),
                         [&](const AppliedStep& a) { return a.record == record; }),
          h.end());
  for (AppliedStep& a : h) {
    if (a.record > record) --a.record;
  }
  out.Refresh();
  return out;
}

ContractResult ContractCurve(const MmpState& s) {
  if (s.csq() >= 0) {
    throw Error(ErrorCode::kNotContractible,
                "the curve has (C^2) = " + std::to_string(s.csq()) + " >= 0");
  }
  if (s.csq() <= -3) {
    throw Error(ErrorCode::kMinusThreeOutOfScope,
                "contraction with (C^2) = " + std::to_string(s.csq()) + " is out of scope");
  }
  if (s.csq() == -2) {
    MinusTwoReport r;
    r.cases = {{"quadric cone", true}, {"degree 1 Del Pezzo", false}, {"degree 2 Del Pezzo", false}};
    r.solutions = MinusTwoSolutions(false);
    r.irreducible = MinusTwoSolutions(true);
    return r;
  }
  if (s.lattice().ArithmeticGenus(s.curve()) != 0) {
    throw Error(ErrorCode::kNotContractible, "the curve is not rational");
  }
  ContractedSurface out{s.pair().one_sided().cap, std::nullopt};
  const auto& ex = s.lattice().exceptionals();
  for (int k = 0; k < static_cast<int>(ex.size()); ++k) {
    if (ex[k].real && s.curve() == s.lattice().Basis(ex[k].index)) {
      out.lattice = s.lattice().Contract(k, s.curve()).first;
    }
  }
  return out;
}

ForwardTrace RunForward(const MmpState& s) {
  ForwardTrace trace{{{"start", s.csq(), s.pair()}}, s};
  while (!trace.terminal.history().empty()) {
    const auto& hist = trace.terminal.history();
    const auto& ex = trace.terminal.lattice().exceptionals();
    const AppliedStep* pick = nullptr;
    for (auto it = hist.rbegin(); it != hist.rend() && pick == nullptr; ++it) {
      if (!ex[it->record].real) pick = &*it;
    }
    if (pick == nullptr) pick = &hist.back();
    const std::string label = "undo " + pick->step.ToString();
    MmpState next = ContractExceptional(trace.terminal, pick->record);
    if (next.csq() < trace.terminal.csq()) {
      throw Error(ErrorCode::kDomain, "(C^2) decreased along a forward step");
    }
    trace.entries.push_back({label, next.csq(), next.pair()});
    trace.terminal = std::move(next);
  }
  return trace;
}

std::vector<TraceEntry> SimulateInverse(const EndStateKind& k, const std::vector<Step>& steps) {
  MmpState s = MmpState::FromEndState(k);
  std::vector<TraceEntry> out{{k.ToString(), s.csq(), s.pair()}};
  for (const Step& step : steps) {
    s = ApplyInverseStep(s, step);
    out.push_back({step.ToString(), s.csq(), s.pair()});
  }
  return out;
}

}  // namespace rcurve
