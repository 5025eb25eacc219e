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

#include <algorithm>
#include <map>
#include <sstream>

#include "rcurve/cellsurf.h"
#include "rcurve/error.h"

namespace rcurve {
namespace {

const ClosedSurface kRP2 = ClosedSurface::ProjectivePlane();

ClosedSurface Crosscaps(int n) {
  return n == 0 ? ClosedSurface::Sphere() : ClosedSurface::NonOrientable(n);
}

ClosedSurface AddCrosscaps(ClosedSurface s, int n) {
  for (int i = 0; i < n; ++i) s = SurfaceSum(s, kRP2);
  return s;
}

struct EndState {
  EndStateKind kind;
  TopPair pair;
  std::optional<std::pair<ClosedSurface, ClosedSurface>> sides;
  bool section = false;  // csq may be any value of its parity
};

std::vector<EndState> Catalog(int bound) {
  std::vector<EndStateKind> kinds{
      EndStateKind::QuadricSection(),
      EndStateKind::P2Line(),
      EndStateKind::P2Conic(),
      EndStateKind::ConicBundleFiber(ClosedSurface::Sphere()),
      EndStateKind::ConicBundleFiber(ClosedSurface::Torus()),
      EndStateKind::ConicBundleFiber(ClosedSurface::Klein()),
      EndStateKind::P1BundleSection(0),
      EndStateKind::P1BundleSection(1),
      EndStateKind::MinusOne(ClosedSurface::Sphere()),
      EndStateKind::MinusOne(ClosedSurface::Torus()),
  };
  for (int r = 1; r <= std::max(bound, 1); ++r) {
    kinds.push_back(EndStateKind::MinusOne(ClosedSurface::NonOrientable(r)));
  }
  kinds.push_back(EndStateKind::MinusTwoKFT2());
  std::vector<EndState> out;
  for (const EndStateKind& k : kinds) {
    const MmpState s = MmpState::FromEndState(k);
    out.push_back({k, s.pair(), s.end_sides(), k.tag == EndStateTag::kP1BundleSection});
  }
  return out;
}

int FixedMaxCsq() {
  int best = -2;
  for (const EndState& e : Catalog(1)) {
    if (!e.section) best = std::max(best, e.kind.csq);
  }
  return best;
}

// Calls emit(pair, r1, left, right, any) for every outcome of r1 pair-sums
// followed by crosscap sums that stays within bound.
template <typename Emit>
void Expand(const EndState& es, int r1, int bound, Emit emit) {
  TopPair p = es.pair;
  if (es.sides && r1 == 0) {
    for (int a = 0; a <= bound; ++a) {
      for (int b = 0; b <= bound; ++b) {
        const TopPair q = TopPair::MakeSeparating(AddCrosscaps(es.sides->first, a),
                                                  AddCrosscaps(es.sides->second, b));
        if (Complexity(q) > bound) break;
        emit(q, r1, a, b, 0);
      }
    }
    return;
  }
  for (int i = 0; i < r1; ++i) p = SumProjectiveLine(p);
  for (int k = 0; Complexity(p) <= bound; ++k) {
    emit(p, r1, 0, 0, k);
    p = SumSurface(p, kRP2, Side::kAny);
  }
}

std::set<TopPair> Reachable(int e, int bound, const std::vector<EndState>& catalog) {
  std::set<TopPair> out;
  for (const EndState& es : catalog) {
    for (int r1 = 0; r1 <= bound; ++r1) {
      bool allowed;
      if (es.section) {
        // A section of any csq >= e + r1 with the right parity exists.
        allowed = ((es.kind.csq - e - r1) % 2 + 2) % 2 == 0;
      } else {
        allowed = r1 <= es.kind.csq - e && (es.kind.csq - e - r1) % 2 == 0;
      }
      if (!allowed) continue;
      Expand(es, r1, bound, [&](const TopPair& p, int, int, int, int) { out.insert(p); });
    }
  }
  return out;
}

std::string Join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace

std::set<TopPair> ReachableTypes(int e, int bound) {
  if (e < -2) throw Error(ErrorCode::kOutOfScope, "(C^2) < -2 is out of scope");
  if (bound < 0) throw Error(ErrorCode::kDomain, "bound must be non-negative");
  return Reachable(e, bound, Catalog(bound));
}

std::set<TopPair> NewTypes(int e, int bound) {
  std::set<TopPair> here = ReachableTypes(e, bound);
  for (const TopPair& p : ReachableTypes(e + 2, bound)) here.erase(p);
  return here;
}

// ---------------------------------------------------------------------------

ParamFamily ParamFamily::Single(TopPair p) {
  ParamFamily f;
  f.kind = Kind::kSingle;
  f.pair = std::move(p);
  return f;
}

ParamFamily ParamFamily::Crosscaps(BaseToken base, int r_min) {
  ParamFamily f;
  f.kind = Kind::kCrosscaps;
  f.base = base;
  f.r_min = r_min;
  return f;
}

ParamFamily ParamFamily::Separating(int r_min) {
  ParamFamily f;
  f.kind = Kind::kSeparating;
  f.r_min = r_min;
  return f;
}

std::set<TopPair> ParamFamily::Instances(int bound) const {
  std::set<TopPair> out;
  switch (kind) {
    case Kind::kSingle:
      if (Complexity(*pair) <= bound) out.insert(*pair);
      break;
    case Kind::kCrosscaps: {
      TopPair p = BasePair(base);
      for (int r = 0; Complexity(p) <= bound; ++r) {
        if (r >= r_min) out.insert(p);
        p = SumSurface(p, kRP2, Side::kAny);
      }
      break;
    }
    case Kind::kSeparating:
      for (int r1 = 0; r1 <= bound; ++r1) {
        for (int r2 = 0; r1 + r2 <= bound; ++r2) {
          if (r1 + r2 >= r_min) out.insert(TopPair::MakeSeparating(rcurve::Crosscaps(r1),
                                                                   rcurve::Crosscaps(r2)));
        }
      }
      break;
  }
  return out;
}

std::string ParamFamily::Template() const {
  switch (kind) {
    case Kind::kSingle: return FormatPairWord(CanonicalWord(*pair));
    case Kind::kCrosscaps: return std::string(BaseTokenName(base)) + " + r*RP2";
    case Kind::kSeparating: return "r1*RP2 + S2L + r2*RP2";
  }
  return "?";
}

std::string ParamFamily::Constraint() const {
  switch (kind) {
    case Kind::kSingle: return "";
    case Kind::kCrosscaps: return "r>=" + std::to_string(r_min);
    case Kind::kSeparating: return "r1+r2>=" + std::to_string(r_min);
  }
  return "";
}

std::string ParamFamily::ToString() const {
  const std::string c = Constraint();
  return c.empty() ? Template() : Template() + ", " + c;
}

std::string TypeTable::ToString() const {
  std::ostringstream out;
  for (const TableRow& row : rows) {
    std::vector<std::string> fams;
    for (const ParamFamily& f : row.families) fams.push_back(f.ToString());
    out << row.label << ": " << (fams.empty() ? "nothing new" : Join(fams, "; ")) << '\n';
  }
  return out.str();
}

std::vector<ParamFamily> FitFamilies(const std::set<TopPair>& types, int bound) {
  std::vector<ParamFamily> candidates;
  for (BaseToken b : {BaseToken::kT2L, BaseToken::kKL, BaseToken::kRP2L, BaseToken::kKF}) {
    for (int r0 = 0; r0 <= 2; ++r0) candidates.push_back(ParamFamily::Crosscaps(b, r0));
  }
  for (int r0 = 1; r0 <= 2; ++r0) candidates.push_back(ParamFamily::Separating(r0));

  std::set<TopPair> remaining = types;
  std::vector<ParamFamily> out;
  for (const ParamFamily& f : candidates) {
    const std::set<TopPair> inst = f.Instances(bound);
    if (inst.size() < 3) continue;
    if (!std::includes(remaining.begin(), remaining.end(), inst.begin(), inst.end())) continue;
    out.push_back(f);
    for (const TopPair& p : inst) remaining.erase(p);
  }
  if (remaining.size() > 2) {
    std::vector<std::string> names;
    for (const TopPair& p : remaining) names.push_back(p.ToString());
    throw Error(ErrorCode::kFitFailure, "no family covers {" + Join(names, ", ") + "}");
  }
  for (const TopPair& p : remaining) out.push_back(ParamFamily::Single(p));
  return out;
}

TypeTable TheoremTable(int e_min, int e_max, int bound) {
  if (e_min < -2) throw Error(ErrorCode::kOutOfScope, "(C^2) < -2 is out of scope");
  if (e_max < e_min) throw Error(ErrorCode::kDomain, "e_max < e_min");
  const std::vector<EndState> catalog = Catalog(bound);
  std::map<int, std::set<TopPair>> cache;
  auto reach = [&](int e) -> const std::set<TopPair>& {
    auto it = cache.find(e);
    if (it == cache.end()) it = cache.emplace(e, Reachable(e, bound, catalog)).first;
    return it->second;
  };
  const int fixed_max = FixedMaxCsq();
  int stable[2];
  for (int parity = 0; parity < 2; ++parity) {
    stable[parity] = fixed_max + 1 + ((fixed_max + 1 - parity) % 2 + 2) % 2;
  }
  TypeTable table;
  // Even row first, then odd, as printed.
  for (int parity : {0, 1}) {
    const int s = stable[parity];
    if (s > e_max || s < e_min) continue;
    for (int e = s + 2; e <= e_max + 4; e += 2) {
      if (reach(e) != reach(s)) {
        throw Error(ErrorCode::kFitFailure, "types for e = " + std::to_string(e) +
                                                " differ from e = " + std::to_string(s));
      }
    }
    table.rows.push_back({std::string(parity == 0 ? "even" : "odd") + ">=" + std::to_string(s),
                          FitFamilies(reach(s), bound)});
  }
  for (int e = std::min(e_max, fixed_max); e >= e_min; --e) {
    std::set<TopPair> fresh = reach(e);
    for (const TopPair& p : reach(e + 2)) fresh.erase(p);
    table.rows.push_back({std::to_string(e), FitFamilies(fresh, bound)});
  }
  return table;
}

// ---------------------------------------------------------------------------

std::string ConstructionPlan::ToString() const {
  if (kind == Kind::kDoubleEquator) {
    std::string out = "double equator g=" + std::to_string(g) + ", resolve all nodes";
    if (extra_crosscaps > 0) out += ", " + std::to_string(extra_crosscaps) + " crosscap(s)";
    return out;
  }
  std::vector<std::string> names;
  for (const Step& s : steps) names.push_back(s.ToString());
  return end_state->ToString() + (names.empty() ? "" : "; " + Join(names, ", "));
}

TopPair ReplayPlan(const ConstructionPlan& plan) {
  if (plan.kind == ConstructionPlan::Kind::kMmp) {
    if (!plan.end_state) throw Error(ErrorCode::kDomain, "plan without end state");
    MmpState s = MmpState::FromEndState(*plan.end_state);
    for (const Step& step : plan.steps) s = ApplyInverseStep(s, step);
    return s.pair();
  }
  Realized r = ResolveAllNodes(EquatorDoubleCurve(plan.g).realized);
  if (plan.extra_crosscaps > 0) {
    int anchor = -1;
    for (const CutComponent& c : CutAlong(r.surface, r.curve)) {
      if (!c.orientable) anchor = c.faces.front();
    }
    if (anchor < 0) throw Error(ErrorCode::kDomain, "no non-orientable side");
    for (int i = 0; i < plan.extra_crosscaps; ++i) {
      r = BlowUpPoint(r.surface, r.curve, BlowUpLocation::kOffCurve, anchor);
    }
  }
  return CanonicalPair(r.surface, r.curve);
}

ConstructionPlan Witness(const TopPair& p) {
  if (!ComessattiRealizable(p)) {
    throw Error(ErrorCode::kNotComessatti, p.ToString() + " is not the real locus of a rational surface");
  }
  const CaseLabel label = ClassifyCase(p);
  ConstructionPlan plan;
  plan.target = p;
  if (label.kind == PairCase::kSeparatingGenus) {
    plan.kind = ConstructionPlan::Kind::kDoubleEquator;
    plan.g = label.g;
    plan.extra_crosscaps = label.r1 - 1;
    if (ReplayPlan(plan) != p) throw Error(ErrorCode::kNoWitness, "replay mismatch for " + p.ToString());
    return plan;
  }
  const int target = Complexity(p);
  std::optional<ConstructionPlan> best;
  int best_steps = 0;
  for (const EndState& es : Catalog(target)) {
    const int n = target - Complexity(es.pair);
    if (n < 0 || (best && n >= best_steps)) continue;
    for (int r1 = 0; r1 <= n && !(best && n >= best_steps); ++r1) {
      Expand(es, r1, target, [&](const TopPair& q, int r, int a, int b, int k) {
        if (q != p || (best && n >= best_steps)) return;
        ConstructionPlan cand;
        cand.target = p;
        cand.end_state = es.kind;
        cand.steps.assign(r, Step{StepKind::kRealOnCurve, Side::kAny});
        cand.steps.insert(cand.steps.end(), a, Step{StepKind::kRealOffCurve, Side::kLeft});
        cand.steps.insert(cand.steps.end(), b, Step{StepKind::kRealOffCurve, Side::kRight});
        cand.steps.insert(cand.steps.end(), k, Step{StepKind::kRealOffCurve, Side::kAny});
        if (ReplayPlan(cand) != p) return;
        best = std::move(cand);
        best_steps = n;
      });
    }
  }
  if (!best) throw Error(ErrorCode::kNoWitness, "no construction found for " + p.ToString());
  return *best;
}

std::string_view ApproximabilityName(Approximability a) {
  switch (a) {
    case Approximability::kApproximable: return "Approximable";
    case Approximability::kNotApproximable: return "NotApproximable";
    case Approximability::kNotRealizable: return "NotRealizable";
  }
  return "?";
}

Verdict ClassifyApproximable(const TopPair& p) {
  if (!ComessattiRealizable(p)) {
    return {Approximability::kNotRealizable,
            UnderlyingSurface(p).ToString() + " is not the real locus of a rational surface",
            std::nullopt};
  }
  if (p == named::TorusNull()) {
    return {Approximability::kNotApproximable, "torus with a null-homotopic curve", std::nullopt};
  }
  return {Approximability::kApproximable, "", Witness(p)};
}

std::vector<TopPair> AllPairs(int bound) {
  std::vector<ClosedSurface> surfaces;
  for (int g = 0; 2 * g <= bound; ++g) surfaces.push_back(ClosedSurface::Orientable(g));
  for (int k = 1; k <= bound; ++k) surfaces.push_back(ClosedSurface::NonOrientable(k));
  std::set<TopPair> out;
  for (const ClosedSurface& a : surfaces) {
    for (const ClosedSurface& b : surfaces) {
      out.insert(TopPair::MakeSeparating(a, b));
    }
    out.insert(TopPair::MakeOneSided(a));
    out.insert(TopPair::MakeNonSepTwoSided(a, true));
    out.insert(TopPair::MakeNonSepTwoSided(a, false));
  }
  std::vector<TopPair> result;
  for (const TopPair& p : out) {
    if (Complexity(p) <= bound) result.push_back(p);
  }
  return result;
}

}  // namespace rcurve
