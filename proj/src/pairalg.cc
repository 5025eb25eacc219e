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

#include "rcurve/pairalg.h"

#include <sstream>
#include <tuple>
#include <utility>

#include "rcurve/error.h"

namespace rcurve {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kSideRequired: return "SideRequired";
    case ErrorCode::kSideForbidden: return "SideForbidden";
    case ErrorCode::kNotComessatti: return "NotComessatti";
    case ErrorCode::kTableMismatch: return "TableMismatch";
    case ErrorCode::kInvalidComplex: return "InvalidComplex";
    case ErrorCode::kNotEmbedded: return "NotEmbedded";
    case ErrorCode::kNoSuchNode: return "NoSuchNode";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNonIntegralClass: return "NonIntegralClass";
    case ErrorCode::kDomain: return "DomainError";
    case ErrorCode::kParity: return "ParityError";
    case ErrorCode::kNotContractible: return "NotContractible";
    case ErrorCode::kMinusThreeOutOfScope: return "MinusThreeOutOfScope";
    case ErrorCode::kOutOfScope: return "OutOfScope";
    case ErrorCode::kFitFailure: return "FitFailure";
    case ErrorCode::kNoWitness: return "NoWitness";
  }
  return "Unknown";
}

std::string_view SideName(Side side) {
  switch (side) {
    case Side::kLeft: return "L";
    case Side::kRight: return "R";
    case Side::kAny: return "Any";
  }
  return "Any";
}

// ---------------------------------------------------------------------------
// ClosedSurface

ClosedSurface ClosedSurface::Orientable(int genus) {
  if (genus < 0) throw Error(ErrorCode::kDomain, "negative genus");
  return ClosedSurface(true, genus);
}

ClosedSurface ClosedSurface::NonOrientable(int crosscaps) {
  if (crosscaps < 1) {
    throw Error(ErrorCode::kDomain, "non-orientable surface needs crosscaps >= 1");
  }
  return ClosedSurface(false, crosscaps);
}

ClosedSurface ClosedSurface::FromEuler(int euler, bool orientable) {
  if (orientable) {
    if (euler > 2 || (2 - euler) % 2 != 0) {
      throw Error(ErrorCode::kDomain, "no orientable surface with this Euler characteristic");
    }
    return Orientable((2 - euler) / 2);
  }
  return NonOrientable(2 - euler);
}

std::string ClosedSurface::ToString() const {
  if (orientable_) {
    if (n_ == 0) return "S2";
    if (n_ == 1) return "T2";
    return std::to_string(n_) + "T2";
  }
  if (n_ == 1) return "RP2";
  if (n_ == 2) return "K";
  return std::to_string(n_) + "RP2";
}

std::strong_ordering operator<=>(const ClosedSurface& a,
                                 const ClosedSurface& b) {
  if (a.orientable_ != b.orientable_) {
    return a.orientable_ ? std::strong_ordering::less
                         : std::strong_ordering::greater;
  }
  // Higher Euler characteristic sorts first.
  return b.euler() <=> a.euler();
}

ClosedSurface SurfaceSum(const ClosedSurface& a, const ClosedSurface& b) {
  const int euler = a.euler() + b.euler() - 2;
  return ClosedSurface::FromEuler(euler, a.orientable() && b.orientable());
}

// ---------------------------------------------------------------------------
// TopPair

TopPair TopPair::MakeSeparating(ClosedSurface a, ClosedSurface b) {
  if (b < a) std::swap(a, b);
  return TopPair(Separating{a, b});
}

TopPair TopPair::MakeOneSided(ClosedSurface cap) {
  return TopPair(OneSided{cap});
}

TopPair TopPair::MakeNonSepTwoSided(ClosedSurface cap, bool total_orientable) {
  return TopPair(NonSepTwoSided{cap, total_orientable && cap.orientable()});
}

std::string_view TopPair::VariantName() const {
  switch (value_.index()) {
    case 0: return "Separating";
    case 1: return "OneSided";
    default: return "NonSepTwoSided";
  }
}

namespace {

std::string SummandSuffix(const ClosedSurface& s) {
  if (s == ClosedSurface::Sphere()) return "";
  return "#" + s.ToString();
}

auto OrderKey(const TopPair& p) {
  const auto& v = p.value();
  ClosedSurface a = ClosedSurface::Sphere();
  ClosedSurface b = ClosedSurface::Sphere();
  bool flag = false;
  if (const auto* s = std::get_if<Separating>(&v)) {
    a = s->first;
    b = s->second;
  } else if (const auto* o = std::get_if<OneSided>(&v)) {
    a = o->cap;
  } else {
    const auto& n = std::get<NonSepTwoSided>(v);
    a = n.cap;
    flag = n.total_orientable;
  }
  return std::make_tuple(v.index(), a, b, flag);
}

}  // namespace

std::string TopPair::ToString() const {
  if (const auto* s = std::get_if<Separating>(&value_)) {
    if (s->first == ClosedSurface::Sphere() &&
        s->second == ClosedSurface::Torus()) {
      return "(T2,null)";
    }
    std::string out;
    if (s->first != ClosedSurface::Sphere()) out += s->first.ToString() + "#";
    out += "(S2,l)";
    out += SummandSuffix(s->second);
    return out;
  }
  if (const auto* o = std::get_if<OneSided>(&value_)) {
    return "(RP2,l)" + SummandSuffix(o->cap);
  }
  const auto& n = std::get<NonSepTwoSided>(value_);
  if (n.total_orientable) return "(T2,l)" + SummandSuffix(n.cap);
  return "(K,f)" + SummandSuffix(n.cap);
}

std::strong_ordering operator<=>(const TopPair& a, const TopPair& b) {
  return OrderKey(a) <=> OrderKey(b);
}

namespace named {
TopPair SphereLine() {
  return TopPair::MakeSeparating(ClosedSurface::Sphere(), ClosedSurface::Sphere());
}
TopPair TorusLine() {
  return TopPair::MakeNonSepTwoSided(ClosedSurface::Sphere(), true);
}
TopPair TorusNull() {
  return TopPair::MakeSeparating(ClosedSurface::Torus(), ClosedSurface::Sphere());
}
TopPair KleinLine() {
  return TopPair::MakeOneSided(ClosedSurface::ProjectivePlane());
}
TopPair KleinFiber() {
  return TopPair::MakeNonSepTwoSided(ClosedSurface::Sphere(), false);
}
TopPair ProjectiveLine() { return TopPair::MakeOneSided(ClosedSurface::Sphere()); }
}  // namespace named

int EulerChar(const TopPair& p) {
  const auto& v = p.value();
  if (const auto* s = std::get_if<Separating>(&v)) {
    return s->first.euler() + s->second.euler() - 2;
  }
  if (const auto* o = std::get_if<OneSided>(&v)) return o->cap.euler() - 1;
  return std::get<NonSepTwoSided>(v).cap.euler() - 2;
}

int Complexity(const TopPair& p) { return 2 - EulerChar(p); }

ClosedSurface UnderlyingSurface(const TopPair& p) {
  const auto& v = p.value();
  if (const auto* s = std::get_if<Separating>(&v)) {
    return SurfaceSum(s->first, s->second);
  }
  if (const auto* o = std::get_if<OneSided>(&v)) {
    return SurfaceSum(ClosedSurface::ProjectivePlane(), o->cap);
  }
  const auto& n = std::get<NonSepTwoSided>(v);
  return SurfaceSum(n.cap, n.total_orientable ? ClosedSurface::Torus()
                                              : ClosedSurface::Klein());
}

TopPair SumSurface(const TopPair& p, const ClosedSurface& x, Side side) {
  const auto& v = p.value();
  if (const auto* s = std::get_if<Separating>(&v)) {
    switch (side) {
      case Side::kLeft:
        return TopPair::MakeSeparating(SurfaceSum(s->first, x), s->second);
      case Side::kRight:
        return TopPair::MakeSeparating(s->first, SurfaceSum(s->second, x));
      case Side::kAny:
        if (x == ClosedSurface::Sphere()) return p;
        throw Error(ErrorCode::kSideRequired,
                    "connected sum with " + x.ToString() +
                        " on a separating pair needs a side");
    }
  }
  if (side != Side::kAny) {
    throw Error(ErrorCode::kSideForbidden,
                "side given for a pair with connected complement " + p.ToString());
  }
  if (const auto* o = std::get_if<OneSided>(&v)) {
    return TopPair::MakeOneSided(SurfaceSum(o->cap, x));
  }
  const auto& n = std::get<NonSepTwoSided>(v);
  return TopPair::MakeNonSepTwoSided(SurfaceSum(n.cap, x),
                                     n.total_orientable && x.orientable());
}

TopPair SumProjectiveLine(const TopPair& p) {
  const auto& v = p.value();
  // (S2,l)#(RP2,l) ~ (RP2,l), extended to both sides by locality.
  if (const auto* s = std::get_if<Separating>(&v)) {
    return TopPair::MakeOneSided(SurfaceSum(s->first, s->second));
  }
  // (RP2,l)#(RP2,l) ~ (K,f).
  if (const auto* o = std::get_if<OneSided>(&v)) {
    return TopPair::MakeNonSepTwoSided(o->cap, false);
  }
  // (K,f)#(RP2,l) ~ (RP2,l)#T2 and (T2,l)#(RP2,l) ~ (K,l)#RP2.
  const auto& n = std::get<NonSepTwoSided>(v);
  return TopPair::MakeOneSided(SurfaceSum(
      n.cap, n.total_orientable ? ClosedSurface::Klein() : ClosedSurface::Torus()));
}

// ---------------------------------------------------------------------------
// Words

std::string_view BaseTokenName(BaseToken t) {
  switch (t) {
    case BaseToken::kS2L: return "S2L";
    case BaseToken::kT2L: return "T2L";
    case BaseToken::kKL: return "KL";
    case BaseToken::kKF: return "KF";
    case BaseToken::kRP2L: return "RP2L";
    case BaseToken::kT2Null: return "T2NULL";
  }
  return "S2L";
}

TopPair BasePair(BaseToken t) {
  switch (t) {
    case BaseToken::kS2L: return named::SphereLine();
    case BaseToken::kT2L: return named::TorusLine();
    case BaseToken::kKL: return named::KleinLine();
    case BaseToken::kKF: return named::KleinFiber();
    case BaseToken::kRP2L: return named::ProjectiveLine();
    case BaseToken::kT2Null: return named::TorusNull();
  }
  return named::SphereLine();
}

TopPair Normalize(const PairWord& w) {
  TopPair p = BasePair(w.base);
  const bool sided = p.is_separating() && w.rp2l_count == 0;
  for (const Summand& s : w.summands) {
    if (s.side != Side::kAny && !sided) {
      throw Error(ErrorCode::kSideForbidden,
                  "side tags need a separating base and no (RP2,l) summands");
    }
  }
  for (int i = 0; i < w.rp2l_count; ++i) p = SumProjectiveLine(p);
  if (!sided) {
    for (const Summand& s : w.summands) p = SumSurface(p, s.surface, Side::kAny);
    return p;
  }
  // Accumulate per side so that Left/Right keep referring to the base sides
  // even when the stored order of the sides changes.
  const Separating& base = p.separating();
  ClosedSurface left = base.first;
  ClosedSurface right = base.second;
  for (const Summand& s : w.summands) {
    switch (s.side) {
      case Side::kLeft: left = SurfaceSum(left, s.surface); break;
      case Side::kRight: right = SurfaceSum(right, s.surface); break;
      case Side::kAny:
        if (s.surface != ClosedSurface::Sphere()) {
          throw Error(ErrorCode::kSideRequired,
                      "summand " + s.surface.ToString() +
                          " on a separating pair needs a side");
        }
        break;
    }
  }
  return TopPair::MakeSeparating(left, right);
}

namespace {

void AppendSurface(std::vector<Summand>& out, const ClosedSurface& s, Side side) {
  if (s.orientable()) {
    for (int i = 0; i < s.genus(); ++i) out.push_back({ClosedSurface::Torus(), side});
  } else {
    for (int i = 0; i < s.crosscaps(); ++i) {
      out.push_back({ClosedSurface::ProjectivePlane(), side});
    }
  }
}

}  // namespace

PairWord CanonicalWord(const TopPair& p) {
  PairWord w;
  const auto& v = p.value();
  if (const auto* s = std::get_if<Separating>(&v)) {
    w.base = BaseToken::kS2L;
    AppendSurface(w.summands, s->first, Side::kLeft);
    AppendSurface(w.summands, s->second, Side::kRight);
  } else if (const auto* o = std::get_if<OneSided>(&v)) {
    w.base = BaseToken::kRP2L;
    AppendSurface(w.summands, o->cap, Side::kAny);
  } else {
    const auto& n = std::get<NonSepTwoSided>(v);
    w.base = n.total_orientable ? BaseToken::kT2L : BaseToken::kKF;
    AppendSurface(w.summands, n.cap, Side::kAny);
  }
  return w;
}

// ---------------------------------------------------------------------------
// Case split

bool ComessattiRealizable(const TopPair& p) {
  const ClosedSurface s = UnderlyingSurface(p);
  return !s.orientable() || s.genus() <= 1;
}

CaseLabel ClassifyCase(const TopPair& p) {
  if (!ComessattiRealizable(p)) {
    throw Error(ErrorCode::kNotComessatti,
                "underlying surface " + UnderlyingSurface(p).ToString() +
                    " is not the real locus of a rational surface");
  }
  const auto& v = p.value();
  if (const auto* s = std::get_if<Separating>(&v)) {
    const ClosedSurface& a = s->first;
    const ClosedSurface& b = s->second;
    if (a.orientable() && b.orientable()) {
      if (a.genus() == 0 && b.genus() == 0) return {PairCase::kSphereLine};
      return {PairCase::kTorusNull};
    }
    if (b.orientable() || a.orientable()) {
      // Stored order puts orientable sides first.
      const ClosedSurface& o = a.orientable() ? a : b;
      const ClosedSurface& n = a.orientable() ? b : a;
      if (o.genus() == 0) {
        return {PairCase::kSeparatingCrosscaps, 0, 0, n.crosscaps(), 0};
      }
      return {PairCase::kSeparatingGenus, 0, o.genus(), n.crosscaps(), 0};
    }
    return {PairCase::kSeparatingCrosscaps, 0, 0, a.crosscaps(), b.crosscaps()};
  }
  if (const auto* o = std::get_if<OneSided>(&v)) {
    if (o->cap.orientable() && o->cap.genus() > 0) {
      return {PairCase::kOneSidedGenus, 0, o->cap.genus()};
    }
    return {PairCase::kOneSidedCrosscaps, o->cap.crosscaps()};
  }
  const auto& n = std::get<NonSepTwoSided>(v);
  if (n.total_orientable) return {PairCase::kTorusLine};
  if (n.cap.orientable() && n.cap.genus() > 0) {
    return {PairCase::kFiberGenus, 0, n.cap.genus()};
  }
  return {PairCase::kFiberCrosscaps, n.cap.crosscaps()};
}

std::string CaseLabel::Template() const {
  switch (kind) {
    case PairCase::kSphereLine: return "(S2,l)";
    case PairCase::kTorusLine: return "(T2,l)";
    case PairCase::kTorusNull: return "(T2,null-homotopic)";
    case PairCase::kOneSidedCrosscaps: return "(RP2,l)#rRP2";
    case PairCase::kOneSidedGenus: return "(RP2,l)#gT2";
    case PairCase::kFiberCrosscaps: return "(K,f)#rRP2";
    case PairCase::kFiberGenus: return "(K,f)#gT2";
    case PairCase::kSeparatingCrosscaps: return "r1RP2#(S2,l)#r2RP2";
    case PairCase::kSeparatingGenus: return "r1RP2#(S2,l)#gT2";
  }
  return "";
}

// ---------------------------------------------------------------------------
// Identity tables

namespace {

PairWord Word(BaseToken base, int rp2l, int rp2 = 0, int t2 = 0) {
  PairWord w{base, rp2l, {}};
  for (int i = 0; i < rp2; ++i) w.summands.push_back({ClosedSurface::ProjectivePlane()});
  for (int i = 0; i < t2; ++i) w.summands.push_back({ClosedSurface::Torus()});
  return w;
}

PairIdentity Elementary(std::string text, PairWord lhs, PairWord rhs) {
  PairIdentity id;
  id.text = std::move(text);
  id.parametric = false;
  id.lhs = [lhs](int) { return lhs; };
  id.rhs = [rhs](int) { return rhs; };
  return id;
}

PairIdentity Iterated(std::string text, int r_min, std::function<PairWord(int)> lhs,
                      std::function<PairWord(int)> rhs) {
  PairIdentity id;
  id.text = std::move(text);
  id.r_min = r_min;
  id.lhs = std::move(lhs);
  id.rhs = std::move(rhs);
  return id;
}

}  // namespace

const std::vector<PairIdentity>& ElementaryIdentities() {
  using B = BaseToken;
  static const std::vector<PairIdentity> table = [] {
    std::vector<PairIdentity> t;
    t.push_back(Elementary("(RP2,l)#RP2 ~ (K,l)", Word(B::kRP2L, 0, 1), Word(B::kKL, 0)));
    PairIdentity disputed = Elementary("(T2,l)#RP2 ~ (K,l)#RP2",
                                       Word(B::kT2L, 0, 1), Word(B::kKL, 0, 1));
    disputed.disputed = true;
    disputed.substitute = [](int) { return Word(B::kKF, 0, 1); };
    t.push_back(std::move(disputed));
    t.push_back(Elementary("(T2,l)#(RP2,l) ~ (K,l)#RP2", Word(B::kT2L, 1), Word(B::kKL, 0, 1)));
    t.push_back(Elementary("(K,l)#(RP2,l) ~ (T2,l)#RP2", Word(B::kKL, 1), Word(B::kT2L, 0, 1)));
    t.push_back(Elementary("(S2,l)#(RP2,l) ~ (RP2,l)", Word(B::kS2L, 1), Word(B::kRP2L, 0)));
    t.push_back(Elementary("(RP2,l)#(RP2,l) ~ (K,f)", Word(B::kRP2L, 1), Word(B::kKF, 0)));
    t.push_back(Elementary("(K,f)#(RP2,l) ~ (RP2,l)#T2", Word(B::kKF, 1), Word(B::kRP2L, 0, 0, 1)));
    return t;
  }();
  return table;
}

const std::vector<PairIdentity>& IteratedIdentities() {
  using B = BaseToken;
  static const std::vector<PairIdentity> table = {
      Iterated("(T2,l)#2r(RP2,l) ~ (T2,l)#2rRP2", 0,
               [](int r) { return Word(B::kT2L, 2 * r); },
               [](int r) { return Word(B::kT2L, 0, 2 * r); }),
      Iterated("(T2,l)#(2r+1)(RP2,l) ~ (K,l)#(2r+1)RP2", 0,
               [](int r) { return Word(B::kT2L, 2 * r + 1); },
               [](int r) { return Word(B::kKL, 0, 2 * r + 1); }),
      Iterated("(K,l)#2r(RP2,l) ~ (K,l)#2rRP2", 0,
               [](int r) { return Word(B::kKL, 2 * r); },
               [](int r) { return Word(B::kKL, 0, 2 * r); }),
      Iterated("(K,l)#(2r+1)(RP2,l) ~ (T2,l)#(2r+1)RP2", 0,
               [](int r) { return Word(B::kKL, 2 * r + 1); },
               [](int r) { return Word(B::kT2L, 0, 2 * r + 1); }),
      Iterated("(S2,l)#2r(RP2,l) ~ (K,f)#(r-1)T2", 1,
               [](int r) { return Word(B::kS2L, 2 * r); },
               [](int r) { return Word(B::kKF, 0, 0, r - 1); }),
      Iterated("(S2,l)#(2r+1)(RP2,l) ~ (RP2,l)#rT2", 0,
               [](int r) { return Word(B::kS2L, 2 * r + 1); },
               [](int r) { return Word(B::kRP2L, 0, 0, r); }),
      Iterated("(RP2,l)#2r(RP2,l) ~ (RP2,l)#rT2", 0,
               [](int r) { return Word(B::kRP2L, 2 * r); },
               [](int r) { return Word(B::kRP2L, 0, 0, r); }),
      Iterated("(RP2,l)#(2r+1)(RP2,l) ~ (K,f)#rT2", 0,
               [](int r) { return Word(B::kRP2L, 2 * r + 1); },
               [](int r) { return Word(B::kKF, 0, 0, r); }),
      Iterated("(K,f)#2r(RP2,l) ~ (K,f)#rT2", 0,
               [](int r) { return Word(B::kKF, 2 * r); },
               [](int r) { return Word(B::kKF, 0, 0, r); }),
      Iterated("(K,f)#(2r+1)(RP2,l) ~ (RP2,l)#(r+1)T2", 0,
               [](int r) { return Word(B::kKF, 2 * r + 1); },
               [](int r) { return Word(B::kRP2L, 0, 0, r + 1); }),
  };
  return table;
}

DiffeoTableReport VerifyDiffeoTable(int r_max) {
  if (r_max < 0) throw Error(ErrorCode::kDomain, "r_max must be >= 0");
  DiffeoTableReport report;
  auto check = [&](const PairIdentity& id, int r) {
    const TopPair lhs = Normalize(id.lhs(r));
    const TopPair rhs = Normalize(id.rhs(r));
    if (id.disputed) {
      const TopPair sub = Normalize(id.substitute(r));
      report.discrepancies.push_back(
          {id.text, lhs, rhs, FormatPairWord(id.substitute(r)), sub, sub == lhs});
      return;
    }
    report.checks.push_back({id.text, r, lhs, rhs, lhs == rhs});
    if (lhs != rhs) {
      std::ostringstream msg;
      msg << "identity '" << id.text << "' fails at r=" << r << ": "
          << lhs.ToString() << " vs " << rhs.ToString();
      throw Error(ErrorCode::kTableMismatch, msg.str());
    }
  };
  for (const PairIdentity& id : ElementaryIdentities()) check(id, 0);
  for (const PairIdentity& id : IteratedIdentities()) {
    for (int r = id.r_min; r <= r_max; ++r) check(id, r);
  }
  return report;
}

}  // namespace rcurve
