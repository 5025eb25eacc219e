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

#include <gtest/gtest.h>

#include "oracles.h"
#include "rcurve/cellsurf.h"
#include "rcurve/error.h"

namespace rcurve {
namespace {

const ClosedSurface kS2 = ClosedSurface::Sphere();
const ClosedSurface kT2 = ClosedSurface::Torus();
const ClosedSurface kRP2 = ClosedSurface::ProjectivePlane();
const ClosedSurface kK = ClosedSurface::Klein();

ClosedSurface NonOr(int k) { return ClosedSurface::NonOrientable(k); }
ClosedSurface Or(int g) { return ClosedSurface::Orientable(g); }

TopPair OracleNormalize(const std::string& word) {
  const Realized r = Realize(ParsePairWord(word));
  return CanonicalPair(r.surface, r.curve);
}

TEST(ClosedSurfaceTest, NormalForm) {
  EXPECT_EQ(kT2.euler(), 0);
  EXPECT_EQ(NonOr(5).euler(), -3);
  EXPECT_EQ(Or(3).complexity(), 6);
  EXPECT_THROW(ClosedSurface::NonOrientable(0), Error);
  EXPECT_EQ(ClosedSurface::FromEuler(-1, false), NonOr(3));
  EXPECT_LT(Or(2), kRP2);
  EXPECT_LT(kS2, kT2);
}

TEST(ClosedSurfaceTest, Sum) {
  for (const ClosedSurface& x : {kS2, kT2, kRP2, kK, NonOr(4), Or(2)}) {
    EXPECT_EQ(SurfaceSum(kS2, x), x);
  }
  EXPECT_EQ(SurfaceSum(kT2, kRP2), NonOr(3));
  EXPECT_EQ(SurfaceSum(kK, kK), NonOr(4));
}

TEST(ClosedSurfaceTest, KleinSumMatchesGluedPolygons) {
  // K # K from one octagon a b a b~ c d c d~.
  const Realized r = ParseComplex("a b a b~ c d c d~\n");
  EXPECT_EQ(Invariants(r.surface).surface(), SurfaceSum(kK, kK));
}

TEST(ClosedSurfaceTest, ParseSpellings) {
  EXPECT_EQ(ParseClosedSurface("S2"), kS2);
  EXPECT_EQ(ParseClosedSurface("3RP2"), NonOr(3));
  EXPECT_EQ(ParseClosedSurface("K"), kK);
  EXPECT_EQ(ParseClosedSurface("2T2"), Or(2));
  EXPECT_EQ(ParseClosedSurface("NonOr(4)"), NonOr(4));
  EXPECT_EQ(ParseClosedSurface("Or(0)"), kS2);
  for (const char* bad : {"", "0RP2", "NonOr(0)", "X", "Or(-1)", "T3"}) {
    EXPECT_THROW(ParseClosedSurface(bad), Error) << bad;
  }
}

TEST(TopPairTest, NamedPairs) {
  EXPECT_EQ(named::SphereLine(), TopPair::MakeSeparating(kS2, kS2));
  EXPECT_EQ(named::TorusNull(), TopPair::MakeSeparating(kT2, kS2));
  EXPECT_EQ(named::TorusLine(), TopPair::MakeNonSepTwoSided(kS2, true));
  EXPECT_EQ(named::KleinFiber(), TopPair::MakeNonSepTwoSided(kS2, false));
  EXPECT_EQ(named::ProjectiveLine(), TopPair::MakeOneSided(kS2));
  EXPECT_EQ(named::KleinLine(), TopPair::MakeOneSided(kRP2));
}

TEST(TopPairTest, SeparatingSidesAreSorted) {
  EXPECT_EQ(TopPair::MakeSeparating(kRP2, kT2), TopPair::MakeSeparating(kT2, kRP2));
  EXPECT_EQ(TopPair::MakeSeparating(kRP2, kT2).separating().first, kT2);
}

TEST(TopPairTest, TotalOrientableNeedsOrientableCap) {
  const TopPair p = TopPair::MakeNonSepTwoSided(kRP2, true);
  EXPECT_FALSE(p.nonsep().total_orientable);
}

TEST(TopPairTest, EulerAndUnderlying) {
  EXPECT_EQ(EulerChar(named::ProjectiveLine()), 1);
  EXPECT_EQ(EulerChar(named::KleinFiber()), 0);
  EXPECT_EQ(EulerChar(named::TorusNull()), 0);
  EXPECT_EQ(UnderlyingSurface(named::TorusLine()), kT2);
  EXPECT_EQ(UnderlyingSurface(named::KleinLine()), NonOr(2));
  const TopPair kf_t2 = SumSurface(named::KleinFiber(), kT2, Side::kAny);
  EXPECT_EQ(UnderlyingSurface(kf_t2), NonOr(4));
  const Realized r = Realize(ParsePairWord("KF + T2"));
  EXPECT_EQ(Invariants(r.surface).surface(), NonOr(4));
}

TEST(SumSurfaceTest, Examples) {
  EXPECT_EQ(SumSurface(named::SphereLine(), kRP2, Side::kLeft), TopPair::MakeSeparating(NonOr(1), kS2));
  EXPECT_EQ(SumSurface(named::TorusLine(), kRP2, Side::kAny),
            TopPair::MakeNonSepTwoSided(NonOr(1), false));
  EXPECT_EQ(OracleNormalize("T2L + RP2"), TopPair::MakeNonSepTwoSided(NonOr(1), false));
  for (const TopPair& p : {named::SphereLine(), named::KleinFiber(), named::ProjectiveLine()}) {
    EXPECT_EQ(SumSurface(p, kS2, Side::kAny), p);
  }
}

TEST(SumSurfaceTest, SideRules) {
  EXPECT_THROW(SumSurface(named::SphereLine(), kRP2, Side::kAny), Error);
  EXPECT_THROW(SumSurface(named::KleinFiber(), kRP2, Side::kLeft), Error);
  try {
    SumSurface(named::SphereLine(), kT2, Side::kAny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSideRequired);
  }
}

TEST(SumProjectiveLineTest, Examples) {
  EXPECT_EQ(SumProjectiveLine(named::KleinLine()), TopPair::MakeNonSepTwoSided(NonOr(1), false));
  TopPair p = named::SphereLine();
  for (int i = 0; i < 4; ++i) p = SumProjectiveLine(p);
  EXPECT_EQ(p, TopPair::MakeNonSepTwoSided(kT2, false));
  for (int r = 0; r <= 5; ++r) {
    TopPair q = named::ProjectiveLine();
    for (int i = 0; i < 2 * r; ++i) q = SumProjectiveLine(q);
    EXPECT_EQ(q, TopPair::MakeOneSided(Or(r))) << r;
  }
}

TEST(PairWordTest, ParseAndFormat) {
  const PairWord w = ParsePairWord("S2L + 2*L:RP2 + R:T2");
  EXPECT_EQ(w.base, BaseToken::kS2L);
  ASSERT_EQ(w.summands.size(), 3u);
  EXPECT_EQ(w.summands[0].side, Side::kLeft);
  EXPECT_EQ(w.summands[2].surface, kT2);
  EXPECT_EQ(ParsePairWord(FormatPairWord(w)), w);
  EXPECT_EQ(ParsePairWord("KF + 3*RP2L").rp2l_count, 3);
  const PairWord big = ParsePairWord("KL + K + 2*3RP2 + 2T2");
  ASSERT_EQ(big.summands.size(), 4u);
  EXPECT_EQ(big.summands[1].surface, NonOr(3));
  EXPECT_EQ(ParsePairWord(FormatPairWord(big)), big);
  EXPECT_EQ(Normalize(big), TopPair::MakeOneSided(NonOr(13)));
  for (const char* bad : {"", "XX", "S2L +", "S2L + 2*", "KF + L:RP2L", "S2L ++ RP2", "S2L + -1*RP2"}) {
    EXPECT_THROW(ParsePairWord(bad), Error) << bad;
  }
}

TEST(NormalizeTest, Examples) {
  EXPECT_EQ(Normalize(ParsePairWord("S2L + 1*RP2L")), named::ProjectiveLine());
  EXPECT_EQ(Normalize(ParsePairWord("RP2L + RP2")), named::KleinLine());
  EXPECT_EQ(Normalize(ParsePairWord("KF + 2*RP2L")), TopPair::MakeNonSepTwoSided(kT2, false));
}

TEST(NormalizeTest, SideTags) {
  EXPECT_EQ(Normalize(ParsePairWord("T2NULL + L:RP2")), TopPair::MakeSeparating(kRP2, kT2));
  EXPECT_EQ(Normalize(ParsePairWord("T2NULL + R:RP2")), TopPair::MakeSeparating(kS2, NonOr(3)));
  try {
    Normalize(ParsePairWord("KF + L:RP2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSideForbidden);
  }
  try {
    Normalize(ParsePairWord("S2L + RP2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSideRequired);
  }
  EXPECT_THROW(Normalize(ParsePairWord("S2L + RP2L + L:RP2")), Error);
}

TEST(NormalizeTest, CanonicalWordRoundTrip) {
  for (const TopPair& p : AllPairs(8)) {
    EXPECT_EQ(Normalize(CanonicalWord(p)), p) << p.ToString();
  }
}

TEST(ClassifyCaseTest, Examples) {
  const CaseLabel a = ClassifyCase(TopPair::MakeOneSided(NonOr(3)));
  EXPECT_EQ(a.kind, PairCase::kOneSidedCrosscaps);
  EXPECT_EQ(a.r, 3);
  const CaseLabel b = ClassifyCase(TopPair::MakeNonSepTwoSided(Or(2), false));
  EXPECT_EQ(b.kind, PairCase::kFiberGenus);
  EXPECT_EQ(b.g, 2);
  EXPECT_EQ(ClassifyCase(TopPair::MakeSeparating(kT2, kS2)).kind, PairCase::kTorusNull);
  EXPECT_THROW(ClassifyCase(TopPair::MakeSeparating(Or(2), kS2)), Error);
}

TEST(ClassifyCaseTest, EveryRealizablePairHasACase) {
  for (const TopPair& p : AllPairs(10)) {
    if (!ComessattiRealizable(p)) continue;
    const CaseLabel c = ClassifyCase(p);
    EXPECT_EQ(Normalize(ParsePairWord(FormatPairWord(CanonicalWord(p)))), p);
    EXPECT_FALSE(c.Template().empty());
  }
}

TEST(ComessattiTest, Examples) {
  EXPECT_TRUE(ComessattiRealizable(named::SphereLine()));
  EXPECT_FALSE(ComessattiRealizable(TopPair::MakeSeparating(Or(2), kS2)));
  EXPECT_TRUE(ComessattiRealizable(TopPair::MakeOneSided(NonOr(6))));
}

TEST(DiffeoTableTest, IteratedIdentitiesHold) {
  const DiffeoTableReport report = VerifyDiffeoTable(8);
  EXPECT_FALSE(report.checks.empty());
  for (const IdentityCheck& c : report.checks) EXPECT_TRUE(c.holds) << c.line << " r=" << c.r;
  EXPECT_EQ(IteratedIdentities().size(), 10u);
}

TEST(DiffeoTableTest, Examples) {
  // (S2,l)#2r(RP2,l) ~ (K,f)#(r-1)T2 at r = 1.
  TopPair p = named::SphereLine();
  p = SumProjectiveLine(SumProjectiveLine(p));
  EXPECT_EQ(p, named::KleinFiber());
  // (K,f)#(2r+1)(RP2,l) ~ (RP2,l)#(r+1)T2 at r = 0.
  EXPECT_EQ(SumProjectiveLine(named::KleinFiber()), TopPair::MakeOneSided(kT2));
}

TEST(DiffeoTableTest, DisputedLineIsReported) {
  const DiffeoTableReport report = VerifyDiffeoTable(0);
  ASSERT_EQ(report.discrepancies.size(), 1u);
  const Discrepancy& d = report.discrepancies[0];
  EXPECT_TRUE(d.lhs.is_two_sided());
  EXPECT_TRUE(d.rhs.is_one_sided());
  EXPECT_TRUE(d.substitute_holds);
  EXPECT_EQ(d.substitute, d.lhs);
  // The oracle agrees on sidedness of both printed sides.
  int disputed = 0;
  for (const PairIdentity& id : ElementaryIdentities()) {
    if (!id.disputed) continue;
    ++disputed;
    const Realized l = Realize(id.lhs(0));
    const Realized r = Realize(id.rhs(0));
    EXPECT_NE(CanonicalPair(l.surface, l.curve), CanonicalPair(r.surface, r.curve));
    const Realized s = Realize(id.substitute(0));
    EXPECT_EQ(CanonicalPair(l.surface, l.curve), CanonicalPair(s.surface, s.curve));
  }
  EXPECT_EQ(disputed, 1);
}

}  // namespace
}  // namespace rcurve
