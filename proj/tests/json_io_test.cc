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

#include "rcurve/json_io.h"

#include <gtest/gtest.h>

#include "oracles.h"

namespace rcurve {
namespace {

template <typename T>
T RoundTrip(const T& x) {
  return ParseJson<T>(Json(x).dump());
}

TEST(JsonTest, Scalars) {
  for (const Rational& q : {Rational(0), Rational(-3), Rational(1, 7), Rational(-5, 2)}) {
    EXPECT_EQ(RoundTrip(q), q);
  }
  EXPECT_EQ(Json(Rational(1, 7)).get<std::string>(), "1/7");
  EXPECT_EQ(Json(Rational(4)).get<int>(), 4);
  for (const ClosedSurface& s : {ClosedSurface::Sphere(), ClosedSurface::Orientable(3),
                                 ClosedSurface::NonOrientable(5), ClosedSurface::Klein()}) {
    EXPECT_EQ(RoundTrip(s), s);
  }
}

TEST(JsonTest, PairsAndWords) {
  for (const TopPair& p : AllPairs(8)) EXPECT_EQ(RoundTrip(p), p);
  const PairWord w = ParsePairWord("T2NULL + L:RP2 + 2*R:T2");
  EXPECT_EQ(RoundTrip(w), w);
}

TEST(JsonTest, LatticeAndClasses) {
  PicLattice lat(SurfaceBase::Quadric());
  DivClass c = DivClass::Integral({1, 1});
  std::tie(lat, c) = lat.BlowUp(RealCenter{false, Side::kLeft}, c);
  std::tie(lat, c) = lat.BlowUp(ConjPairCenter{true}, c);
  std::tie(lat, c) = lat.BlowUp(RealCenter{true, Side::kAny}, c, 2, false);
  EXPECT_EQ(RoundTrip(lat), lat);
  EXPECT_EQ(RoundTrip(c), c);
  DivClass q{{Rational(1, 2), Rational(-3)}};
  EXPECT_EQ(RoundTrip(q), q);
}

TEST(JsonTest, LatticeRejectsTamperedGram) {
  Json j = PicLattice(SurfaceBase::P2());
  j["gram"][0][0] = 2;
  EXPECT_THROW(ParseJson<PicLattice>(j.dump()), Error);
}

TEST(JsonTest, MmpTypes) {
  for (const Step& s : {Step{StepKind::kConjPairOffCurve}, Step{StepKind::kRealOnCurve},
                        Step{StepKind::kRealOffCurve, Side::kRight}}) {
    EXPECT_EQ(RoundTrip(s), s);
  }
  for (const EndStateKind& k :
       {EndStateKind::P1BundleSection(-3), EndStateKind::P2Conic(),
        EndStateKind::ConicBundleFiber(ClosedSurface::Sphere()),
        EndStateKind::MinusOne(ClosedSurface::NonOrientable(3)), EndStateKind::MinusTwoKFT2()}) {
    EXPECT_EQ(RoundTrip(k), k);
  }
  for (const TraceEntry& e : SimulateInverse(EndStateKind::P2Conic(),
                                             {Step{StepKind::kRealOffCurve, Side::kLeft},
                                              Step{StepKind::kConjPairOnCurve}})) {
    EXPECT_EQ(RoundTrip(e), e);
  }
  const MinusTwoSolution s{-1, -2, 6, -4};
  EXPECT_EQ(RoundTrip(s), s);
}

TEST(JsonTest, TablesAndPlans) {
  EXPECT_EQ(RoundTrip(GoldenTable()), GoldenTable());
  EXPECT_EQ(ParseJson<TypeTable>(GoldenTableJson()), GoldenTable());
  for (const ParamFamily& f : {ParamFamily::Crosscaps(BaseToken::kKF, 1), ParamFamily::Separating(1),
                               ParamFamily::Single(named::KleinFiber())}) {
    EXPECT_EQ(RoundTrip(f), f);
  }
  for (const TopPair& p : AllPairs(8)) {
    if (!ComessattiRealizable(p) || p == named::TorusNull()) continue;
    const ConstructionPlan plan = Witness(p);
    EXPECT_EQ(RoundTrip(plan), plan);
  }
}

TEST(JsonTest, Reports) {
  for (int d = 3; d <= 9; ++d) EXPECT_EQ(RoundTrip(CobleExample(d)), CobleExample(d));
  EXPECT_EQ(RoundTrip(TowerExample(4)), TowerExample(4));
  EXPECT_EQ(RoundTrip(P1xP1ParityCheck(4, 2)), P1xP1ParityCheck(4, 2));
  EXPECT_EQ(RoundTrip(Dp2Check(3)), Dp2Check(3));
  EXPECT_EQ(RoundTrip(VerifyDiffeoTable(3)), VerifyDiffeoTable(3));
  for (const TopPair& p : AllPairs(8)) {
    if (ComessattiRealizable(p)) EXPECT_EQ(RoundTrip(ClassifyCase(p)), ClassifyCase(p));
    EXPECT_EQ(RoundTrip(ClassifyApproximable(p)), ClassifyApproximable(p));
  }
  const ContractResult m2 = ContractCurve(MmpState::FromEndState(EndStateKind::MinusTwoKFT2()));
  EXPECT_EQ(RoundTrip(std::get<MinusTwoReport>(m2)), std::get<MinusTwoReport>(m2));
  const ContractResult m1 =
      ContractCurve(MmpState::FromEndState(EndStateKind::MinusOne(ClosedSurface::NonOrientable(2))));
  EXPECT_EQ(RoundTrip(std::get<ContractedSurface>(m1)), std::get<ContractedSurface>(m1));
}

TEST(JsonTest, Errors) {
  try {
    ParseJson<TopPair>("{\"variant\": \"Bogus\"}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kParse);
  }
  EXPECT_THROW(ParseJson<TypeTable>("[1,"), Error);
  EXPECT_THROW(ParseJson<Rational>("\"1/0\""), Error);
  EXPECT_THROW(ParseJson<ClosedSurface>("\"XYZ\""), Error);
}

}  // namespace
}  // namespace rcurve
