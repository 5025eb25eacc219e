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

#include <gtest/gtest.h>

#include "oracles.h"
#include "rcurve/error.h"

namespace rcurve {
namespace {

TopPair P(const std::string& word) { return Normalize(ParsePairWord(word)); }

std::set<TopPair> RowInstances(const TableRow& row, int bound) {
  std::set<TopPair> out;
  for (const ParamFamily& f : row.families) {
    for (const TopPair& p : f.Instances(bound)) out.insert(p);
  }
  return out;
}

const TableRow& RowLabelled(const TypeTable& t, const std::string& label) {
  for (const TableRow& r : t.rows) {
    if (r.label == label) return r;
  }
  throw std::out_of_range(label);
}

TEST(ReachableTest, Examples) {
  // The smallest bound that admits (K,f) and (T2,l).
  EXPECT_TRUE(ReachableTypes(2, 0).contains(named::SphereLine()));
  const std::set<TopPair> zero = ReachableTypes(0, 2);
  EXPECT_TRUE(zero.contains(named::KleinFiber()));
  EXPECT_TRUE(zero.contains(named::TorusLine()));
  EXPECT_TRUE(zero.contains(named::SphereLine()));
  const std::set<TopPair> six = ReachableTypes(6, 2);
  EXPECT_TRUE(six.contains(named::TorusLine()));
  EXPECT_FALSE(six.contains(named::SphereLine()));
  try {
    ReachableTypes(-3, 4);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kOutOfScope);
  }
}

TEST(ReachableTest, MatchesStateSearch) {
  for (int e = -2; e <= 6; ++e) {
    for (int bound = 0; bound <= 6; bound += 2) {
      EXPECT_EQ(ReachableTypes(e, bound), oracle::ReachableBySearch(e, bound))
          << "e=" << e << " bound=" << bound;
    }
  }
}

TEST(ReachableTest, MonotoneDescent) {
  for (int e = -2; e <= 8; ++e) {
    const std::set<TopPair> lower = ReachableTypes(e, 10);
    for (const TopPair& p : ReachableTypes(e + 2, 10)) EXPECT_TRUE(lower.contains(p)) << e;
  }
}

TEST(ReachableTest, EverythingIsRealizableAndTorusNullNever) {
  for (int e = -2; e <= 8; ++e) {
    for (int bound = 0; bound <= 12; bound += 3) {
      for (const TopPair& p : ReachableTypes(e, bound)) {
        EXPECT_TRUE(ComessattiRealizable(p)) << p.ToString();
        EXPECT_LE(Complexity(p), bound);
      }
      EXPECT_FALSE(ReachableTypes(e, bound).contains(named::TorusNull()));
    }
  }
}

TEST(NewTypesTest, Examples) {
  for (int bound = 4; bound <= 10; bound += 2) {
    EXPECT_EQ(NewTypes(-2, bound),
              (std::set<TopPair>{SumSurface(named::KleinFiber(), ClosedSurface::Torus(), Side::kAny)}));
  }
  EXPECT_TRUE(NewTypes(3, 10).empty());
  EXPECT_EQ(NewTypes(1, 10), (std::set<TopPair>{named::ProjectiveLine()}));
}

TEST(TableTest, Rows) {
  const TypeTable t = TheoremTable(-2, 8, 10);
  EXPECT_EQ(RowLabelled(t, "even>=6").families,
            (std::vector<ParamFamily>{ParamFamily::Crosscaps(BaseToken::kT2L, 0)}));
  EXPECT_EQ(RowLabelled(t, "4").families, (std::vector<ParamFamily>{ParamFamily::Separating(1)}));
  EXPECT_EQ(RowLabelled(t, "-1").families,
            (std::vector<ParamFamily>{ParamFamily::Single(P("RP2L + T2"))}));
  EXPECT_TRUE(RowLabelled(t, "3").families.empty());
  EXPECT_EQ(t, GoldenTable());
}

TEST(TableTest, RowsAreDisjoint) {
  const TypeTable t = GoldenTable();
  for (size_t i = 0; i < t.rows.size(); ++i) {
    for (size_t j = i + 1; j < t.rows.size(); ++j) {
      for (const TopPair& p : RowInstances(t.rows[i], 12)) {
        EXPECT_FALSE(RowInstances(t.rows[j], 12).contains(p)) << p.ToString();
      }
    }
  }
}

TEST(TableTest, ZeroRowIsUnionOfEvenRows) {
  const TypeTable t = GoldenTable();
  for (int bound = 2; bound <= 10; bound += 2) {
    std::set<TopPair> expected;
    for (const char* label : {"0", "2", "4", "even>=6"}) {
      for (const TopPair& p : RowInstances(RowLabelled(t, label), bound)) expected.insert(p);
    }
    EXPECT_EQ(ReachableTypes(0, bound), expected) << bound;
  }
}

TEST(TableTest, EveryRowIsReachedByStepsFromAbove) {
  // Each row at e is contained in the reachable set at e and in none above.
  const TypeTable t = GoldenTable();
  for (int e = -2; e <= 8; ++e) {
    const std::string label = e >= 5 ? (e % 2 == 0 ? "even>=6" : "odd>=5") : std::to_string(e);
    const std::set<TopPair> row = RowInstances(RowLabelled(t, label), 10);
    const std::set<TopPair> here = ReachableTypes(e, 10);
    for (const TopPair& p : row) EXPECT_TRUE(here.contains(p)) << label << " " << p.ToString();
    if (e < 5) {
      EXPECT_EQ(NewTypes(e, 10), row) << label;
    }
  }
}

TEST(FitTest, Failures) {
  std::set<TopPair> junk;
  for (int g = 1; g <= 3; ++g) {
    junk.insert(TopPair::MakeSeparating(ClosedSurface::NonOrientable(g), ClosedSurface::Orientable(g)));
  }
  try {
    FitFamilies(junk, 12);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFitFailure);
  }
  EXPECT_TRUE(FitFamilies({}, 10).empty());
}

TEST(FamilyTest, InstancesAndNames) {
  const ParamFamily sep = ParamFamily::Separating(1);
  EXPECT_EQ(sep.Template(), "r1*RP2 + S2L + r2*RP2");
  EXPECT_EQ(sep.Constraint(), "r1+r2>=1");
  for (const TopPair& p : sep.Instances(6)) {
    EXPECT_TRUE(p.is_separating());
    EXPECT_FALSE(p.separating().first.orientable() && p.separating().second.orientable());
  }
  const ParamFamily kl = ParamFamily::Crosscaps(BaseToken::kKL, 0);
  EXPECT_EQ(kl.Instances(6).size(), 5u);  // r = 0..4
  EXPECT_TRUE(kl.Instances(6).contains(named::KleinLine()));
}

TEST(ClassifyTest, Examples) {
  EXPECT_EQ(ClassifyApproximable(named::TorusNull()).kind, Approximability::kNotApproximable);
  const Verdict v = ClassifyApproximable(P("KF + 5*RP2"));
  EXPECT_EQ(v.kind, Approximability::kApproximable);
  ASSERT_TRUE(v.witness.has_value());
  EXPECT_EQ(ReplayPlan(*v.witness), P("KF + 5*RP2"));
  EXPECT_EQ(ClassifyApproximable(TopPair::MakeSeparating(ClosedSurface::Orientable(2), ClosedSurface::Sphere()))
                .kind,
            Approximability::kNotRealizable);
}

TEST(WitnessTest, Examples) {
  const ConstructionPlan a = Witness(P("RP2L + 3*RP2"));
  EXPECT_EQ(a.kind, ConstructionPlan::Kind::kMmp);
  EXPECT_EQ(ReplayPlan(a), P("RP2L + 3*RP2"));
  const TopPair g2 = TopPair::MakeSeparating(ClosedSurface::NonOrientable(1), ClosedSurface::Orientable(2));
  const ConstructionPlan b = Witness(g2);
  EXPECT_EQ(b.kind, ConstructionPlan::Kind::kDoubleEquator);
  EXPECT_EQ(b.g, 2);
  EXPECT_EQ(ReplayPlan(b), g2);
  const ConstructionPlan c = Witness(named::SphereLine());
  ASSERT_TRUE(c.end_state.has_value());
  EXPECT_EQ(*c.end_state, EndStateKind::QuadricSection());
  EXPECT_TRUE(c.steps.empty());
  try {
    Witness(named::TorusNull());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoWitness);
  }
  try {
    Witness(TopPair::MakeSeparating(ClosedSurface::Orientable(2), ClosedSurface::Sphere()));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotComessatti);
  }
}

TEST(WitnessTest, EveryRealizablePairReplays) {
  int n = 0;
  for (const TopPair& p : AllPairs(10)) {
    if (!ComessattiRealizable(p) || p == named::TorusNull()) continue;
    const ConstructionPlan plan = Witness(p);
    EXPECT_EQ(plan.target, p);
    EXPECT_EQ(ReplayPlan(plan), p) << plan.ToString();
    if (plan.kind == ConstructionPlan::Kind::kMmp) {
      // Independent replay through the step calculus.
      MmpState s = MmpState::FromEndState(*plan.end_state);
      for (const Step& st : plan.steps) s = ApplyInverseStep(s, st);
      EXPECT_EQ(s.pair(), p);
    }
    ++n;
  }
  EXPECT_EQ(n, 84);
}

}  // namespace
}  // namespace rcurve
