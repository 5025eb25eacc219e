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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "rcurve/cellsurf.h"
#include "rcurve/enumerate.h"
#include "rcurve/error.h"
#include "rcurve/mmp.h"
#include "rcurve/pairalg.h"
#include "rcurve/piclattice.h"

namespace rcurve {
namespace {

using Clock = std::chrono::steady_clock;

double SecondsSince(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// Collects mismatches; a criterion passes when none were recorded.
class Check {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && failures_.size() < 10) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  bool ok() const { return failed_ == 0; }
  int checks() const { return checks_; }
  std::string Summary() const {
    std::ostringstream out;
    out << checks_ << " checks, " << failed_ << " failed";
    for (const std::string& f : failures_) out << "\n    " << f;
    return out.str();
  }

 private:
  int checks_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
};

TopPair OracleOf(const PairWord& w) {
  const Realized r = Realize(w);
  return CanonicalPair(r.surface, r.curve);
}

// 1. Golden table.
std::string GoldenTableCriterion(Check& c) {
  const auto t0 = Clock::now();
  const TypeTable t = TheoremTable(-2, 8, 10);
  const double secs = SecondsSince(t0);
  c.Expect(t == GoldenTable(), "emitted table differs from the built-in table:\n" + t.ToString());
  c.Expect(t.rows.size() == 9, "expected 9 rows");
  c.Expect(secs < 10.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream out;
  out << "table(-2..8, bound 10) matches in " << secs << " s";
  return out.str();
}

// 2. Iterated identities.
std::string IdentityCriterion(Check& c) {
  const DiffeoTableReport report = VerifyDiffeoTable(8);
  int iterated = 0;
  for (const IdentityCheck& ic : report.checks) {
    c.Expect(ic.holds, "pairalg: " + ic.line + " at r=" + std::to_string(ic.r));
  }
  for (const PairIdentity& id : IteratedIdentities()) {
    ++iterated;
    for (int r = id.r_min; r <= 3; ++r) {
      const TopPair l = OracleOf(id.lhs(r));
      const TopPair rh = OracleOf(id.rhs(r));
      c.Expect(l == rh, "oracle: " + id.text + " at r=" + std::to_string(r) + ": " +
                            l.ToString() + " vs " + rh.ToString());
      c.Expect(l == Normalize(id.lhs(r)), "oracle/pairalg disagree on " + id.text);
    }
  }
  c.Expect(iterated == 10, "expected 10 iterated identities");
  for (const PairIdentity& id : ElementaryIdentities()) {
    if (id.disputed) continue;
    c.Expect(OracleOf(id.lhs(0)) == OracleOf(id.rhs(0)), "oracle: elementary " + id.text);
  }
  c.Expect(report.discrepancies.size() == 1, "expected exactly one discrepancy");
  std::ostringstream out;
  out << iterated << " iterated identities hold (pairalg r<=8, oracle r<=3)";
  for (const Discrepancy& d : report.discrepancies) {
    const PairIdentity* id = nullptr;
    for (const PairIdentity& e : ElementaryIdentities()) {
      if (e.text == d.line) id = &e;
    }
    c.Expect(id != nullptr, "discrepancy line not found: " + d.line);
    if (id == nullptr) continue;
    const TopPair ol = OracleOf(id->lhs(0));
    const TopPair orh = OracleOf(id->rhs(0));
    const TopPair os = OracleOf(id->substitute(0));
    c.Expect(ol != orh, "disputed line unexpectedly holds in the oracle");
    c.Expect(ol == os && d.substitute_holds, "substitute identity fails");
    out << "\n    DISCREPANCY: \"" << d.line << "\": lhs " << ol.ToString() << " (two-sided="
        << ol.is_two_sided() << "), rhs " << orh.ToString() << " (two-sided=" << orh.is_two_sided()
        << "); substitute \"" << d.substitute_line << "\" holds in pairalg and oracle";
  }
  return out.str();
}

// Ordered summand lists of total complexity <= budget.
void SummandLists(int budget, std::vector<ClosedSurface>& cur,
                  std::vector<std::vector<ClosedSurface>>& out) {
  out.push_back(cur);
  for (int c = 1; c <= budget; ++c) {
    std::vector<ClosedSurface> opts{ClosedSurface::NonOrientable(c)};
    if (c % 2 == 0) opts.push_back(ClosedSurface::Orientable(c / 2));
    for (const ClosedSurface& s : opts) {
      cur.push_back(s);
      SummandLists(budget - c, cur, out);
      cur.pop_back();
    }
  }
}

// 3. Exhaustive oracle equivalence.
std::string OracleCriterion(Check& c) {
  constexpr int kBudget = 8;
  const auto t0 = Clock::now();
  const std::vector<BaseToken> bases = {BaseToken::kS2L, BaseToken::kT2L, BaseToken::kKL,
                                        BaseToken::kKF, BaseToken::kRP2L, BaseToken::kT2Null};
  long words = 0;
  for (const BaseToken base : bases) {
    for (int k = 0; k <= kBudget; ++k) {
      std::vector<ClosedSurface> cur;
      std::vector<std::vector<ClosedSurface>> lists;
      SummandLists(kBudget - k, cur, lists);
      for (bool with_sphere : {false, true}) {
        for (std::vector<ClosedSurface> list : lists) {
          if (with_sphere) list.push_back(ClosedSurface::Sphere());
          const bool sided = BasePair(base).is_separating() && k == 0;
          const int n = static_cast<int>(list.size());
          const int assignments = sided ? 1 << n : 1;
          for (int mask = 0; mask < assignments; ++mask) {
            PairWord w;
            w.base = base;
            w.rp2l_count = k;
            for (int i = 0; i < n; ++i) {
              Side side = Side::kAny;
              if (sided) side = (mask >> i) & 1 ? Side::kRight : Side::kLeft;
              w.summands.push_back({list[i], side});
            }
            ++words;
            const std::string text = FormatPairWord(w);
            try {
              const TopPair expected = Normalize(w);
              const TopPair got = OracleOf(w);
              c.Expect(expected == got,
                       text + ": pairalg " + expected.ToString() + ", oracle " + got.ToString());
            } catch (const Error& e) {
              c.Expect(false, text + ": " + e.what());
            }
          }
        }
      }
    }
  }
  const double secs = SecondsSince(t0);
  c.Expect(secs < 60.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream out;
  out << words << " words of summand complexity <= " << kBudget << " agree in " << secs << " s";
  return out.str();
}

// 4. Classifier and witnesses.
std::string ClassifierCriterion(Check& c) {
  c.Expect(ClassifyApproximable(named::TorusNull()).kind == Approximability::kNotApproximable,
           "torus-null pair is not NotApproximable");
  std::vector<TopPair> pool;
  for (const TopPair& p : AllPairs(10)) {
    if (ComessattiRealizable(p) && p != named::TorusNull()) pool.push_back(p);
  }
  std::mt19937 rng(20261015);
  std::uniform_int_distribution<size_t> pick(0, pool.size() - 1);
  int mismatches = 0;
  for (int i = 0; i < 200; ++i) {
    const TopPair& p = pool[pick(rng)];
    const Verdict v = ClassifyApproximable(p);
    bool ok = v.kind == Approximability::kApproximable && v.witness.has_value();
    if (ok) {
      const ConstructionPlan& plan = *v.witness;
      TopPair replayed = named::SphereLine();
      if (plan.kind == ConstructionPlan::Kind::kMmp) {
        MmpState s = MmpState::FromEndState(*plan.end_state);
        for (const Step& st : plan.steps) s = ApplyInverseStep(s, st);
        replayed = s.pair();
      } else {
        Realized r = ResolveAllNodes(EquatorDoubleCurve(plan.g).realized);
        for (int k = 0; k < plan.extra_crosscaps; ++k) {
          int anchor = -1;
          for (const CutComponent& comp : CutAlong(r.surface, r.curve)) {
            if (!comp.orientable) anchor = comp.faces.front();
          }
          r = BlowUpPoint(r.surface, r.curve, BlowUpLocation::kOffCurve, anchor);
        }
        replayed = CanonicalPair(r.surface, r.curve);
      }
      ok = replayed == p;
    }
    if (!ok) ++mismatches;
    c.Expect(ok, "witness for " + p.ToString() + " does not replay");
  }
  std::ostringstream out;
  out << "torus-null NotApproximable; 200 witnesses sampled from " << pool.size()
      << " realizable pairs, " << mismatches << " mismatches";
  return out.str();
}

// 5. Lattice numerics.
std::string LatticeCriterion(Check& c) {
  const PicLattice q(SurfaceBase::P1xP1());
  for (int a1 = 0; a1 <= 10; ++a1) {
    for (int a2 = 0; a2 <= 10; ++a2) {
      c.Expect(q.ArithmeticGenus(DivClass::Integral({a1, a2})) == oracle::P1xP1Genus(a1, a2),
               "p_a(" + std::to_string(a1) + "," + std::to_string(a2) + ")");
    }
  }
  const CobleResult d6 = CobleExample(6);
  c.Expect(d6.csq == -4 && d6.k_coeff == Rational(0) && d6.verdict == CobleVerdict::kTrivial, "coble d=6");
  const CobleResult d7 = CobleExample(7);
  c.Expect(d7.csq == -11 && d7.k_coeff == Rational(1, 7) && d7.verdict == CobleVerdict::kAmple,
           "coble d=7");
  for (int d = 3; d <= 9; ++d) {
    const CobleResult r = CobleExample(d);
    c.Expect(r.identity_holds, "Q-divisor identity at d=" + std::to_string(d));
    c.Expect(r.csq == oracle::CobleSelfIntersection(d), "coble csq at d=" + std::to_string(d));
  }
  std::set<oracle::MinusTwo> raw, filtered;
  for (const MinusTwoSolution& s : MinusTwoSolutions(false)) raw.insert({s.a, s.b, s.d});
  for (const MinusTwoSolution& s : MinusTwoSolutions(true)) filtered.insert({s.a, s.b, s.d});
  c.Expect(raw == std::set<oracle::MinusTwo>{{-1, -1, 2}, {-1, -2, 6}}, "raw (-2) solutions");
  c.Expect(filtered == std::set<oracle::MinusTwo>{{-1, -1, 2}}, "filtered (-2) solutions");
  c.Expect(raw == oracle::MinusTwoBruteForce(false), "(-2) solutions vs wide search");
  for (int a = 1; a <= 20; ++a) {
    const Dp2Result r = Dp2Check(a);
    c.Expect(r.forced_real_singular && r.self_pairing == 2LL * a * (a - 1),
             "dp2 a=" + std::to_string(a));
  }
  return "p_a grid, coble d=3..9, (-2) solutions and dp2 a=1..20 exact";
}

// 6. Round trips.
std::string RoundTripCriterion(Check& c) {
  std::mt19937 rng(6);
  auto random_end = [&]() -> EndStateKind {
    switch (rng() % 8) {
      case 0: return EndStateKind::P1BundleSection(static_cast<int>(rng() % 11) - 3);
      case 1: return EndStateKind::P2Conic();
      case 2: return EndStateKind::QuadricSection();
      case 3: return EndStateKind::P2Line();
      case 4: {
        const ClosedSurface t[] = {ClosedSurface::Torus(), ClosedSurface::Klein(), ClosedSurface::Sphere()};
        return EndStateKind::ConicBundleFiber(t[rng() % 3]);
      }
      case 5: return EndStateKind::MinusOne(ClosedSurface::NonOrientable(1 + static_cast<int>(rng() % 4)));
      case 6: return EndStateKind::MinusOne(ClosedSurface::Torus());
      default: return EndStateKind::MinusTwoKFT2();
    }
  };
  auto consistent = [&](const MmpState& s, const std::string& where) {
    c.Expect(s.lattice().Intersect(s.curve(), s.curve()) == Rational(s.csq()), where + ": csq");
    c.Expect((s.csq() % 2 == 0) == s.pair().is_two_sided(), where + ": parity vs sidedness");
    c.Expect(UnderlyingSurface(s.pair()) == s.lattice().RealTopology(), where + ": real topology");
    c.Expect(EulerChar(s.pair()) == s.lattice().RealTopology().euler(), where + ": euler");
  };
  for (int trial = 0; trial < 1000; ++trial) {
    const EndStateKind end = random_end();
    const MmpState start = MmpState::FromEndState(end);
    MmpState s = start;
    const std::string tag = "trial " + std::to_string(trial) + " from " + end.ToString();
    consistent(s, tag);
    const int len = static_cast<int>(rng() % 13);
    for (int i = 0; i < len; ++i) {
      Step st;
      switch (rng() % 4) {
        case 0: st = {StepKind::kConjPairOffCurve}; break;
        case 1: st = {StepKind::kConjPairOnCurve}; break;
        case 2: st = {StepKind::kRealOnCurve}; break;
        default:
          st = {StepKind::kRealOffCurve,
                s.pair().is_separating() ? (rng() % 2 ? Side::kLeft : Side::kRight) : Side::kAny};
      }
      s = ApplyInverseStep(s, st);
      consistent(s, tag + " step " + std::to_string(i));
    }
    const ForwardTrace t = RunForward(s);
    bool monotone = true;
    for (size_t i = 1; i < t.entries.size(); ++i) monotone &= t.entries[i].csq >= t.entries[i - 1].csq;
    c.Expect(monotone, tag + ": csq decreases along the forward trace");
    c.Expect(t.entries.size() == static_cast<size_t>(len + 1), tag + ": trace length");
    c.Expect(t.terminal.lattice() == start.lattice(), tag + ": lattice not restored");
    c.Expect(t.terminal.curve() == start.curve(), tag + ": curve not restored");
    c.Expect(t.terminal.pair() == start.pair() && t.terminal.csq() == start.csq(),
             tag + ": pair/csq not restored");
    consistent(t.terminal, tag + " terminal");
  }
  return "1000 random sequences of length <= 12 round-trip";
}

// 7. Double equator.
std::string EquatorCriterion(Check& c) {
  const auto t0 = Clock::now();
  for (int g = 1; g <= 3; ++g) {
    const DoubleEquator d = EquatorDoubleCurve(g);
    c.Expect(d.crossings == 2 * g + 1 && CrossingCount(d.realized.surface, d.realized.curve) == 2 * g + 1,
             "crossings at g=" + std::to_string(g));
    const Realized r = ResolveAllNodes(d.realized);
    const TopPair p = CanonicalPair(r.surface, r.curve);
    c.Expect(p == TopPair::MakeSeparating(ClosedSurface::NonOrientable(1), ClosedSurface::Orientable(g)),
             "resolved pair at g=" + std::to_string(g) + ": " + p.ToString());
  }
  const double secs = SecondsSince(t0);
  c.Expect(secs < 5.0, "runtime " + std::to_string(secs) + " s");
  std::ostringstream out;
  out << "g=1,2,3 resolve to RP2#(S2,l)#gT2 in " << secs << " s";
  return out.str();
}

}  // namespace
}  // namespace rcurve

int main() {
  using rcurve::Check;
  const std::vector<std::pair<std::string, std::function<std::string(Check&)>>> criteria = {
      {"golden table", rcurve::GoldenTableCriterion},
      {"diffeomorphism identities", rcurve::IdentityCriterion},
      {"oracle equivalence", rcurve::OracleCriterion},
      {"approximability classifier", rcurve::ClassifierCriterion},
      {"lattice numerics", rcurve::LatticeCriterion},
      {"mmp round trips", rcurve::RoundTripCriterion},
      {"double equator pipeline", rcurve::EquatorCriterion},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    std::string detail;
    try {
      detail = criteria[i].second(c);
    } catch (const std::exception& e) {
      c.Expect(false, std::string("exception: ") + e.what());
    }
    std::cout << (c.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
              << "): " << detail << " [" << c.Summary() << "]" << std::endl;
    if (!c.ok()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
