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

// Independent reference computations used by the tests.

#ifndef RCURVE_TESTS_ORACLES_H_
#define RCURVE_TESTS_ORACLES_H_

#include <map>
#include <ostream>
#include <set>
#include <tuple>
#include <utility>
#include <vector>

#include "rcurve/cellsurf.h"
#include "rcurve/enumerate.h"
#include "rcurve/mmp.h"
#include "rcurve/pairalg.h"

namespace rcurve {

inline void PrintTo(const TopPair& p, std::ostream* os) { *os << p.ToString(); }
inline void PrintTo(const ClosedSurface& s, std::ostream* os) { *os << s.ToString(); }

}  // namespace rcurve

namespace rcurve::oracle {

inline long long Binomial(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  long long out = 1;
  for (long long i = 1; i <= k; ++i) out = out * (n - k + i) / i;
  return out;
}

// Plane curve of degree d with binom(d-1,2) nodes, each blown up once.
inline long long CobleSelfIntersection(long long d) { return d * d - 4 * Binomial(d - 1, 2); }

inline long long P1xP1Genus(long long a1, long long a2) { return (a1 - 1) * (a2 - 1); }

struct MinusTwo {
  int a, b, d;
  bool operator<(const MinusTwo& o) const {
    return std::tie(a, b, d) < std::tie(o.a, o.b, o.d);
  }
  bool operator==(const MinusTwo& o) const = default;
};

// Direct search of a(ad - 4b) = -2 over a wider box than the library uses.
inline std::set<MinusTwo> MinusTwoBruteForce(bool irreducible_only) {
  std::set<MinusTwo> out;
  for (int a = -50; a <= 0; ++a) {
    for (int d = 1; d <= 9; ++d) {
      for (int b = -200; b <= 200; ++b) {
        if (a * (a * d - 4 * b) != -2) continue;
        // C = aK + bF with K^2 = d, K.F = -2, F^2 = 0.
        const int csq = a * a * d - 4 * a * b;
        const int ck = a * d - 2 * b;
        if (irreducible_only && csq + ck != -2) continue;
        out.insert({a, b, d});
      }
    }
  }
  return out;
}

// Surface classification from (orientable, euler).
inline ClosedSurface FromEuler(int euler, bool orientable) {
  return orientable ? ClosedSurface::Orientable((2 - euler) / 2)
                    : ClosedSurface::NonOrientable(2 - euler);
}

// Reachable pairs at (C^2) = e by breadth-first search over actual mmp
// states: every interleaving of inverse steps from every end state whose
// csq lies in [e, e + bound + 1].
inline std::set<TopPair> ReachableBySearch(int e, int bound) {
  std::vector<EndStateKind> ends{EndStateKind::QuadricSection(),
                                 EndStateKind::P2Line(),
                                 EndStateKind::P2Conic(),
                                 EndStateKind::ConicBundleFiber(ClosedSurface::Sphere()),
                                 EndStateKind::ConicBundleFiber(ClosedSurface::Torus()),
                                 EndStateKind::ConicBundleFiber(ClosedSurface::Klein()),
                                 EndStateKind::MinusOne(ClosedSurface::Sphere()),
                                 EndStateKind::MinusOne(ClosedSurface::Torus()),
                                 EndStateKind::MinusTwoKFT2()};
  for (int r = 1; r <= bound; ++r) ends.push_back(EndStateKind::MinusOne(ClosedSurface::NonOrientable(r)));
  for (int c = e; c <= e + bound + 1; ++c) ends.push_back(EndStateKind::P1BundleSection(c));

  std::set<TopPair> out;
  for (const EndStateKind& k : ends) {
    const MmpState start = MmpState::FromEndState(k);
    if (start.csq() < e || Complexity(start.pair()) > bound) continue;
    // Key on what determines the future: pair, csq and remaining sides.
    std::set<std::tuple<TopPair, long long, std::string>> seen;
    std::vector<MmpState> frontier{start};
    while (!frontier.empty()) {
      std::vector<MmpState> next;
      for (const MmpState& s : frontier) {
        if (s.csq() == e) out.insert(s.pair());
        std::vector<Step> steps{{StepKind::kRealOnCurve, Side::kAny},
                                {StepKind::kConjPairOnCurve, Side::kAny}};
        if (s.pair().is_separating()) {
          steps.push_back({StepKind::kRealOffCurve, Side::kLeft});
          steps.push_back({StepKind::kRealOffCurve, Side::kRight});
        } else {
          steps.push_back({StepKind::kRealOffCurve, Side::kAny});
        }
        for (const Step& st : steps) {
          MmpState t = ApplyInverseStep(s, st);
          if (t.csq() < e || Complexity(t.pair()) > bound) continue;
          // Separating pairs remember the per-side sums through history.
          std::string key;
          if (t.pair().is_separating() && t.end_sides()) {
            int left = 0, right = 0;
            for (const AppliedStep& h : t.history()) {
              if (h.step.side == Side::kLeft) ++left;
              if (h.step.side == Side::kRight) ++right;
            }
            key = std::to_string(left) + "/" + std::to_string(right);
          }
          if (seen.insert({t.pair(), t.csq(), key}).second) next.push_back(std::move(t));
        }
      }
      frontier = std::move(next);
    }
  }
  return out;
}

}  // namespace rcurve::oracle

#endif  // RCURVE_TESTS_ORACLES_H_
