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

#ifndef RCURVE_PICLATTICE_H_
#define RCURVE_PICLATTICE_H_

#include <boost/rational.hpp>

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rcurve/pairalg.h"

namespace rcurve {

using Rational = boost::rational<long long>;

std::string RationalToString(const Rational& q);

enum class BaseKind { kP2, kQuadric, kHirzebruch, kP1xP1 };

struct SurfaceBase {
  BaseKind kind = BaseKind::kP2;
  int n = 0;  // Hirzebruch index

  static SurfaceBase P2() { return {BaseKind::kP2, 0}; }
  static SurfaceBase Quadric() { return {BaseKind::kQuadric, 0}; }
  static SurfaceBase Hirzebruch(int n) { return {BaseKind::kHirzebruch, n}; }
  static SurfaceBase P1xP1() { return {BaseKind::kP1xP1, 0}; }

  std::string ToString() const;
  friend bool operator==(const SurfaceBase&, const SurfaceBase&) = default;
};

// Throws kParse.
SurfaceBase ParseSurfaceBase(std::string_view text);

// A class in the lattice basis. Rational coordinates are allowed so that
// Q-divisor identities can be checked exactly.
struct DivClass {
  std::vector<Rational> coords;

  static DivClass Integral(const std::vector<long long>& c);
  int size() const { return static_cast<int>(coords.size()); }
  bool IsIntegral() const;
  bool IsZero() const;
  std::string ToString() const;

  DivClass operator+(const DivClass& o) const;
  DivClass operator-(const DivClass& o) const;
  DivClass operator-() const;
  friend DivClass operator*(const Rational& s, const DivClass& c);
  friend bool operator==(const DivClass&, const DivClass&) = default;
};

struct RealCenter {
  bool on_curve = false;
  Side side = Side::kAny;
};
struct ConjPairCenter {
  bool on_curve = false;
};
using Center = std::variant<RealCenter, ConjPairCenter>;

// Bookkeeping for one blow-up. A conjugate pair owns basis indices
// `index` and `index + 1`.
struct Exceptional {
  bool real = true;
  bool on_curve = false;
  Side side = Side::kAny;
  int index = 0;
  int multiplicity = 0;  // coefficient of each class in the curve, negated
  bool tracked = true;
  friend bool operator==(const Exceptional&, const Exceptional&) = default;
};

class PicLattice {
 public:
  explicit PicLattice(SurfaceBase base);

  const SurfaceBase& base() const { return base_; }
  int rank() const { return static_cast<int>(gram_.size()); }
  int base_rank() const { return base_rank_; }
  const std::vector<std::vector<long long>>& gram() const { return gram_; }
  const std::vector<Exceptional>& exceptionals() const { return exceptionals_; }
  int real_blowups() const;
  int conj_pair_blowups() const;

  DivClass Zero() const;
  DivClass Basis(int i) const;

  // Throws kDimensionMismatch.
  Rational Intersect(const DivClass& a, const DivClass& b) const;
  DivClass CanonicalClass() const;
  // (c.c + c.K)/2 + 1. Throws kNonIntegralClass.
  long long ArithmeticGenus(const DivClass& c) const;
  DivClass Conjugate(const DivClass& c) const;
  ClosedSurface RealTopology() const;

  // The curve class loses `multiplicity` times each new class when the
  // center lies on it.
  std::pair<PicLattice, DivClass> BlowUp(const Center& center, const DivClass& c,
                                         int multiplicity = 1, bool tracked = true) const;
  // Inverse of the blow-up recorded as exceptionals()[k]. Requires each
  // class of the record to be a (-1)-class with K.E = -1; throws
  // kNotContractible otherwise.
  std::pair<PicLattice, DivClass> Contract(int k, const DivClass& c) const;

  std::string ToString() const;
  friend bool operator==(const PicLattice&, const PicLattice&) = default;

 private:
  SurfaceBase base_;
  int base_rank_ = 0;
  std::vector<std::vector<long long>> gram_;
  std::vector<Rational> canonical_;
  std::vector<int> conjugation_;  // permutation of basis indices
  std::vector<Exceptional> exceptionals_;
};

enum class CobleVerdict { kAntiAmpleish, kTrivial, kAmple };
std::string_view CobleVerdictName(CobleVerdict v);

struct CobleResult {
  long long csq = 0;
  Rational k_coeff;
  CobleVerdict verdict = CobleVerdict::kTrivial;
  bool identity_holds = false;  // K + (3/d)C - (1-6/d)E == 0 exactly
  long long p_a = 0;
  int nodes = 0;
  int real_nodes = 0;
  friend bool operator==(const CobleResult&, const CobleResult&) = default;
};

// Plane curve of degree d with binom(d-1,2) nodes blown up. real_nodes
// defaults to the parity of the node count; the rest come in conjugate
// pairs. Throws kDomain for d < 3 or an impossible split.
CobleResult CobleExample(int d, std::optional<int> real_nodes = std::nullopt);

struct NamedCurve {
  std::string name;
  DivClass cls;
  long long self_intersection = 0;
  friend bool operator==(const NamedCurve&, const NamedCurve&) = default;
};

struct TowerResult {
  std::vector<NamedCurve> cycle;
  int minus_one_count = 0;
  bool last_exceptional_unique = false;  // meaningful for r >= 3
  friend bool operator==(const TowerResult&, const TowerResult&) = default;
};

// r infinitely near blow-ups over a point of a line in P2. Throws kDomain
// for r < 1.
TowerResult TowerExample(int r);

struct P1xP1Parity {
  long long p_a = 0;
  bool real_singularity_forced = false;
  friend bool operator==(const P1xP1Parity&, const P1xP1Parity&) = default;
};
P1xP1Parity P1xP1ParityCheck(int a1, int a2);

struct Dp2Result {
  long long self_pairing = 0;
  long long p_a = 0;
  bool forced_real_singular = false;
  friend bool operator==(const Dp2Result&, const Dp2Result&) = default;
};
// C = -aK on P2 blown up at 7 real points. Throws kDomain for a < 1.
Dp2Result Dp2Check(int a);

struct MinusTwoSolution {
  int a = 0;
  int b = 0;
  int d = 0;
  long long c_dot_c_plus_k = 0;
  friend bool operator==(const MinusTwoSolution& x, const MinusTwoSolution& y) {
    return x.a == y.a && x.b == y.b && x.d == y.d;
  }
};

// Integer solutions of a(ad - 4b) = -2 with a <= 0, 1 <= d <= 9 and
// |4b| <= |ad| + 2, in the lattice of (K, F) with K^2 = d, K.F = -2,
// F^2 = 0. With filter_reducible only C(C+K) = -2 survives.
std::vector<MinusTwoSolution> MinusTwoSolutions(bool filter_reducible = false);

}  // namespace rcurve

#endif  // RCURVE_PICLATTICE_H_
