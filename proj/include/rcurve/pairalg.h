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

#ifndef RCURVE_PAIRALG_H_
#define RCURVE_PAIRALG_H_

#include <compare>
#include <functional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace rcurve {

// Which complementary component of a separating curve a summand is attached
// to. Left/Right refer to the first/second stored side of the base pair.
enum class Side { kLeft, kRight, kAny };

std::string_view SideName(Side side);

// Normal form of a closed connected surface: orientable of genus g, or the
// connected sum of k >= 1 projective planes.
class ClosedSurface {
 public:
  static ClosedSurface Orientable(int genus);
  static ClosedSurface NonOrientable(int crosscaps);
  static ClosedSurface Sphere() { return Orientable(0); }
  static ClosedSurface Torus() { return Orientable(1); }
  static ClosedSurface ProjectivePlane() { return NonOrientable(1); }
  static ClosedSurface Klein() { return NonOrientable(2); }
  // Inverse of (euler, orientable); throws kDomain if no such surface exists.
  static ClosedSurface FromEuler(int euler, bool orientable);

  bool orientable() const { return orientable_; }
  int genus() const { return orientable_ ? n_ : 0; }
  int crosscaps() const { return orientable_ ? 0 : n_; }
  int euler() const { return orientable_ ? 2 - 2 * n_ : 2 - n_; }
  // Crosscaps plus twice the genus, i.e. 2 - euler().
  int complexity() const { return 2 - euler(); }

  // "S2", "T2", "2T2", "RP2", "K", "3RP2".
  std::string ToString() const;

  friend bool operator==(const ClosedSurface&, const ClosedSurface&) = default;
  // Orientable surfaces first, then by Euler characteristic descending.
  friend std::strong_ordering operator<=>(const ClosedSurface& a,
                                          const ClosedSurface& b);

 private:
  ClosedSurface(bool orientable, int n) : orientable_(orientable), n_(n) {}

  bool orientable_;
  int n_;
};

ClosedSurface SurfaceSum(const ClosedSurface& a, const ClosedSurface& b);

// Accepts the ToString() spellings ("S2", "3RP2", "K", "2T2") and
// "Or(g)" / "NonOr(k)". Throws kParse.
ClosedSurface ParseClosedSurface(std::string_view text);

// Two-sided curve whose complement has two components; each side is stored
// with its boundary circle capped by a disc.
struct Separating {
  ClosedSurface first;
  ClosedSurface second;
  friend bool operator==(const Separating&, const Separating&) = default;
};

// One-sided curve; cap is the complement of a Moebius neighborhood, capped.
struct OneSided {
  ClosedSurface cap;
  friend bool operator==(const OneSided&, const OneSided&) = default;
};

// Two-sided non-separating curve; cap is the cut surface with both boundary
// circles capped.
struct NonSepTwoSided {
  ClosedSurface cap;
  bool total_orientable;
  friend bool operator==(const NonSepTwoSided&,
                         const NonSepTwoSided&) = default;
};

// A pair (closed surface, simple closed curve) up to diffeomorphism, in
// canonical form. Constructors enforce the normal-form invariants.
class TopPair {
 public:
  using Variant = std::variant<Separating, OneSided, NonSepTwoSided>;

  static TopPair MakeSeparating(ClosedSurface a, ClosedSurface b);
  static TopPair MakeOneSided(ClosedSurface cap);
  // total_orientable is forced to false when cap is non-orientable.
  static TopPair MakeNonSepTwoSided(ClosedSurface cap, bool total_orientable);

  const Variant& value() const { return value_; }
  bool is_separating() const { return value_.index() == 0; }
  bool is_one_sided() const { return value_.index() == 1; }
  bool is_nonsep_two_sided() const { return value_.index() == 2; }
  bool is_two_sided() const { return !is_one_sided(); }

  const Separating& separating() const { return std::get<Separating>(value_); }
  const OneSided& one_sided() const { return std::get<OneSided>(value_); }
  const NonSepTwoSided& nonsep() const {
    return std::get<NonSepTwoSided>(value_);
  }

  std::string_view VariantName() const;
  // Human-readable name in connected-sum notation, e.g. "(K,f)#T2".
  std::string ToString() const;

  friend bool operator==(const TopPair&, const TopPair&) = default;
  friend std::strong_ordering operator<=>(const TopPair& a, const TopPair& b);

 private:
  explicit TopPair(Variant v) : value_(std::move(v)) {}
  Variant value_;
};

namespace named {
TopPair SphereLine();     // (S2, l)
TopPair TorusLine();      // (T2, l) ~ (T2, f)
TopPair TorusNull();      // (T2, null-homotopic curve)
TopPair KleinLine();      // (K, l)
TopPair KleinFiber();     // (K, f)
TopPair ProjectiveLine(); // (RP2, l)
}  // namespace named

int EulerChar(const TopPair& p);
ClosedSurface UnderlyingSurface(const TopPair& p);
// 2 - EulerChar(p).
int Complexity(const TopPair& p);

// Connected sum with a closed surface, away from the curve.
TopPair SumSurface(const TopPair& p, const ClosedSurface& x, Side side);
// Pair-sum with (RP2, l).
TopPair SumProjectiveLine(const TopPair& p);

enum class BaseToken { kS2L, kT2L, kKL, kKF, kRP2L, kT2Null };

std::string_view BaseTokenName(BaseToken t);
TopPair BasePair(BaseToken t);

struct Summand {
  ClosedSurface surface;
  Side side = Side::kAny;
  friend bool operator==(const Summand&, const Summand&) = default;
};

// Surface-level input: a named base pair, a number of (RP2, l) pair-summands
// and a list of surface summands.
struct PairWord {
  BaseToken base = BaseToken::kS2L;
  int rp2l_count = 0;
  std::vector<Summand> summands;

  friend bool operator==(const PairWord&, const PairWord&) = default;
};

// Grammar: BASE ( '+' [INT '*'] [('L'|'R') ':'] TOKEN )*, TOKEN being RP2L
// or a closed surface ("S2", "RP2", "T2", "K", "3RP2", "2T2", "NonOr(k)",
// "Or(g)"). Throws kParse.
PairWord ParsePairWord(std::string_view text);
std::string FormatPairWord(const PairWord& w);
// Evaluates base, then the pair-sums, then the surface summands.
TopPair Normalize(const PairWord& w);
// A word whose normal form is p.
PairWord CanonicalWord(const TopPair& p);

enum class PairCase {
  kSphereLine,          // (S2, l)
  kTorusLine,           // (T2, l)
  kTorusNull,           // (T2, null-homotopic)
  kOneSidedCrosscaps,   // (RP2, l) # r RP2, r >= 0
  kOneSidedGenus,       // (RP2, l) # g T2, g > 0
  kFiberCrosscaps,      // (K, f) # r RP2, r >= 0
  kFiberGenus,          // (K, f) # g T2, g > 0
  kSeparatingCrosscaps, // r1 RP2 # (S2, l) # r2 RP2, r1 + r2 >= 1
  kSeparatingGenus,     // r1 RP2 # (S2, l) # g T2, r1, g > 0
};

struct CaseLabel {
  PairCase kind;
  int r = 0;
  int g = 0;
  int r1 = 0;
  int r2 = 0;

  std::string Template() const;
  friend bool operator==(const CaseLabel&, const CaseLabel&) = default;
};

bool ComessattiRealizable(const TopPair& p);
// Throws kNotComessatti.
CaseLabel ClassifyCase(const TopPair& p);

// One line of the connected-sum identity tables, parameterized by r.
struct PairIdentity {
  std::string text;
  int r_min = 0;
  // Elementary lines do not depend on r.
  bool parametric = true;
  // The printed line contradicts invariance of sidedness; evaluated and
  // reported, never asserted.
  bool disputed = false;
  std::function<PairWord(int)> lhs;
  std::function<PairWord(int)> rhs;
  // Replacement right-hand side for disputed lines.
  std::function<PairWord(int)> substitute;
};

const std::vector<PairIdentity>& ElementaryIdentities();
const std::vector<PairIdentity>& IteratedIdentities();

struct IdentityCheck {
  std::string line;
  int r = 0;
  TopPair lhs = named::SphereLine();
  TopPair rhs = named::SphereLine();
  bool holds = false;
  friend bool operator==(const IdentityCheck&, const IdentityCheck&) = default;
};

struct Discrepancy {
  std::string line;
  TopPair lhs = named::SphereLine();
  TopPair rhs = named::SphereLine();
  std::string substitute_line;
  TopPair substitute = named::SphereLine();
  bool substitute_holds = false;
  friend bool operator==(const Discrepancy&, const Discrepancy&) = default;
};

struct DiffeoTableReport {
  std::vector<IdentityCheck> checks;
  std::vector<Discrepancy> discrepancies;
  friend bool operator==(const DiffeoTableReport&, const DiffeoTableReport&) = default;
};

// Evaluates every non-disputed identity for r_min <= r <= r_max and throws
// kTableMismatch on the first failure. Disputed lines go to discrepancies.
DiffeoTableReport VerifyDiffeoTable(int r_max);

}  // namespace rcurve

#endif  // RCURVE_PAIRALG_H_
