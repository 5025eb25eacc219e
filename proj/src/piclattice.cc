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

#include "rcurve/piclattice.h"

#include <cstdlib>
#include <sstream>

#include "rcurve/error.h"

namespace rcurve {
namespace {

long long Binom2(long long n) { return n * (n - 1) / 2; }

}  // namespace

std::string RationalToString(const Rational& q) {
  if (q.denominator() == 1) return std::to_string(q.numerator());
  return std::to_string(q.numerator()) + "/" + std::to_string(q.denominator());
}

std::string SurfaceBase::ToString() const {
  switch (kind) {
    case BaseKind::kP2: return "P2";
    case BaseKind::kQuadric: return "Quadric";
    case BaseKind::kHirzebruch: return "F" + std::to_string(n);
    case BaseKind::kP1xP1: return "P1xP1";
  }
  return "?";
}

SurfaceBase ParseSurfaceBase(std::string_view text) {
  if (text == "P2") return SurfaceBase::P2();
  if (text == "Quadric") return SurfaceBase::Quadric();
  if (text == "P1xP1") return SurfaceBase::P1xP1();
  if (text.size() > 1 && text[0] == 'F') {
    const std::string digits(text.substr(1));
    if (digits.find_first_not_of("0123456789") == std::string::npos) {
      return SurfaceBase::Hirzebruch(std::stoi(digits));
    }
  }
  throw Error(ErrorCode::kParse, "unknown base '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------

DivClass DivClass::Integral(const std::vector<long long>& c) {
  DivClass out;
  for (long long x : c) out.coords.emplace_back(x);
  return out;
}

bool DivClass::IsIntegral() const {
  for (const Rational& q : coords) {
    if (q.denominator() != 1) return false;
  }
  return true;
}

bool DivClass::IsZero() const {
  for (const Rational& q : coords) {
    if (q.numerator() != 0) return false;
  }
  return true;
}

std::string DivClass::ToString() const {
  std::string out = "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i > 0) out += ", ";
    out += RationalToString(coords[i]);
  }
  return out + ")";
}

DivClass DivClass::operator+(const DivClass& o) const {
  if (o.size() != size()) throw Error(ErrorCode::kDimensionMismatch, "class sizes differ");
  DivClass out = *this;
  for (int i = 0; i < size(); ++i) out.coords[i] += o.coords[i];
  return out;
}

DivClass DivClass::operator-() const {
  DivClass out = *this;
  for (Rational& q : out.coords) q = -q;
  return out;
}

DivClass DivClass::operator-(const DivClass& o) const { return *this + (-o); }

DivClass operator*(const Rational& s, const DivClass& c) {
  DivClass out = c;
  for (Rational& q : out.coords) q *= s;
  return out;
}

// ---------------------------------------------------------------------------

PicLattice::PicLattice(SurfaceBase base) : base_(base) {
  switch (base.kind) {
    case BaseKind::kP2:
      gram_ = {{1}};
      canonical_ = {-3};
      conjugation_ = {0};
      break;
    case BaseKind::kP1xP1:
      gram_ = {{0, 1}, {1, 0}};
      canonical_ = {-2, -2};
      conjugation_ = {0, 1};
      break;
    case BaseKind::kQuadric:
      // Rulings; the real structure without real lines swaps them.
      gram_ = {{0, 1}, {1, 0}};
      canonical_ = {-2, -2};
      conjugation_ = {1, 0};
      break;
    case BaseKind::kHirzebruch:
      if (base.n < 0) throw Error(ErrorCode::kDomain, "Hirzebruch index must be >= 0");
      gram_ = {{-base.n, 1}, {1, 0}};
      canonical_ = {-2, Rational(-(base.n + 2))};
      conjugation_ = {0, 1};
      break;
  }
  base_rank_ = rank();
}

int PicLattice::real_blowups() const {
  int n = 0;
  for (const Exceptional& e : exceptionals_) n += e.real ? 1 : 0;
  return n;
}

int PicLattice::conj_pair_blowups() const {
  return static_cast<int>(exceptionals_.size()) - real_blowups();
}

DivClass PicLattice::Zero() const {
  DivClass out;
  out.coords.assign(rank(), Rational(0));
  return out;
}

DivClass PicLattice::Basis(int i) const {
  if (i < 0 || i >= rank()) throw Error(ErrorCode::kDimensionMismatch, "basis index out of range");
  DivClass out = Zero();
  out.coords[i] = 1;
  return out;
}

Rational PicLattice::Intersect(const DivClass& a, const DivClass& b) const {
  if (a.size() != rank() || b.size() != rank()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "class of length " + std::to_string(a.size() == rank() ? b.size() : a.size()) +
                    " in a lattice of rank " + std::to_string(rank()));
  }
  Rational sum = 0;
  for (int i = 0; i < rank(); ++i) {
    if (a.coords[i].numerator() == 0) continue;
    for (int j = 0; j < rank(); ++j) {
      if (gram_[i][j] != 0) sum += a.coords[i] * b.coords[j] * gram_[i][j];
    }
  }
  return sum;
}

DivClass PicLattice::CanonicalClass() const { return DivClass{canonical_}; }

long long PicLattice::ArithmeticGenus(const DivClass& c) const {
  if (!c.IsIntegral()) throw Error(ErrorCode::kNonIntegralClass, "class " + c.ToString());
  const Rational twice = Intersect(c, c) + Intersect(c, CanonicalClass());
  if (twice.denominator() != 1 || twice.numerator() % 2 != 0) {
    throw Error(ErrorCode::kNonIntegralClass, "canonical class is not characteristic");
  }
  return twice.numerator() / 2 + 1;
}

DivClass PicLattice::Conjugate(const DivClass& c) const {
  if (c.size() != rank()) throw Error(ErrorCode::kDimensionMismatch, "class size");
  DivClass out = Zero();
  for (int i = 0; i < rank(); ++i) out.coords[conjugation_[i]] = c.coords[i];
  return out;
}

ClosedSurface PicLattice::RealTopology() const {
  ClosedSurface s = ClosedSurface::Sphere();
  switch (base_.kind) {
    case BaseKind::kP2: s = ClosedSurface::ProjectivePlane(); break;
    case BaseKind::kQuadric: s = ClosedSurface::Sphere(); break;
    case BaseKind::kP1xP1: s = ClosedSurface::Torus(); break;
    case BaseKind::kHirzebruch:
      s = base_.n % 2 == 0 ? ClosedSurface::Torus() : ClosedSurface::Klein();
      break;
  }
  for (int k = 0; k < real_blowups(); ++k) s = SurfaceSum(s, ClosedSurface::ProjectivePlane());
  return s;
}

std::pair<PicLattice, DivClass> PicLattice::BlowUp(const Center& center, const DivClass& c,
                                                   int multiplicity, bool tracked) const {
  if (c.size() != rank()) throw Error(ErrorCode::kDimensionMismatch, "class size");
  PicLattice out = *this;
  DivClass curve = c;
  Exceptional rec;
  rec.index = rank();
  rec.tracked = tracked;
  int added = 1;
  if (const auto* r = std::get_if<RealCenter>(&center)) {
    rec.real = true;
    rec.on_curve = r->on_curve;
    rec.side = r->side;
  } else {
    rec.real = false;
    rec.on_curve = std::get<ConjPairCenter>(center).on_curve;
    added = 2;
  }
  rec.multiplicity = rec.on_curve ? multiplicity : 0;
  for (int k = 0; k < added; ++k) {
    const int n = out.rank();
    for (auto& row : out.gram_) row.push_back(0);
    out.gram_.emplace_back(n + 1, 0);
    out.gram_[n][n] = -1;
    out.canonical_.emplace_back(1);
    curve.coords.emplace_back(-rec.multiplicity);
  }
  if (added == 1) {
    out.conjugation_.push_back(rec.index);
  } else {
    out.conjugation_.push_back(rec.index + 1);
    out.conjugation_.push_back(rec.index);
  }
  out.exceptionals_.push_back(rec);
  return {std::move(out), std::move(curve)};
}

std::pair<PicLattice, DivClass> PicLattice::Contract(int k, const DivClass& c) const {
  if (k < 0 || k >= static_cast<int>(exceptionals_.size())) {
    throw Error(ErrorCode::kNotContractible, "no exceptional record " + std::to_string(k));
  }
  if (c.size() != rank()) throw Error(ErrorCode::kDimensionMismatch, "class size");
  const Exceptional rec = exceptionals_[k];
  const int width = rec.real ? 1 : 2;
  for (int i = rec.index; i < rec.index + width; ++i) {
    const DivClass e = Basis(i);
    if (Intersect(e, e) != Rational(-1) || Intersect(e, CanonicalClass()) != Rational(-1)) {
      throw Error(ErrorCode::kNotContractible, "class is not a (-1)-class");
    }
  }
  PicLattice out = *this;
  DivClass curve = c;
  auto erase = [&](auto& v) { v.erase(v.begin() + rec.index, v.begin() + rec.index + width); };
  erase(out.gram_);
  for (auto& row : out.gram_) erase(row);
  erase(out.canonical_);
  erase(curve.coords);
  out.conjugation_.clear();
  out.exceptionals_.erase(out.exceptionals_.begin() + k);
  // Rebuild indices and the involution.
  PicLattice fresh(base_);
  out.conjugation_ = fresh.conjugation_;
  int next = base_rank_;
  for (Exceptional& e : out.exceptionals_) {
    e.index = next;
    if (e.real) {
      out.conjugation_.push_back(next);
      next += 1;
    } else {
      out.conjugation_.push_back(next + 1);
      out.conjugation_.push_back(next);
      next += 2;
    }
  }
  return {std::move(out), std::move(curve)};
}

std::string PicLattice::ToString() const {
  std::ostringstream out;
  out << base_.ToString();
  for (const Exceptional& e : exceptionals_) {
    out << " + " << (e.real ? "R" : "C") << (e.on_curve ? "*" : "");
  }
  return out.str();
}

// ---------------------------------------------------------------------------

std::string_view CobleVerdictName(CobleVerdict v) {
  switch (v) {
    case CobleVerdict::kAntiAmpleish: return "AntiAmpleish";
    case CobleVerdict::kTrivial: return "Trivial";
    case CobleVerdict::kAmple: return "Ample";
  }
  return "?";
}

CobleResult CobleExample(int d, std::optional<int> real_nodes) {
  if (d < 3) throw Error(ErrorCode::kDomain, "degree must be at least 3");
  const int nodes = static_cast<int>(Binom2(d - 1));
  const int real = real_nodes.value_or(nodes % 2);
  if (real < 0 || real > nodes || (nodes - real) % 2 != 0) {
    throw Error(ErrorCode::kDomain, "cannot split " + std::to_string(nodes) + " nodes with " +
                                        std::to_string(real) + " real");
  }
  PicLattice lat(SurfaceBase::P2());
  DivClass curve = DivClass::Integral({d});
  for (int k = 0; k < real; ++k) {
    std::tie(lat, curve) = lat.BlowUp(RealCenter{true, Side::kAny}, curve, 2);
  }
  for (int k = 0; k < (nodes - real) / 2; ++k) {
    std::tie(lat, curve) = lat.BlowUp(ConjPairCenter{true}, curve, 2);
  }
  CobleResult out;
  out.nodes = nodes;
  out.real_nodes = real;
  const Rational csq = lat.Intersect(curve, curve);
  out.csq = csq.numerator();
  out.k_coeff = Rational(1) - Rational(6, d);
  out.verdict = out.k_coeff < Rational(0) ? CobleVerdict::kAntiAmpleish
                : out.k_coeff == Rational(0) ? CobleVerdict::kTrivial
                                   : CobleVerdict::kAmple;
  DivClass exceptional = lat.Zero();
  for (int i = lat.base_rank(); i < lat.rank(); ++i) exceptional.coords[i] = 1;
  const DivClass identity =
      lat.CanonicalClass() + Rational(3, d) * curve - out.k_coeff * exceptional;
  out.identity_holds = identity.IsZero();
  out.p_a = lat.ArithmeticGenus(curve);
  return out;
}

TowerResult TowerExample(int r) {
  if (r < 1) throw Error(ErrorCode::kDomain, "tower height must be at least 1");
  PicLattice lat(SurfaceBase::P2());
  DivClass unused = lat.Zero();
  for (int k = 0; k < r; ++k) std::tie(lat, unused) = lat.BlowUp(RealCenter{}, unused);
  const DivClass h = lat.Basis(0);
  auto e = [&](int i) { return lat.Basis(i); };  // E_i, 1-based
  TowerResult out;
  auto add = [&](std::string name, DivClass c) {
    const long long s = lat.Intersect(c, c).numerator();
    out.cycle.push_back({std::move(name), std::move(c), s});
  };
  for (int i = 1; i < r; ++i) add("C" + std::to_string(i), e(i) - e(i + 1));
  add("C" + std::to_string(r), e(r));
  DivClass line = h;
  for (int i = 1; i <= r; ++i) line = line - e(i);
  add("L", line);
  add("N", h);
  add("M", h - e(1));
  int last = -1;
  for (size_t i = 0; i < out.cycle.size(); ++i) {
    if (out.cycle[i].self_intersection == -1) {
      ++out.minus_one_count;
      last = static_cast<int>(i);
    }
  }
  out.last_exceptional_unique = out.minus_one_count == 1 && last == r - 1;
  if (r >= 3 && !out.last_exceptional_unique) {
    throw Error(ErrorCode::kDomain, "tower has an unexpected (-1)-curve");
  }
  return out;
}

P1xP1Parity P1xP1ParityCheck(int a1, int a2) {
  if (a1 < 0 || a2 < 0) throw Error(ErrorCode::kDomain, "bidegree must be non-negative");
  const PicLattice lat(SurfaceBase::P1xP1());
  P1xP1Parity out;
  out.p_a = lat.ArithmeticGenus(DivClass::Integral({a1, a2}));
  out.real_singularity_forced = a1 % 2 == 0 && a2 % 2 == 0 && out.p_a % 2 != 0;
  return out;
}

Dp2Result Dp2Check(int a) {
  if (a < 1) throw Error(ErrorCode::kDomain, "a must be at least 1");
  PicLattice lat(SurfaceBase::P2());
  DivClass unused = lat.Zero();
  for (int k = 0; k < 7; ++k) std::tie(lat, unused) = lat.BlowUp(RealCenter{}, unused);
  const DivClass c = Rational(-a) * lat.CanonicalClass();
  Dp2Result out;
  out.self_pairing = (lat.Intersect(c, c) + lat.Intersect(c, lat.CanonicalClass())).numerator();
  out.p_a = lat.ArithmeticGenus(c);
  out.forced_real_singular = out.p_a % 2 != 0;
  return out;
}

std::vector<MinusTwoSolution> MinusTwoSolutions(bool filter_reducible) {
  std::vector<MinusTwoSolution> out;
  for (int d = 1; d <= 9; ++d) {
    const std::vector<std::vector<long long>> gram{{d, -2}, {-2, 0}};
    for (int a = -9; a <= 0; ++a) {
      const int bound = (std::abs(a * d) + 2) / 4;
      for (int b = -bound; b <= bound; ++b) {
        if (a * (a * d - 4 * b) != -2) continue;
        const long long csq = 1LL * a * a * gram[0][0] + 2LL * a * b * gram[0][1];
        const long long ck = 1LL * a * gram[0][0] + 1LL * b * gram[0][1];
        MinusTwoSolution s{a, b, d, csq + ck};
        if (filter_reducible && s.c_dot_c_plus_k != -2) continue;
        out.push_back(s);
      }
    }
  }
  return out;
}

}  // namespace rcurve
