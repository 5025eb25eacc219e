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

#include <string>
#include <vector>

#include "rcurve/cellsurf.h"
#include "rcurve/error.h"

namespace rcurve {
namespace {

class Names {
 public:
  int Add(std::string name) {
    names_.push_back(std::move(name));
    return static_cast<int>(names_.size()) - 1;
  }
  std::vector<std::string> Take() { return std::move(names_); }

 private:
  std::vector<std::string> names_;
};

Dart Fwd(int e) { return {e, false}; }
Dart Rev(int e) { return {e, true}; }
Dart Flip(Dart d) { return {d.edge, !d.reversed}; }

BaseComplex SphereWithEquator() {
  Names names;
  std::vector<int> e, a, b;
  for (int i = 0; i < 3; ++i) e.push_back(names.Add("e" + std::to_string(i)));
  for (int i = 0; i < 3; ++i) a.push_back(names.Add("a" + std::to_string(i)));
  for (int i = 0; i < 3; ++i) b.push_back(names.Add("b" + std::to_string(i)));
  std::vector<std::vector<Dart>> polys;
  for (int i = 0; i < 3; ++i) polys.push_back({Fwd(a[i]), Fwd(e[i]), Rev(a[(i + 1) % 3])});
  for (int i = 0; i < 3; ++i) polys.push_back({Fwd(b[(i + 1) % 3]), Rev(e[i]), Rev(b[i])});
  CurveTrace curve{{Fwd(e[0]), Fwd(e[1]), Fwd(e[2])}};
  return {{CellSurface(names.Take(), std::move(polys)), curve}, 0, 3};
}

// n x n square grid with opposite sides identified; a flip reverses the
// identification of that pair of sides.
class Grid {
 public:
  Grid(int n, bool xflip, bool yflip) : n_(n), xflip_(xflip), yflip_(yflip) {
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) h_.push_back(names_.Add("h" + Key(i, j)));
    }
    for (int j = 0; j < n; ++j) {
      for (int i = 0; i < n; ++i) v_.push_back(names_.Add("v" + Key(i, j)));
    }
  }

  // Edge from (i, j) to (i+1, j); j may equal n.
  Dart H(int i, int j) const {
    if (j == n_) return yflip_ ? Rev(h(n_ - 1 - i, 0)) : Fwd(h(i, 0));
    return Fwd(h(i, j));
  }
  // Edge from (i, j) to (i, j+1); i may equal n.
  Dart V(int i, int j) const {
    if (i == n_) return xflip_ ? Rev(v(0, n_ - 1 - j)) : Fwd(v(0, j));
    return Fwd(v(i, j));
  }
  int Face(int i, int j) const { return j * n_ + i; }

  CellSurface Build() {
    std::vector<std::vector<Dart>> polys;
    for (int j = 0; j < n_; ++j) {
      for (int i = 0; i < n_; ++i) {
        polys.push_back({H(i, j), V(i + 1, j), Flip(H(i, j + 1)), Flip(V(i, j))});
      }
    }
    return CellSurface(names_.Take(), std::move(polys));
  }

 private:
  static std::string Key(int i, int j) { return std::to_string(i) + "_" + std::to_string(j); }
  int h(int i, int j) const { return h_[j * n_ + i]; }
  int v(int i, int j) const { return v_[j * n_ + i]; }

  int n_;
  bool xflip_;
  bool yflip_;
  Names names_;
  std::vector<int> h_, v_;
};

BaseComplex GridBase(BaseToken t) {
  const int n = t == BaseToken::kT2Null ? 4 : 3;
  const bool xflip = t == BaseToken::kRP2L;
  const bool yflip = t == BaseToken::kKL || t == BaseToken::kKF || t == BaseToken::kRP2L;
  Grid grid(n, xflip, yflip);
  CurveTrace curve;
  int left = -1;
  int right = -1;
  switch (t) {
    case BaseToken::kT2L:
    case BaseToken::kKF:
      for (int i = 0; i < n; ++i) curve.cycle.push_back(grid.H(i, 1));
      break;
    case BaseToken::kKL:
      for (int j = 0; j < n; ++j) curve.cycle.push_back(grid.V(0, j));
      break;
    case BaseToken::kRP2L:
      for (int i = 0; i < n; ++i) curve.cycle.push_back(grid.H(i, 0));
      for (int j = 0; j < n; ++j) curve.cycle.push_back(grid.V(n, j));
      break;
    case BaseToken::kT2Null:
      curve.cycle = {grid.H(1, 1), grid.H(2, 1), grid.V(3, 1), grid.V(3, 2),
                     Flip(grid.H(2, 3)), Flip(grid.H(1, 3)), Flip(grid.V(1, 2)),
                     Flip(grid.V(1, 1))};
      left = grid.Face(1, 1);
      right = grid.Face(0, 0);
      break;
    case BaseToken::kS2L:
      break;
  }
  return {{grid.Build(), curve}, left, right};
}

}  // namespace

BaseComplex BuildBase(BaseToken t) {
  if (t == BaseToken::kS2L) return SphereWithEquator();
  return GridBase(t);
}

Realized Realize(const PairWord& w) {
  Normalize(w);  // rejects ill-formed side tags
  BaseComplex base = BuildBase(w.base);
  Realized r = std::move(base.realized);
  for (int k = 0; k < w.rp2l_count; ++k) {
    r = BlowUpPoint(r.surface, r.curve, BlowUpLocation::kOnCurve, 0);
  }
  for (const Summand& s : w.summands) {
    int anchor = -1;
    if (s.side == Side::kLeft) anchor = base.left_face;
    if (s.side == Side::kRight) anchor = base.right_face;
    if (s.surface.orientable()) {
      for (int g = 0; g < s.surface.genus(); ++g) r = AddHandle(r.surface, r.curve, anchor);
    } else {
      for (int c = 0; c < s.surface.crosscaps(); ++c) {
        r = BlowUpPoint(r.surface, r.curve, BlowUpLocation::kOffCurve, anchor);
      }
    }
  }
  return r;
}

DoubleEquator EquatorDoubleCurve(int g) {
  if (g < 0) throw Error(ErrorCode::kDomain, "genus must be non-negative");
  const int m = 2 * g + 1;
  Names names;
  std::vector<int> u, d;
  for (int k = 0; k < m; ++k) u.push_back(names.Add("u" + std::to_string(k)));
  for (int k = 0; k < m; ++k) d.push_back(names.Add("d" + std::to_string(k)));
  std::vector<std::vector<Dart>> polys(2);
  for (int k = 0; k < m; ++k) polys[0].push_back(Fwd(u[k]));
  for (int k = m - 1; k >= 0; --k) polys[1].push_back(Rev(d[k]));
  for (int k = 0; k < m; ++k) polys.push_back({Fwd(d[k]), Rev(u[k])});
  CurveTrace curve;
  for (int s = 0; s < 2 * m; ++s) {
    const int k = s % m;
    const int pass = s / m;
    curve.cycle.push_back(Fwd((k + pass) % 2 == 0 ? u[k] : d[k]));
  }
  CellSurface cs(names.Take(), std::move(polys));
  const int crossings = CrossingCount(cs, curve);
  return {{std::move(cs), std::move(curve)}, crossings, m, 0, 1};
}

}  // namespace rcurve
