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

#ifndef RCURVE_CELLSURF_H_
#define RCURVE_CELLSURF_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rcurve/pairalg.h"

namespace rcurve {

// An oriented occurrence of an edge: in a polygon boundary or along a curve.
struct Dart {
  int edge = 0;
  bool reversed = false;
  friend bool operator==(const Dart&, const Dart&) = default;
};

// A closed surface given by polygons whose sides are glued in pairs. Each
// edge id occurs exactly twice over all polygons. Vertices are not stored;
// they are the classes of polygon corners under the gluing.
class CellSurface {
 public:
  // Validates the gluing and connectivity; throws kInvalidComplex.
  CellSurface(std::vector<std::string> edge_names,
              std::vector<std::vector<Dart>> polygons);

  const std::vector<std::vector<Dart>>& polygons() const { return polygons_; }
  const std::vector<std::string>& edge_names() const { return edge_names_; }
  int face_count() const { return static_cast<int>(polygons_.size()); }
  int edge_count() const { return static_cast<int>(edge_names_.size()); }

  std::optional<int> FindEdge(std::string_view name) const;

 private:
  std::vector<std::string> edge_names_;
  std::vector<std::vector<Dart>> polygons_;
};

// A closed edge path in the 1-skeleton. Embedded traces visit every vertex
// once; immersed traces pass through each crossing exactly twice.
struct CurveTrace {
  std::vector<Dart> cycle;
};

struct SurfaceInvariants {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler = 0;
  bool orientable = true;

  ClosedSurface surface() const { return ClosedSurface::FromEuler(euler, orientable); }
};

SurfaceInvariants Invariants(const CellSurface& cs);

// Throws kInvalidComplex unless consecutive darts meet, edges are distinct
// and every vertex is visited at most twice.
void ValidateTrace(const CellSurface& cs, const CurveTrace& c);

// Number of vertices the trace visits twice. Crossings are indexed in order
// of first visit along the cycle.
int CrossingCount(const CellSurface& cs, const CurveTrace& c);

// One connected component of the surface cut open along an embedded trace.
struct CutComponent {
  std::vector<int> faces;
  int boundary_circles = 0;
  int euler = 0;  // before capping
  bool orientable = true;

  ClosedSurface capped() const {
    return ClosedSurface::FromEuler(euler + boundary_circles, orientable);
  }
};

std::vector<CutComponent> CutAlong(const CellSurface& cs, const CurveTrace& c);

// Sidedness, separation and capped complements of an embedded trace.
// Throws kNotEmbedded for traces with crossings.
TopPair CanonicalPair(const CellSurface& cs, const CurveTrace& c);

struct Realized {
  CellSurface surface;
  CurveTrace curve;
};

enum class BlowUpLocation { kOffCurve, kOnCurve, kAtNode };

// Real blow-up of a point, as a surgery replacing a disc by a Moebius band.
//   kOffCurve: at a vertex off the curve (subdividing a face if needed);
//              index, when >= 0, is a face whose cut component hosts the point.
//   kOnCurve:  at the vertex where dart `index` of the cycle ends; the curve
//              passes through the band once.
//   kAtNode:   at crossing number `index`; both branches pass through the
//              band without meeting. Throws kNoSuchNode.
Realized BlowUpPoint(const CellSurface& cs, const CurveTrace& c,
                     BlowUpLocation location, int index = -1);

// Connected sum with a torus at a vertex off the curve, in the cut component
// of anchor_face (any component when anchor_face < 0).
Realized AddHandle(const CellSurface& cs, const CurveTrace& c, int anchor_face = -1);

// Builders for the named pairs. For separating pairs left_face lies on the
// first side of BasePair(t) and right_face on the second.
struct BaseComplex {
  Realized realized;
  int left_face = -1;
  int right_face = -1;
};

BaseComplex BuildBase(BaseToken t);

// Explicit realization of a word: the base complex, one on-curve blow-up per
// (RP2,l) summand, then one surgery per surface summand.
Realized Realize(const PairWord& w);

// Sphere with a trace winding twice around the equator with 2g+1 crossings.
struct DoubleEquator {
  Realized realized;
  int crossings = 0;
  int equatorial_regions = 0;
  int north_face = 0;
  int south_face = 0;
};

DoubleEquator EquatorDoubleCurve(int g);

// Resolves every crossing by kAtNode blow-ups.
Realized ResolveAllNodes(Realized r);

// Text format: one polygon per line with edges as identifiers, a trailing
// '~' marks a reversed occurrence; an optional line "curve: a b~ c" gives
// the trace. '#' starts a comment.
Realized ParseComplex(std::string_view text);
std::string FormatComplex(const CellSurface& cs, const CurveTrace* c = nullptr);

}  // namespace rcurve

#endif  // RCURVE_CELLSURF_H_
