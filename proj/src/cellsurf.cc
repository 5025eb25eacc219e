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

#include "rcurve/cellsurf.h"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "rcurve/error.h"

namespace rcurve {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Unite(int a, int b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<int> parent_;
};

struct SideRef {
  int face = 0;
  int pos = 0;
  friend bool operator==(const SideRef&, const SideRef&) = default;
};

struct EdgeEnd {
  int edge = 0;
  bool head = false;
  friend bool operator==(const EdgeEnd&, const EdgeEnd&) = default;
};

// Corner and vertex bookkeeping. Corner `pos` of a face sits between side
// pos-1 and side pos. Edges flagged in `cut` are not glued.
class Skeleton {
 public:
  Skeleton(const CellSurface& cs, const std::vector<bool>* cut = nullptr) : cs_(cs) {
    const auto& polys = cs.polygons();
    offset_.resize(polys.size() + 1, 0);
    for (size_t f = 0; f < polys.size(); ++f) {
      offset_[f + 1] = offset_[f] + static_cast<int>(polys[f].size());
    }
    occ_.assign(cs.edge_count(), {});
    std::vector<int> seen(cs.edge_count(), 0);
    for (size_t f = 0; f < polys.size(); ++f) {
      for (size_t p = 0; p < polys[f].size(); ++p) {
        const int e = polys[f][p].edge;
        occ_[e][seen[e]++] = {static_cast<int>(f), static_cast<int>(p)};
      }
    }
    UnionFind uf(offset_.back());
    for (int e = 0; e < cs.edge_count(); ++e) {
      if (cut != nullptr && (*cut)[e]) continue;
      uf.Unite(TailCorner(occ_[e][0]), TailCorner(occ_[e][1]));
      uf.Unite(HeadCorner(occ_[e][0]), HeadCorner(occ_[e][1]));
    }
    vertex_.resize(offset_.back());
    std::vector<int> dense(offset_.back(), -1);
    for (int c = 0; c < offset_.back(); ++c) {
      int& id = dense[uf.Find(c)];
      if (id < 0) id = vertex_count_++;
      vertex_[c] = id;
    }
  }

  int len(int face) const { return offset_[face + 1] - offset_[face]; }
  int corner(int face, int pos) const {
    const int n = len(face);
    return offset_[face] + ((pos % n) + n) % n;
  }
  const Dart& dart(SideRef s) const { return cs_.polygons()[s.face][s.pos]; }
  int TailCorner(SideRef s) const {
    return dart(s).reversed ? corner(s.face, s.pos + 1) : corner(s.face, s.pos);
  }
  int HeadCorner(SideRef s) const {
    return dart(s).reversed ? corner(s.face, s.pos) : corner(s.face, s.pos + 1);
  }
  int vertex(int corner_id) const { return vertex_[corner_id]; }
  int vertex_count() const { return vertex_count_; }
  int corner_count() const { return offset_.back(); }
  const std::array<SideRef, 2>& occurrences(int edge) const { return occ_[edge]; }

  int DartTail(Dart d) const {
    const SideRef s = occ_[d.edge][0];
    return vertex(d.reversed ? HeadCorner(s) : TailCorner(s));
  }
  int DartHead(Dart d) const {
    const SideRef s = occ_[d.edge][0];
    return vertex(d.reversed ? TailCorner(s) : HeadCorner(s));
  }

  // Any corner (face, pos) at vertex v.
  SideRef CornerAt(int v) const {
    for (int f = 0; f + 1 < static_cast<int>(offset_.size()); ++f) {
      for (int p = 0; p < len(f); ++p) {
        if (vertex(corner(f, p)) == v) return {f, p};
      }
    }
    throw Error(ErrorCode::kInvalidComplex, "no corner at vertex");
  }

 private:
  const CellSurface& cs_;
  std::vector<int> offset_;
  std::vector<std::array<SideRef, 2>> occ_;
  std::vector<int> vertex_;
  int vertex_count_ = 0;
};

struct FaceComponents {
  std::vector<int> component_of_face;
  std::vector<bool> orientable;
};

// Components of the face adjacency graph through glued edges, with coherent
// orientation propagated breadth-first.
FaceComponents ComponentsOf(const CellSurface& cs, const std::vector<bool>& skip) {
  const auto& polys = cs.polygons();
  const int nf = cs.face_count();
  struct Link {
    int to;
    int flip;
  };
  std::vector<std::vector<Link>> adj(nf);
  std::vector<std::array<std::pair<int, int>, 2>> occ(cs.edge_count());
  std::vector<int> seen(cs.edge_count(), 0);
  for (int f = 0; f < nf; ++f) {
    for (const Dart& d : polys[f]) occ[d.edge][seen[d.edge]++] = {f, d.reversed ? -1 : 1};
  }
  FaceComponents out;
  out.component_of_face.assign(nf, -1);
  std::vector<bool> self_conflict(nf, false);
  for (int e = 0; e < cs.edge_count(); ++e) {
    if (skip[e]) continue;
    const auto [f1, s1] = occ[e][0];
    const auto [f2, s2] = occ[e][1];
    // Coherent orientations traverse a glued edge in opposite directions.
    const int flip = -s1 * s2;
    if (f1 == f2) {
      if (flip != 1) self_conflict[f1] = true;
      continue;
    }
    adj[f1].push_back({f2, flip});
    adj[f2].push_back({f1, flip});
  }
  std::vector<int> orient(nf, 0);
  for (int start = 0; start < nf; ++start) {
    if (out.component_of_face[start] >= 0) continue;
    const int comp = static_cast<int>(out.orientable.size());
    bool ok = true;
    std::vector<int> queue{start};
    out.component_of_face[start] = comp;
    orient[start] = 1;
    for (size_t qi = 0; qi < queue.size(); ++qi) {
      const int f = queue[qi];
      if (self_conflict[f]) ok = false;
      for (const Link& l : adj[f]) {
        const int want = orient[f] * l.flip;
        if (out.component_of_face[l.to] < 0) {
          out.component_of_face[l.to] = comp;
          orient[l.to] = want;
          queue.push_back(l.to);
        } else if (orient[l.to] != want) {
          ok = false;
        }
      }
    }
    out.orientable.push_back(ok);
  }
  return out;
}

std::vector<bool> CurveEdgeMask(const CellSurface& cs, const CurveTrace& c) {
  std::vector<bool> mask(cs.edge_count(), false);
  for (const Dart& d : c.cycle) mask[d.edge] = true;
  return mask;
}

// Vertex reached at the end of each dart of the cycle.
std::vector<int> VisitedVertices(const Skeleton& sk, const CurveTrace& c) {
  std::vector<int> out;
  out.reserve(c.cycle.size());
  for (const Dart& d : c.cycle) out.push_back(sk.DartHead(d));
  return out;
}

std::vector<int> CrossingVertices(const Skeleton& sk, const CurveTrace& c) {
  const std::vector<int> visits = VisitedVertices(sk, c);
  std::vector<int> count(sk.vertex_count(), 0);
  for (int v : visits) ++count[v];
  std::vector<int> out;
  for (int v : visits) {
    if (count[v] == 2 && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
  }
  return out;
}

struct LinkEntry {
  SideRef corner;  // (face, corner position)
  SideRef leave;   // side through which the walk leaves the corner
  EdgeEnd end;     // edge end crossed when leaving
};

// Walks once around the link circle of the vertex at corner (face, pos).
std::vector<LinkEntry> LinkAround(const Skeleton& sk, SideRef start) {
  std::vector<LinkEntry> out;
  SideRef cur = start;
  SideRef leave = start;
  const int guard = sk.corner_count();
  do {
    const Dart d = sk.dart(leave);
    const bool at_start = cur.pos == leave.pos;
    const bool head = at_start ? d.reversed : !d.reversed;
    out.push_back({cur, leave, {d.edge, head}});
    const auto& occ = sk.occurrences(d.edge);
    const SideRef twin = occ[0] == leave ? occ[1] : occ[0];
    const Dart td = sk.dart(twin);
    const bool twin_at_start = head ? td.reversed : !td.reversed;
    const int n = sk.len(twin.face);
    cur = {twin.face, twin_at_start ? twin.pos : (twin.pos + 1) % n};
    leave = {twin.face, twin_at_start ? (twin.pos - 1 + n) % n : (twin.pos + 1) % n};
    if (static_cast<int>(out.size()) > guard) {
      throw Error(ErrorCode::kInvalidComplex, "vertex link does not close");
    }
  } while (!(cur == start && leave == start));
  return out;
}

// Mutable copy of a complex used to assemble surgeries.
struct Assembly {
  std::vector<std::string> names;
  std::vector<std::vector<Dart>> polys;
  std::set<std::string> used;

  explicit Assembly(const CellSurface& cs)
      : names(cs.edge_names()), polys(cs.polygons()), used(names.begin(), names.end()) {}

  int NewEdge(const std::string& prefix) {
    for (int k = static_cast<int>(names.size());; ++k) {
      std::string name = prefix + std::to_string(k);
      if (used.insert(name).second) {
        names.push_back(name);
        return static_cast<int>(names.size()) - 1;
      }
    }
  }
  CellSurface Build() const { return CellSurface(names, polys); }
};

std::vector<Dart> Reverse(std::vector<Dart> path) {
  std::reverse(path.begin(), path.end());
  for (Dart& d : path) d.reversed = !d.reversed;
  return path;
}

void Append(std::vector<Dart>& out, const std::vector<Dart>& more) {
  out.insert(out.end(), more.begin(), more.end());
}

// Removes an open disc around a vertex. The new sides t_j, one per corner of
// the link, form the hole boundary; t_j runs from ends[j-1] to ends[j].
struct Truncation {
  std::vector<int> t_edges;
  std::vector<EdgeEnd> ends;

  int n() const { return static_cast<int>(ends.size()); }
  int IndexOf(EdgeEnd e) const {
    for (int j = 0; j < n(); ++j) {
      if (ends[j] == e) return j;
    }
    throw Error(ErrorCode::kInvalidComplex, "edge end not in link");
  }
  // Boundary path from ends[a] to ends[b] following the link order.
  std::vector<Dart> Path(int a, int b) const {
    std::vector<Dart> out;
    int j = a;
    do {
      j = (j + 1) % n();
      out.push_back({t_edges[j], false});
    } while (j != b);
    return out;
  }
};

Truncation Truncate(const Skeleton& sk, Assembly& as, SideRef corner) {
  const std::vector<LinkEntry> link = LinkAround(sk, corner);
  Truncation tr;
  std::map<std::pair<int, int>, Dart> inserts;
  for (const LinkEntry& le : link) {
    const int t = as.NewEdge("t");
    tr.t_edges.push_back(t);
    tr.ends.push_back(le.end);
    // Leaving through the side that starts at this corner means the face
    // traversal meets the previous end first.
    const bool forward = le.leave.pos == le.corner.pos;
    inserts[{le.corner.face, le.corner.pos}] = Dart{t, !forward};
  }
  std::set<int> faces;
  for (const auto& [key, dart] : inserts) faces.insert(key.first);
  for (int f : faces) {
    std::vector<Dart> rebuilt;
    const auto& old = as.polys[f];
    for (int p = 0; p < static_cast<int>(old.size()); ++p) {
      if (auto it = inserts.find({f, p}); it != inserts.end()) rebuilt.push_back(it->second);
      rebuilt.push_back(old[p]);
    }
    as.polys[f] = std::move(rebuilt);
  }
  return tr;
}

// Cone over face f from a new center vertex. Face f keeps its index and its
// corner 0 sits at the center.
CellSurface Subdivide(const CellSurface& cs, int f) {
  Assembly as(cs);
  const std::vector<Dart> sides = as.polys[f];
  const int k = static_cast<int>(sides.size());
  std::vector<int> spokes;
  for (int j = 0; j < k; ++j) spokes.push_back(as.NewEdge("r"));
  for (int j = 0; j < k; ++j) {
    std::vector<Dart> tri{{spokes[j], false}, sides[j], {spokes[(j + 1) % k], true}};
    if (j == 0) {
      as.polys[f] = std::move(tri);
    } else {
      as.polys.push_back(std::move(tri));
    }
  }
  return as.Build();
}

std::vector<int> FacesOfComponent(const CellSurface& cs, const CurveTrace& c, int anchor) {
  std::vector<int> faces;
  if (anchor < 0 || c.cycle.empty()) {
    faces.resize(cs.face_count());
    std::iota(faces.begin(), faces.end(), 0);
    return faces;
  }
  for (const CutComponent& comp : CutAlong(cs, c)) {
    if (std::find(comp.faces.begin(), comp.faces.end(), anchor) != comp.faces.end()) {
      return comp.faces;
    }
  }
  throw Error(ErrorCode::kInvalidComplex, "anchor face out of range");
}

// A corner at a vertex off the curve, inside the faces given. Subdivides
// `fallback` when none exists.
std::pair<CellSurface, SideRef> OffCurveCorner(const CellSurface& cs, const CurveTrace& c,
                                               const std::vector<int>& faces) {
  const Skeleton sk(cs);
  std::set<int> on_curve;
  for (int v : VisitedVertices(sk, c)) on_curve.insert(v);
  for (int f : faces) {
    for (int p = 0; p < sk.len(f); ++p) {
      if (!on_curve.contains(sk.vertex(sk.corner(f, p)))) return {cs, SideRef{f, p}};
    }
  }
  return {Subdivide(cs, faces.front()), SideRef{faces.front(), 0}};
}

Realized GlueAtOffCurveVertex(const CellSurface& cs, const CurveTrace& c, int anchor,
                              bool handle) {
  if (anchor >= cs.face_count()) throw Error(ErrorCode::kInvalidComplex, "anchor face out of range");
  auto [host, corner] = OffCurveCorner(cs, c, FacesOfComponent(cs, c, anchor));
  const Skeleton sk(host);
  Assembly as(host);
  const Truncation tr = Truncate(sk, as, corner);
  std::vector<Dart> band = tr.Path(tr.n() - 1, tr.n() - 1);
  if (handle) {
    const int a = as.NewEdge("a");
    const int b = as.NewEdge("b");
    Append(band, {{a, false}, {b, false}, {a, true}, {b, true}});
  } else {
    const int x = as.NewEdge("x");
    Append(band, {{x, false}, {x, false}});
  }
  as.polys.push_back(std::move(band));
  return {as.Build(), c};
}

struct Passage {
  int index;  // dart index whose head is the vertex
  EdgeEnd arrive;
  EdgeEnd depart;
};

std::vector<Passage> PassagesThrough(const Skeleton& sk, const CurveTrace& c, int v) {
  std::vector<Passage> out;
  const int n = static_cast<int>(c.cycle.size());
  for (int i = 0; i < n; ++i) {
    const Dart in = c.cycle[i];
    const Dart out_dart = c.cycle[(i + 1) % n];
    if (sk.DartHead(in) != v) continue;
    out.push_back({i, {in.edge, !in.reversed}, {out_dart.edge, out_dart.reversed}});
  }
  return out;
}

CurveTrace InsertArcs(const CurveTrace& c, const std::map<int, Dart>& arcs) {
  CurveTrace out;
  for (int i = 0; i < static_cast<int>(c.cycle.size()); ++i) {
    out.cycle.push_back(c.cycle[i]);
    if (auto it = arcs.find(i); it != arcs.end()) out.cycle.push_back(it->second);
  }
  return out;
}

Realized BlowUpOnCurve(const CellSurface& cs, const CurveTrace& c, int index) {
  if (c.cycle.empty()) throw Error(ErrorCode::kInvalidComplex, "empty curve");
  if (index < 0) index = 0;
  if (index >= static_cast<int>(c.cycle.size())) {
    throw Error(ErrorCode::kInvalidComplex, "dart index out of range");
  }
  const Skeleton sk(cs);
  const int v = sk.DartHead(c.cycle[index]);
  const std::vector<Passage> passages = PassagesThrough(sk, c, v);
  if (passages.size() != 1) {
    throw Error(ErrorCode::kNotEmbedded, "on-curve blow-up at a crossing");
  }
  Assembly as(cs);
  const Truncation tr = Truncate(sk, as, sk.CornerAt(v));
  const Passage& p = passages.front();
  const int ia = tr.IndexOf(p.arrive);
  const int id = tr.IndexOf(p.depart);
  const int i1 = std::min(ia, id);
  const int i3 = std::max(ia, id);
  const int alpha = as.NewEdge("c");
  // Strict transform of the curve runs through the band from ends[i1] to ends[i3].
  std::vector<Dart> band = tr.Path(i1, i3);
  band.push_back({alpha, true});
  Append(band, Reverse(tr.Path(i3, i1)));
  band.push_back({alpha, true});
  as.polys.push_back(std::move(band));
  const Dart arc{alpha, ia != i1};
  return {as.Build(), InsertArcs(c, {{p.index, arc}})};
}

Realized BlowUpAtNode(const CellSurface& cs, const CurveTrace& c, int index) {
  ValidateTrace(cs, c);
  const Skeleton sk(cs);
  const std::vector<int> crossings = CrossingVertices(sk, c);
  if (index < 0 || index >= static_cast<int>(crossings.size())) {
    throw Error(ErrorCode::kNoSuchNode, "no crossing with index " + std::to_string(index));
  }
  const int v = crossings[index];
  const std::vector<Passage> passages = PassagesThrough(sk, c, v);
  Assembly as(cs);
  const Truncation tr = Truncate(sk, as, sk.CornerAt(v));
  const Passage& first = passages[0];
  const Passage& second = passages[1];
  std::array<int, 4> q{tr.IndexOf(first.arrive), tr.IndexOf(first.depart),
                       tr.IndexOf(second.arrive), tr.IndexOf(second.depart)};
  std::array<int, 4> sorted = q;
  std::sort(sorted.begin(), sorted.end());
  auto rank = [&](int pos) {
    return static_cast<int>(std::find(sorted.begin(), sorted.end(), pos) - sorted.begin());
  };
  // Branches of a transverse crossing alternate around the link.
  if ((rank(q[0]) + rank(q[1])) % 2 != 0) {
    throw Error(ErrorCode::kNoSuchNode, "crossing is not transverse");
  }
  const int alpha = as.NewEdge("c");  // ends[sorted[0]] -> ends[sorted[2]]
  const int beta = as.NewEdge("c");   // ends[sorted[1]] -> ends[sorted[3]]
  std::vector<Dart> half_a = tr.Path(sorted[0], sorted[1]);
  half_a.push_back({beta, false});
  Append(half_a, Reverse(tr.Path(sorted[2], sorted[3])));
  half_a.push_back({alpha, true});
  std::vector<Dart> half_b = tr.Path(sorted[1], sorted[2]);
  half_b.push_back({alpha, true});
  Append(half_b, Reverse(tr.Path(sorted[3], sorted[0])));
  half_b.push_back({beta, true});
  as.polys.push_back(std::move(half_a));
  as.polys.push_back(std::move(half_b));

  std::map<int, Dart> arcs;
  for (const Passage* p : {&first, &second}) {
    const int r = rank(tr.IndexOf(p->arrive));
    const int arc = (r % 2 == 0) ? alpha : beta;
    arcs[p->index] = Dart{arc, r >= 2};
  }
  return {as.Build(), InsertArcs(c, arcs)};
}

}  // namespace

// ---------------------------------------------------------------------------

CellSurface::CellSurface(std::vector<std::string> edge_names,
                         std::vector<std::vector<Dart>> polygons)
    : edge_names_(std::move(edge_names)), polygons_(std::move(polygons)) {
  if (polygons_.empty()) throw Error(ErrorCode::kInvalidComplex, "no polygons");
  std::vector<int> count(edge_names_.size(), 0);
  for (const auto& poly : polygons_) {
    if (poly.empty()) throw Error(ErrorCode::kInvalidComplex, "empty polygon");
    for (const Dart& d : poly) {
      if (d.edge < 0 || d.edge >= static_cast<int>(edge_names_.size())) {
        throw Error(ErrorCode::kInvalidComplex, "edge id out of range");
      }
      ++count[d.edge];
    }
  }
  for (size_t e = 0; e < count.size(); ++e) {
    if (count[e] != 2) {
      throw Error(ErrorCode::kInvalidComplex,
                  "edge '" + edge_names_[e] + "' occurs " + std::to_string(count[e]) +
                      " times, expected 2");
    }
  }
  const FaceComponents comps = ComponentsOf(*this, std::vector<bool>(edge_names_.size(), false));
  if (comps.orientable.size() != 1) throw Error(ErrorCode::kInvalidComplex, "complex is disconnected");
}

std::optional<int> CellSurface::FindEdge(std::string_view name) const {
  for (size_t e = 0; e < edge_names_.size(); ++e) {
    if (edge_names_[e] == name) return static_cast<int>(e);
  }
  return std::nullopt;
}

SurfaceInvariants Invariants(const CellSurface& cs) {
  const Skeleton sk(cs);
  SurfaceInvariants inv;
  inv.vertices = sk.vertex_count();
  inv.edges = cs.edge_count();
  inv.faces = cs.face_count();
  inv.euler = inv.vertices - inv.edges + inv.faces;
  inv.orientable = ComponentsOf(cs, std::vector<bool>(cs.edge_count(), false)).orientable[0];
  return inv;
}

void ValidateTrace(const CellSurface& cs, const CurveTrace& c) {
  if (c.cycle.empty()) throw Error(ErrorCode::kInvalidComplex, "empty curve");
  const Skeleton sk(cs);
  std::set<int> edges;
  const int n = static_cast<int>(c.cycle.size());
  for (int i = 0; i < n; ++i) {
    const Dart d = c.cycle[i];
    if (d.edge < 0 || d.edge >= cs.edge_count()) {
      throw Error(ErrorCode::kInvalidComplex, "curve edge out of range");
    }
    if (!edges.insert(d.edge).second) {
      throw Error(ErrorCode::kInvalidComplex, "curve uses an edge twice");
    }
    if (sk.DartHead(d) != sk.DartTail(c.cycle[(i + 1) % n])) {
      throw Error(ErrorCode::kInvalidComplex, "curve is not a closed edge path");
    }
  }
  std::map<int, int> visits;
  for (int v : VisitedVertices(sk, c)) {
    if (++visits[v] > 2) throw Error(ErrorCode::kInvalidComplex, "curve visits a vertex 3 times");
  }
}

int CrossingCount(const CellSurface& cs, const CurveTrace& c) {
  ValidateTrace(cs, c);
  return static_cast<int>(CrossingVertices(Skeleton(cs), c).size());
}

std::vector<CutComponent> CutAlong(const CellSurface& cs, const CurveTrace& c) {
  if (CrossingCount(cs, c) != 0) throw Error(ErrorCode::kNotEmbedded, "curve has crossings");
  const std::vector<bool> cut = CurveEdgeMask(cs, c);
  const FaceComponents comps = ComponentsOf(cs, cut);
  const Skeleton sk(cs, &cut);
  const int nc = static_cast<int>(comps.orientable.size());
  std::vector<CutComponent> out(nc);
  std::vector<std::set<int>> verts(nc);
  for (int f = 0; f < cs.face_count(); ++f) {
    const int k = comps.component_of_face[f];
    out[k].faces.push_back(f);
    out[k].euler += 1;
    for (int p = 0; p < sk.len(f); ++p) verts[k].insert(sk.vertex(sk.corner(f, p)));
  }
  UnionFind boundary(sk.vertex_count());
  std::vector<std::set<int>> boundary_verts(nc);
  for (int e = 0; e < cs.edge_count(); ++e) {
    const auto& occ = sk.occurrences(e);
    if (!cut[e]) {
      out[comps.component_of_face[occ[0].face]].euler -= 1;
      continue;
    }
    for (const SideRef& s : occ) {
      const int k = comps.component_of_face[s.face];
      out[k].euler -= 1;
      const int a = sk.vertex(sk.TailCorner(s));
      const int b = sk.vertex(sk.HeadCorner(s));
      boundary.Unite(a, b);
      boundary_verts[k].insert(a);
    }
  }
  for (int k = 0; k < nc; ++k) {
    out[k].euler += static_cast<int>(verts[k].size());
    out[k].orientable = comps.orientable[k];
    std::set<int> roots;
    for (int v : boundary_verts[k]) roots.insert(boundary.Find(v));
    out[k].boundary_circles = static_cast<int>(roots.size());
  }
  return out;
}

TopPair CanonicalPair(const CellSurface& cs, const CurveTrace& c) {
  const std::vector<CutComponent> comps = CutAlong(cs, c);
  if (comps.size() == 2) return TopPair::MakeSeparating(comps[0].capped(), comps[1].capped());
  if (comps.size() != 1) throw Error(ErrorCode::kInvalidComplex, "cut produced more than 2 pieces");
  if (comps[0].boundary_circles == 1) return TopPair::MakeOneSided(comps[0].capped());
  return TopPair::MakeNonSepTwoSided(comps[0].capped(), Invariants(cs).orientable);
}

Realized BlowUpPoint(const CellSurface& cs, const CurveTrace& c, BlowUpLocation location,
                     int index) {
  switch (location) {
    case BlowUpLocation::kOffCurve: return GlueAtOffCurveVertex(cs, c, index, false);
    case BlowUpLocation::kOnCurve: return BlowUpOnCurve(cs, c, index);
    case BlowUpLocation::kAtNode: return BlowUpAtNode(cs, c, index);
  }
  throw Error(ErrorCode::kDomain, "unknown blow-up location");
}

Realized AddHandle(const CellSurface& cs, const CurveTrace& c, int anchor_face) {
  return GlueAtOffCurveVertex(cs, c, anchor_face, true);
}

Realized ResolveAllNodes(Realized r) {
  while (CrossingCount(r.surface, r.curve) > 0) {
    r = BlowUpPoint(r.surface, r.curve, BlowUpLocation::kAtNode, 0);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Text format

Realized ParseComplex(std::string_view text) {
  std::vector<std::string> names;
  std::map<std::string, int> ids;
  std::vector<std::vector<Dart>> polys;
  std::vector<std::string> curve_tokens;
  auto parse_token = [&](std::string tok, bool create) -> Dart {
    bool rev = false;
    if (!tok.empty() && tok.back() == '~') {
      rev = true;
      tok.pop_back();
    }
    if (tok.empty()) throw Error(ErrorCode::kParse, "empty edge name");
    auto it = ids.find(tok);
    if (it == ids.end()) {
      if (!create) throw Error(ErrorCode::kParse, "curve uses unknown edge '" + tok + "'");
      it = ids.emplace(tok, static_cast<int>(names.size())).first;
      names.push_back(tok);
    }
    return {it->second, rev};
  };
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (const size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream words(line);
    std::string tok;
    if (!(words >> tok)) continue;
    if (tok == "curve:") {
      while (words >> tok) curve_tokens.push_back(tok);
      continue;
    }
    std::vector<Dart> poly{parse_token(tok, true)};
    while (words >> tok) poly.push_back(parse_token(tok, true));
    polys.push_back(std::move(poly));
  }
  CurveTrace curve;
  for (const std::string& tok : curve_tokens) curve.cycle.push_back(parse_token(tok, false));
  CellSurface cs(std::move(names), std::move(polys));
  if (!curve.cycle.empty()) ValidateTrace(cs, curve);
  return {std::move(cs), std::move(curve)};
}

std::string FormatComplex(const CellSurface& cs, const CurveTrace* c) {
  std::ostringstream out;
  auto put = [&](const Dart& d) {
    out << cs.edge_names()[d.edge] << (d.reversed ? "~" : "");
  };
  for (const auto& poly : cs.polygons()) {
    for (size_t i = 0; i < poly.size(); ++i) {
      if (i > 0) out << ' ';
      put(poly[i]);
    }
    out << '\n';
  }
  if (c != nullptr && !c->cycle.empty()) {
    out << "curve:";
    for (const Dart& d : c->cycle) {
      out << ' ';
      put(d);
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace rcurve
