#include "ori/pattern.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>
#include <sstream>

namespace ori {

std::vector<int> CreasePattern::optional_edges() const {
  std::vector<int> out;
  for (size_t e = 0; e < edges.size(); ++e)
    if (label_optional(edges[e].label)) out.push_back(static_cast<int>(e));
  return out;
}

std::vector<int> CreasePattern::boundary_loop() const {
  std::map<int, std::vector<int>> nbr;  // vertex -> boundary neighbors
  for (const auto& e : edges) {
    if (e.label != CreaseLabel::Boundary) continue;
    nbr[e.a].push_back(e.b);
    nbr[e.b].push_back(e.a);
  }
  if (nbr.empty()) return {};
  for (const auto& [v, ns] : nbr)
    if (ns.size() != 2) return {};
  int start = nbr.begin()->first;
  std::vector<int> loop{start};
  int prev = -1, cur = start;
  do {
    const auto& ns = nbr[cur];
    int nxt = (ns[0] == prev) ? ns[1] : ns[0];
    prev = cur;
    cur = nxt;
    if (cur != start) loop.push_back(cur);
    if (loop.size() > edges.size() + 1) return {};
  } while (cur != start);
  // All boundary vertices must be on this single loop.
  if (loop.size() != nbr.size()) return {};
  return loop;
}

std::vector<ExactPoint> CreasePattern::boundary_polygon() const {
  std::vector<ExactPoint> poly;
  for (int v : boundary_loop()) poly.push_back(verts[v]);
  if (!poly.empty() && polygon_area2(poly).sign() < 0) std::reverse(poly.begin(), poly.end());
  return poly;
}

CreasePattern build_pattern(const std::vector<CreaseSeg>& segs) {
  std::vector<LabeledSeg> ls;
  ls.reserve(segs.size());
  for (const auto& s : segs) ls.push_back({s.s.p, s.s.q, static_cast<int>(s.label)});
  PlanarGraph g = planarize(ls);
  CreasePattern cp;
  cp.verts = g.verts;
  for (const auto& e : g.edges) cp.edges.push_back({e.a, e.b, static_cast<CreaseLabel>(e.label)});
  return cp;
}

ValidationReport validate_pattern(const CreasePattern& cp) {
  ValidationReport rep;
  auto note = [&](const std::string& s) { rep.violations.push_back(s); };

  for (size_t i = 0; i < cp.verts.size(); ++i)
    for (size_t j = i + 1; j < cp.verts.size(); ++j)
      if (cp.verts[i] == cp.verts[j]) note("duplicate vertices " + std::to_string(i) + "," + std::to_string(j));

  std::set<std::pair<int, int>> seen;
  for (size_t e = 0; e < cp.edges.size(); ++e) {
    const auto& ed = cp.edges[e];
    if (ed.a == ed.b || cp.verts[ed.a] == cp.verts[ed.b]) {
      note("zero-length edge " + std::to_string(e));
      continue;
    }
    auto key = std::minmax(ed.a, ed.b);
    if (!seen.insert(key).second) note("duplicate edge " + std::to_string(e));
    if (!classify_dir(cp.verts[ed.b] - cp.verts[ed.a]))
      note("edge " + std::to_string(e) + " direction not a multiple of 15 degrees");
  }

  // Edges may touch only at shared endpoint vertices.
  for (size_t i = 0; i < cp.edges.size(); ++i) {
    for (size_t j = i + 1; j < cp.edges.size(); ++j) {
      Segment si = cp.edge_seg(static_cast<int>(i));
      Segment sj = cp.edge_seg(static_cast<int>(j));
      auto res = segment_intersect(si, sj);
      if (std::holds_alternative<IntersectEmpty>(res)) continue;
      if (auto* pt = std::get_if<IntersectPoint>(&res)) {
        bool shared = (pt->at == si.p || pt->at == si.q) && (pt->at == sj.p || pt->at == sj.q);
        if (!shared) {
          std::ostringstream os;
          os << "edges " << i << "," << j << " intersect off-vertex";
          note(os.str());
        }
      } else {
        note("edges " + std::to_string(i) + "," + std::to_string(j) + " overlap");
      }
    }
  }

  // Boundary must form one closed loop, and everything must sit inside it.
  auto loop = cp.boundary_loop();
  bool has_boundary = false;
  for (const auto& e : cp.edges) has_boundary |= (e.label == CreaseLabel::Boundary);
  if (!has_boundary) {
    note("no boundary edges");
  } else if (loop.empty()) {
    note("boundary edges do not form a single closed loop");
  } else {
    auto poly = cp.boundary_polygon();
    std::set<int> on_loop(loop.begin(), loop.end());
    for (size_t v = 0; v < cp.verts.size(); ++v) {
      if (on_loop.count(static_cast<int>(v))) continue;
      if (!point_in_polygon(cp.verts[v], poly) && !point_on_polygon_boundary(cp.verts[v], poly))
        note("vertex " + std::to_string(v) + " outside region");
    }
  }
  return rep;
}

Selection make_selection(const CreasePattern& cp, const std::vector<int>& chosen_optional) {
  Selection sel;
  sel.cp = &cp;
  sel.chosen.assign(cp.edges.size(), 0);
  for (int e : chosen_optional) {
    if (e < 0 || e >= static_cast<int>(cp.edges.size()))
      throw NotOptionalError("selection index out of range");
    if (!label_optional(cp.edges[e].label))
      throw NotOptionalError("edge " + std::to_string(e) + " is not optional");
    sel.chosen[e] = 1;
  }
  return sel;
}

int FaceComplex::face_containing(const ExactPoint& p) const {
  for (int f = 0; f < face_count(); ++f)
    if (point_in_polygon(p, polys[f])) return f;
  return -1;
}

BuildFacesResult build_faces(const CreasePattern& cp, const Selection& sel,
                             const std::optional<ExactPoint>& anchor) {
  BuildFacesResult res;
  FaceComplex fc;
  fc.cp = &cp;
  fc.sel = sel;
  fc.g.verts = cp.verts;

  std::set<int> boundary_verts;
  for (const auto& e : cp.edges)
    if (e.label == CreaseLabel::Boundary) {
      boundary_verts.insert(e.a);
      boundary_verts.insert(e.b);
    }

  std::vector<int> active_degree(cp.verts.size(), 0);
  for (size_t e = 0; e < cp.edges.size(); ++e) {
    const auto& ed = cp.edges[e];
    bool keep = false;
    if (ed.label == CreaseLabel::Boundary) {
      keep = true;
    } else if (sel.is_active(static_cast<int>(e))) {
      keep = true;
      active_degree[ed.a]++;
      active_degree[ed.b]++;
    }
    if (keep) {
      fc.g.edges.push_back({ed.a, ed.b, static_cast<int>(ed.label)});
      fc.g_edge_pattern.push_back(static_cast<int>(e));
    }
  }

  for (size_t v = 0; v < cp.verts.size(); ++v) {
    if (boundary_verts.count(static_cast<int>(v))) continue;
    if (active_degree[v] == 1) {
      res.error = FaceError::DanglingCrease;
      res.vertex = static_cast<int>(v);
      return res;
    }
    if (active_degree[v] % 2 != 0) {
      res.error = FaceError::OddDegreeVertex;
      res.vertex = static_cast<int>(v);
      return res;
    }
  }

  fc.faces = trace_faces(fc.g);
  for (const auto& loop : fc.faces.loops) {
    std::vector<ExactPoint> poly;
    for (int v : loop) poly.push_back(cp.verts[v]);
    fc.polys.push_back(std::move(poly));
  }

  // Adjacency across each graph edge.
  fc.edge_faces.assign(fc.g.edges.size(), {-1, -1});
  for (size_t e = 0; e < fc.g.edges.size(); ++e) {
    auto itF = fc.faces.face_of_halfedge.find({static_cast<int>(e), true});
    auto itB = fc.faces.face_of_halfedge.find({static_cast<int>(e), false});
    fc.edge_faces[e] = {itF == fc.faces.face_of_halfedge.end() ? -1 : itF->second,
                        itB == fc.faces.face_of_halfedge.end() ? -1 : itB->second};
  }

  // Anchor: given point's face, else the face with the least canonical polygon.
  int anchor_face = -1;
  if (anchor) {
    anchor_face = fc.face_containing(*anchor);
  } else {
    std::vector<ExactPoint> best;
    for (int f = 0; f < fc.face_count(); ++f) {
      auto c = canonical_polygon(fc.polys[f]);
      if (anchor_face == -1 ||
          std::lexicographical_compare(c.begin(), c.end(), best.begin(), best.end())) {
        anchor_face = f;
        best = c;
      }
    }
  }
  if (anchor_face < 0) {
    res.error = FaceError::Inconsistent;
    return res;
  }
  fc.anchor_face = anchor_face;

  // Orientation 2-coloring: flips across active creases.
  fc.orientation.assign(fc.face_count(), 0);
  fc.orientation[anchor_face] = 1;
  std::queue<int> bfs;
  bfs.push(anchor_face);
  while (!bfs.empty()) {
    int f = bfs.front();
    bfs.pop();
    for (size_t e = 0; e < fc.g.edges.size(); ++e) {
      if (static_cast<CreaseLabel>(fc.g.edges[e].label) == CreaseLabel::Boundary) continue;
      auto [fl, fr] = fc.edge_faces[e];
      int other = -1;
      if (fl == f) other = fr;
      else if (fr == f) other = fl;
      if (other < 0) continue;
      int want = -fc.orientation[f];
      if (fc.orientation[other] == 0) {
        fc.orientation[other] = want;
        bfs.push(other);
      } else if (fc.orientation[other] != want) {
        res.error = FaceError::Inconsistent;
        return res;
      }
    }
  }
  for (int f = 0; f < fc.face_count(); ++f) {
    if (fc.orientation[f] == 0) {
      // Region is a disk, so the face complex is edge-connected.
      res.error = FaceError::Inconsistent;
      return res;
    }
  }

  res.fc = std::move(fc);
  return res;
}

}  // namespace ori
