#include "ori/planar.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <stdexcept>

namespace ori {

int PlanarGraph::vertex_id(const ExactPoint& p) const {
  for (size_t i = 0; i < verts.size(); ++i)
    if (verts[i] == p) return static_cast<int>(i);
  return -1;
}

std::vector<std::vector<int>> PlanarGraph::vertex_edges() const {
  std::vector<std::vector<int>> inc(verts.size());
  for (size_t e = 0; e < edges.size(); ++e) {
    inc[edges[e].a].push_back(static_cast<int>(e));
    inc[edges[e].b].push_back(static_cast<int>(e));
  }
  return inc;
}

PlanarGraph planarize(const std::vector<LabeledSeg>& segs) {
  const size_t n = segs.size();
  for (const auto& s : segs)
    if (s.p == s.q) throw std::invalid_argument("zero-length segment");

  // Cut points on each segment, as exact points.
  std::vector<std::vector<ExactPoint>> cuts(n);
  for (size_t i = 0; i < n; ++i) {
    cuts[i].push_back(segs[i].p);
    cuts[i].push_back(segs[i].q);
  }
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      auto res = segment_intersect({segs[i].p, segs[i].q}, {segs[j].p, segs[j].q});
      if (auto* pt = std::get_if<IntersectPoint>(&res)) {
        cuts[i].push_back(pt->at);
        cuts[j].push_back(pt->at);
      } else if (auto* ov = std::get_if<IntersectOverlap>(&res)) {
        if (segs[i].label != segs[j].label)
          throw std::invalid_argument("overlapping segments with conflicting labels");
        cuts[i].push_back(ov->part.p);
        cuts[i].push_back(ov->part.q);
        cuts[j].push_back(ov->part.p);
        cuts[j].push_back(ov->part.q);
      }
    }
  }

  PlanarGraph g;
  std::map<ExactPoint, int> vid;
  auto intern = [&](const ExactPoint& p) {
    auto it = vid.find(p);
    if (it != vid.end()) return it->second;
    int id = static_cast<int>(g.verts.size());
    g.verts.push_back(p);
    vid.emplace(p, id);
    return id;
  };

  std::set<std::tuple<int, int, int>> seen;  // (a,b,label) canonical
  for (size_t i = 0; i < n; ++i) {
    ExactPoint d = segs[i].q - segs[i].p;
    ExactScalar dd = dot(d, d);
    auto param = [&](const ExactPoint& p) { return dot(p - segs[i].p, d) / dd; };
    std::sort(cuts[i].begin(), cuts[i].end(),
              [&](const ExactPoint& u, const ExactPoint& v) { return param(u) < param(v); });
    cuts[i].erase(std::unique(cuts[i].begin(), cuts[i].end()), cuts[i].end());
    for (size_t t = 0; t + 1 < cuts[i].size(); ++t) {
      int a = intern(cuts[i][t]);
      int b = intern(cuts[i][t + 1]);
      assert(a != b);
      auto key = std::make_tuple(std::min(a, b), std::max(a, b), segs[i].label);
      if (seen.count(key)) continue;
      // Same piece under a different label is a conflict.
      for (int lbl = 0; lbl < 16; ++lbl) {
        if (lbl != segs[i].label && seen.count(std::make_tuple(std::min(a, b), std::max(a, b), lbl)))
          throw std::invalid_argument("duplicate edge with conflicting labels");
      }
      seen.insert(key);
      g.edges.push_back({a, b, segs[i].label});
    }
  }
  return g;
}

namespace {

Dir15 edge_dir(const PlanarGraph& g, int from, int to) {
  auto d = classify_dir(g.verts[to] - g.verts[from]);
  if (!d) throw std::invalid_argument("edge direction not a multiple of 15 degrees");
  return *d;
}

}  // namespace

FaceSet trace_faces(const PlanarGraph& g) {
  // Halfedge h = 2*e (a->b) or 2*e+1 (b->a).
  const int H = static_cast<int>(g.edges.size()) * 2;
  auto src = [&](int h) { return (h & 1) ? g.edges[h >> 1].b : g.edges[h >> 1].a; };
  auto dst = [&](int h) { return (h & 1) ? g.edges[h >> 1].a : g.edges[h >> 1].b; };

  // Outgoing halfedges per vertex, sorted ccw by direction.
  std::vector<std::vector<std::pair<int, int>>> out(g.verts.size());  // (dir k, halfedge)
  for (int h = 0; h < H; ++h)
    out[src(h)].push_back({edge_dir(g, src(h), dst(h)).k, h});
  for (auto& v : out) {
    std::sort(v.begin(), v.end());
    for (size_t i = 1; i < v.size(); ++i)
      if (v[i].first == v[i - 1].first)
        throw std::invalid_argument("two edges leave a vertex in the same direction");
  }

  // next(h): at v = dst(h), turn to the cw-neighbor of the reverse direction.
  // Walking this way traces bounded faces counterclockwise.
  auto next_halfedge = [&](int h) {
    int v = dst(h);
    int back = (edge_dir(g, dst(h), src(h))).k;
    const auto& ring = out[v];
    // Smallest cw distance from the reverse direction wins.
    int best_idx = -1;
    for (size_t i = 0; i < ring.size(); ++i) {
      int k = ring[i].first;
      int delta = ((back - k) % 24 + 24) % 24;  // cw distance from back to k
      if (delta == 0) continue;
      if (best_idx == -1) { best_idx = static_cast<int>(i); continue; }
      int bd = ((back - ring[best_idx].first) % 24 + 24) % 24;
      if (delta < bd) best_idx = static_cast<int>(i);
    }
    if (best_idx == -1) {
      // Dead end: bounce back along the same edge.
      return h ^ 1;
    }
    return ring[best_idx].second;
  };

  FaceSet fs;
  std::vector<int> face_of(H, -2);
  for (int h0 = 0; h0 < H; ++h0) {
    if (face_of[h0] != -2) continue;
    std::vector<int> walk;
    int h = h0;
    do {
      walk.push_back(h);
      h = next_halfedge(h);
    } while (h != h0);
    std::vector<ExactPoint> poly;
    std::vector<int> loop;
    for (int hh : walk) {
      loop.push_back(src(hh));
      poly.push_back(g.verts[src(hh)]);
    }
    int sign = polygon_area2(poly).sign();
    int id;
    if (sign > 0) {
      id = static_cast<int>(fs.loops.size());
      fs.loops.push_back(loop);
    } else {
      id = -1;
      fs.outer_loops.push_back(loop);
    }
    for (int hh : walk) {
      face_of[hh] = id;
      fs.face_of_halfedge[{hh >> 1, (hh & 1) == 0}] = id;
    }
  }
  return fs;
}

ExactScalar polygon_area2(const std::vector<ExactPoint>& poly) {
  ExactScalar s(0);
  for (size_t i = 0; i < poly.size(); ++i) {
    const auto& p = poly[i];
    const auto& q = poly[(i + 1) % poly.size()];
    s += cross(p, q);
  }
  return s;
}

bool point_on_polygon_boundary(const ExactPoint& pt, const std::vector<ExactPoint>& poly) {
  for (size_t i = 0; i < poly.size(); ++i)
    if (point_on_segment(pt, {poly[i], poly[(i + 1) % poly.size()]})) return true;
  return false;
}

bool point_in_polygon(const ExactPoint& pt, const std::vector<ExactPoint>& poly) {
  if (point_on_polygon_boundary(pt, poly)) return false;
  // Ray cast toward +x with the half-open [ymin, ymax) rule.
  bool inside = false;
  for (size_t i = 0; i < poly.size(); ++i) {
    const ExactPoint& a = poly[i];
    const ExactPoint& b = poly[(i + 1) % poly.size()];
    int sa = (a.y - pt.y).sign();
    int sb = (b.y - pt.y).sign();
    if ((sa >= 0) == (sb >= 0)) continue;  // edge does not span the ray's line
    // x-coordinate of the crossing.
    ExactScalar xc = a.x + (b.x - a.x) * ((pt.y - a.y) / (b.y - a.y));
    if ((xc - pt.x).sign() > 0) inside = !inside;
  }
  return inside;
}

std::vector<Segment> clip_segment_to_polygon(const Segment& s, const std::vector<ExactPoint>& poly) {
  ExactPoint d = s.q - s.p;
  ExactScalar dd = dot(d, d);
  std::vector<ExactScalar> ts{ExactScalar(0), ExactScalar(1)};
  for (size_t i = 0; i < poly.size(); ++i) {
    auto res = segment_intersect(s, {poly[i], poly[(i + 1) % poly.size()]});
    if (auto* pt = std::get_if<IntersectPoint>(&res)) {
      ts.push_back(dot(pt->at - s.p, d) / dd);
    } else if (auto* ov = std::get_if<IntersectOverlap>(&res)) {
      ts.push_back(dot(ov->part.p - s.p, d) / dd);
      ts.push_back(dot(ov->part.q - s.p, d) / dd);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());
  std::vector<Segment> out;
  auto at = [&](const ExactScalar& t) { return ExactPoint{s.p.x + d.x * t, s.p.y + d.y * t}; };
  for (size_t i = 0; i + 1 < ts.size(); ++i) {
    ExactScalar mid = (ts[i] + ts[i + 1]) / ExactScalar(2);
    ExactPoint m = at(mid);
    if (point_in_polygon(m, poly) || point_on_polygon_boundary(m, poly))
      out.push_back({at(ts[i]), at(ts[i + 1])});
  }
  // Merge adjacent kept pieces.
  std::vector<Segment> merged;
  for (const auto& seg : out) {
    if (!merged.empty() && merged.back().q == seg.p)
      merged.back().q = seg.q;
    else
      merged.push_back(seg);
  }
  return merged;
}

std::vector<ExactPoint> reduce_polygon(const std::vector<ExactPoint>& poly) {
  // Iterate until no consecutive duplicates or collinear middles remain;
  // degenerate spurs (p q p) collapse fully.
  std::vector<ExactPoint> cur = poly;
  bool changed = true;
  while (changed && cur.size() >= 3) {
    changed = false;
    std::vector<ExactPoint> next;
    const size_t n = cur.size();
    for (size_t i = 0; i < n; ++i) {
      const ExactPoint& prev = cur[(i + n - 1) % n];
      const ExactPoint& here = cur[i];
      const ExactPoint& after = cur[(i + 1) % n];
      bool drop = (here == after) ||
                  (here != prev && cross(here - prev, after - here).is_zero());
      if (drop) {
        changed = true;
        continue;
      }
      next.push_back(here);
    }
    cur = std::move(next);
  }
  return cur;
}

std::vector<ExactPoint> canonical_polygon(const std::vector<ExactPoint>& poly) {
  std::vector<ExactPoint> p = reduce_polygon(poly);
  if (p.empty()) return p;
  if (polygon_area2(p).sign() < 0) std::reverse(p.begin(), p.end());
  size_t best = 0;
  for (size_t i = 1; i < p.size(); ++i)
    if (p[i] < p[best]) best = i;
  std::rotate(p.begin(), p.begin() + best, p.end());
  return p;
}

ExactPoint polygon_interior_point(const std::vector<ExactPoint>& poly) {
  // Fan from the least vertex; the first triangle midpoint inside wins.
  std::vector<ExactPoint> p = canonical_polygon(poly);
  const size_t n = p.size();
  if (n < 3) throw std::invalid_argument("degenerate polygon");
  for (size_t i = 1; i + 1 < n; ++i) {
    ExactScalar three(3);
    ExactPoint c{(p[0].x + p[i].x + p[i + 1].x) / three, (p[0].y + p[i].y + p[i + 1].y) / three};
    if (point_in_polygon(c, p)) return c;
  }
  throw std::logic_error("no interior point found");
}

}  // namespace ori
