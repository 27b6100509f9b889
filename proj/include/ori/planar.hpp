#pragma once

#include "ori/exact.hpp"

#include <map>
#include <vector>

namespace ori {

// A noded planar straight-line graph: edges meet only at shared vertices,
// every edge direction is on the 15-degree grid.
struct PlanarGraph {
  std::vector<ExactPoint> verts;
  struct Edge {
    int a, b;
    int label;  // caller-defined payload (crease label, etc.)
  };
  std::vector<Edge> edges;

  int vertex_id(const ExactPoint& p) const;  // -1 if absent
  std::vector<std::vector<int>> vertex_edges() const;  // incident edge ids per vertex
};

struct LabeledSeg {
  ExactPoint p, q;
  int label;
};

// Splits segments at all mutual intersections and contained endpoints,
// deduplicates vertices and edges exactly. Collinear overlapping pieces with
// equal labels merge; with different labels planarize throws.
PlanarGraph planarize(const std::vector<LabeledSeg>& segs);

// Faces of a noded graph. Bounded faces are counterclockwise vertex loops;
// the outer walk(s) come out clockwise and are reported separately.
struct FaceSet {
  std::vector<std::vector<int>> loops;        // bounded faces, ccw
  std::vector<std::vector<int>> outer_loops;  // unbounded walks, cw
  // halfedge (edge_id, forward?) -> bounded face id, or -1 for outer.
  std::map<std::pair<int, bool>, int> face_of_halfedge;
};
FaceSet trace_faces(const PlanarGraph& g);

// Twice the signed area of a vertex loop.
ExactScalar polygon_area2(const std::vector<ExactPoint>& poly);

bool point_in_polygon(const ExactPoint& pt, const std::vector<ExactPoint>& poly);
bool point_on_polygon_boundary(const ExactPoint& pt, const std::vector<ExactPoint>& poly);

// Parts of s strictly inside the polygon (boundary-touching allowed).
std::vector<Segment> clip_segment_to_polygon(const Segment& s, const std::vector<ExactPoint>& poly);

// Drops collinear middle vertices; canonical reduced polygon.
std::vector<ExactPoint> reduce_polygon(const std::vector<ExactPoint>& poly);

// Canonical form for exact polygon comparison: reduced, ccw, rotated so the
// least vertex comes first.
std::vector<ExactPoint> canonical_polygon(const std::vector<ExactPoint>& poly);

// A representative interior point of a simple polygon (exact).
ExactPoint polygon_interior_point(const std::vector<ExactPoint>& poly);

}  // namespace ori
