#pragma once

#include "ori/planar.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ori {

enum class CreaseLabel : int {
  MountainMandatory = 0,
  ValleyMandatory = 1,
  MountainOptional = 2,
  ValleyOptional = 3,
  Boundary = 4,
};

inline bool label_optional(CreaseLabel l) {
  return l == CreaseLabel::MountainOptional || l == CreaseLabel::ValleyOptional;
}
inline bool label_mountain(CreaseLabel l) {
  return l == CreaseLabel::MountainMandatory || l == CreaseLabel::MountainOptional;
}
inline bool label_crease(CreaseLabel l) { return l != CreaseLabel::Boundary; }

// Planar straight-line graph with labeled edges. Stored form is expected to
// be noded (edges meet only at shared endpoint vertices); validate_pattern
// reports violations for raw input.
struct CreasePattern {
  std::vector<ExactPoint> verts;
  struct Edge {
    int a, b;
    CreaseLabel label;
  };
  std::vector<Edge> edges;

  Segment edge_seg(int e) const { return {verts[edges[e].a], verts[edges[e].b]}; }
  std::vector<int> optional_edges() const;
  // The outer boundary as a ccw vertex loop (requires valid Boundary edges).
  std::vector<int> boundary_loop() const;
  std::vector<ExactPoint> boundary_polygon() const;
};

struct CreaseSeg {
  Segment s;
  CreaseLabel label;
};

// Planarizes raw segments into a noded pattern; throws on conflicting labels.
CreasePattern build_pattern(const std::vector<CreaseSeg>& segs);

struct ValidationReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};
ValidationReport validate_pattern(const CreasePattern& cp);

// A choice of active optional creases; mandatory creases are always active.
struct Selection {
  const CreasePattern* cp = nullptr;
  std::vector<char> chosen;  // per edge; meaningful for optional edges only

  bool is_active(int e) const {
    CreaseLabel l = cp->edges[e].label;
    if (l == CreaseLabel::Boundary) return false;
    if (!label_optional(l)) return true;
    return chosen[e] != 0;
  }
  bool is_mountain(int e) const { return label_mountain(cp->edges[e].label); }
};

struct NotOptionalError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
Selection make_selection(const CreasePattern& cp, const std::vector<int>& chosen_optional);

enum class FaceError { None, OddDegreeVertex, DanglingCrease, Inconsistent };

// Faces of the subdivision induced by active creases plus the boundary,
// with the alternating orientation 2-coloring.
struct FaceComplex {
  const CreasePattern* cp = nullptr;
  Selection sel;
  PlanarGraph g;                    // verts shared with cp; active + boundary edges
  std::vector<int> g_edge_pattern;  // graph edge -> pattern edge id
  FaceSet faces;
  std::vector<std::vector<ExactPoint>> polys;   // per face, ccw vertex loop
  std::vector<int> orientation;                 // +1 / -1 per face
  int anchor_face = 0;
  std::vector<std::pair<int, int>> edge_faces;  // per graph edge: (left face, right face), -1 = outer

  int face_count() const { return static_cast<int>(faces.loops.size()); }
  int face_containing(const ExactPoint& p) const;  // -1 if none (on an edge / outside)
};

struct BuildFacesResult {
  FaceError error = FaceError::None;
  int vertex = -1;  // offending vertex for degree errors
  std::optional<FaceComplex> fc;
  bool ok() const { return error == FaceError::None; }
};

BuildFacesResult build_faces(const CreasePattern& cp, const Selection& sel,
                             const std::optional<ExactPoint>& anchor = std::nullopt);

}  // namespace ori
