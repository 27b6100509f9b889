#pragma once

#include "ori/pattern.hpp"

#include <vector>

namespace ori {

// Active creases around one interior vertex, ccw-sorted.
struct StarCrease {
  int k;          // Dir15 index pointing away from the vertex
  bool mountain;  // false = valley
};

struct VertexStar {
  std::vector<StarCrease> creases;  // sorted by k, distinct directions

  int count() const { return static_cast<int>(creases.size()); }
  int mountains() const;
  // Sector angles between consecutive creases, units of 15 degrees, sum 24.
  std::vector<int> sectors() const;
};

// Star of the active creases at a pattern vertex. Returns nullopt for
// boundary vertices (the theorems below are interior-vertex statements).
std::optional<VertexStar> make_star(const CreasePattern& cp, const Selection& sel, int vertex);

// Alternating sector sums both equal pi. False for odd degree.
bool kawasaki_check(const VertexStar& star);

// |#mountains - #valleys| == 2.
bool maekawa_check(const VertexStar& star);

// Full single-vertex flat-foldability with the given MV assignment:
// folds the sectors as a cyclic strip and searches exhaustively for a
// stacking satisfying the layer conditions. Exact and memoized.
bool single_vertex_foldable(const VertexStar& star);

// A simple closed vertex-avoiding curve on a flat-foldable pattern:
// the creases it crosses, in order, with the angle to the next crossing.
struct LoopCrossing {
  struct Crossing {
    bool mountain;
    int units_to_next;  // sector angle to the next crossing, 15-degree units
  };
  std::vector<Crossing> xs;
};

// Alternating angle sums == (M-V)/2 * pi, all mod 2 pi. False when the
// crossing count is odd (no flat folding admits such a loop).
bool justin_check(const LoopCrossing& loop);

// True iff no nonempty proper subset of the gaps sums to 0 mod pi
// (12 units); under this hypothesis every wire is forced to exactly one
// active valley.
bool gadget_angle_condition(const std::vector<int>& gap_units);

// A wire's two optional valley edges; the middle mountain is mandatory.
struct WireRef {
  int true_valley_edge;
  int false_valley_edge;
};

// Exactly one of the wire's optional valleys is active.
bool wire_single_valley(const Selection& sel, const WireRef& wire);

}  // namespace ori
