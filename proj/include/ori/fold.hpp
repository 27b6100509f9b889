#pragma once

#include "ori/local.hpp"
#include "ori/pattern.hpp"

#include <string>
#include <vector>

namespace ori {

inline constexpr long long kDefaultBudget = 10'000'000;

// Per-face isometries of the folding map; the anchor face gets the identity.
struct FoldedState {
  const FaceComplex* fc = nullptr;
  std::vector<Isometry> face_iso;
};

struct FoldMapResult {
  bool ok = false;
  std::string error;
  FoldedState fs;
};

FoldMapResult fold_map(const FaceComplex& fc);

// Superposition net: the subdivision of the pattern by the preimage of the
// folded image of the crease set, refined per face. Cells with identical
// folded images form overlap classes; layer constraints live on the links.
struct SNet {
  struct Cell {
    int face;
    std::vector<ExactPoint> poly;       // paper coords, ccw (may keep collinear verts)
    std::vector<ExactPoint> folded_key; // canonical folded polygon
    int cls;
  };
  enum class LinkKind { Fold, Flat, Free };
  struct Link {
    int a = -1, b = -1;  // cell ids; b = -1 for Free
    LinkKind kind = LinkKind::Free;
    bool mountain = false;  // Fold only
    int orient_a = 0;       // orientation of cell a's face (Fold only)
    Segment folded_seg;     // canonical (p < q)
  };
  std::vector<Cell> cells;
  std::vector<Link> links;
  int num_classes = 0;
  std::vector<std::vector<int>> class_cells;  // per class, ascending cell ids
};

SNet build_snet(const FoldedState& fs);

// A strict total order per overlap class, bottom to top.
struct LayerOrder {
  std::vector<std::vector<int>> stacks;
};

struct SolveStats {
  long long nodes = 0;
};

enum class SolveStatus { Sat, Unsat, Budget };

SolveStatus solve_layers(const SNet& net, long long budget, LayerOrder* out, SolveStats* stats);

// All valid layer orders in a canonical (search) order, up to cap.
struct EnumerateResult {
  std::vector<LayerOrder> orders;
  bool cap_exceeded = false;
  bool budget_exceeded = false;
  SolveStats stats;
};
EnumerateResult enumerate_layer_orders(const FoldedState& fs, const SNet& net, int cap,
                                       long long budget = kDefaultBudget);

enum class FoldVerdict { Yes, No, Unknown };

struct GlobalResult {
  FoldVerdict verdict = FoldVerdict::Unknown;
  std::string reason;
  LayerOrder order;  // valid when verdict == Yes
  SolveStats stats;
};

// Full pipeline: faces -> local necessary checks -> fold map -> s-net ->
// layer search. Never reports No unless a necessary condition failed or the
// search space was exhausted.
GlobalResult globally_flat_foldable(const CreasePattern& cp, const Selection& sel,
                                    long long budget = kDefaultBudget,
                                    const std::optional<ExactPoint>& anchor = std::nullopt);

}  // namespace ori
