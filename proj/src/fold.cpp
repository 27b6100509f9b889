#include "ori/fold.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <queue>
#include <set>

namespace ori {

namespace {

Segment canonical_seg(const Segment& s) {
  if (s.q < s.p) return {s.q, s.p};
  return s;
}

Isometry edge_reflection(const FaceComplex& fc, int graph_edge) {
  const auto& e = fc.g.edges[graph_edge];
  ExactPoint a = fc.g.verts[e.a];
  ExactPoint b = fc.g.verts[e.b];
  auto d = classify_dir(b - a);
  assert(d);
  return Isometry::reflection(a, *d);
}

}  // namespace

FoldMapResult fold_map(const FaceComplex& fc) {
  FoldMapResult res;
  const int F = fc.face_count();
  res.fs.fc = &fc;
  res.fs.face_iso.assign(F, Isometry::identity());
  std::vector<char> done(F, 0);
  done[fc.anchor_face] = 1;
  std::queue<int> bfs;
  bfs.push(fc.anchor_face);
  // Crossing a crease from face f composes f's isometry with the reflection
  // across the crease line (in paper coordinates).
  std::vector<std::vector<std::pair<int, int>>> face_edges(F);  // face -> (edge, other)
  for (size_t e = 0; e < fc.g.edges.size(); ++e) {
    if (static_cast<CreaseLabel>(fc.g.edges[e].label) == CreaseLabel::Boundary) continue;
    auto [fl, fr] = fc.edge_faces[e];
    if (fl >= 0 && fr >= 0) {
      face_edges[fl].push_back({static_cast<int>(e), fr});
      face_edges[fr].push_back({static_cast<int>(e), fl});
    }
  }
  while (!bfs.empty()) {
    int f = bfs.front();
    bfs.pop();
    for (auto [e, g] : face_edges[f]) {
      Isometry want = res.fs.face_iso[f].compose(edge_reflection(fc, e));
      if (!done[g]) {
        res.fs.face_iso[g] = want;
        done[g] = 1;
        bfs.push(g);
      } else if (!(res.fs.face_iso[g] == want)) {
        res.error = "inconsistent reflection cycle (Kawasaki violation)";
        return res;
      }
    }
  }
  for (int f = 0; f < F; ++f) {
    if (!done[f]) {
      res.error = "face complex not edge-connected";
      return res;
    }
  }
  res.ok = true;
  return res;
}

SNet build_snet(const FoldedState& fs) {
  const FaceComplex& fc = *fs.fc;
  SNet net;

  // Folded image of every graph edge (creases and boundary), deduplicated.
  std::vector<Segment> folded_segs;
  {
    std::set<std::pair<ExactPoint, ExactPoint>> seen;
    for (size_t e = 0; e < fc.g.edges.size(); ++e) {
      auto [fl, fr] = fc.edge_faces[e];
      int f = fl >= 0 ? fl : fr;
      if (f < 0) continue;
      const auto& ed = fc.g.edges[e];
      Segment img = canonical_seg({fs.face_iso[f].apply(fc.g.verts[ed.a]),
                                   fs.face_iso[f].apply(fc.g.verts[ed.b])});
      if (seen.insert({img.p, img.q}).second) folded_segs.push_back(img);
    }
  }

  // Per face: cut the face polygon by the pullbacks of all folded segments.
  for (int f = 0; f < fc.face_count(); ++f) {
    const auto& poly = fc.polys[f];
    Isometry inv = fs.face_iso[f].inverse();
    std::vector<LabeledSeg> local;
    const size_t nv = poly.size();
    for (size_t i = 0; i < nv; ++i)
      local.push_back({poly[i], poly[(i + 1) % nv], 0});
    for (const auto& fseg : folded_segs) {
      Segment pb{inv.apply(fseg.p), inv.apply(fseg.q)};
      for (const auto& piece : clip_segment_to_polygon(pb, poly))
        if (!(piece.p == piece.q)) local.push_back({piece.p, piece.q, 0});
    }
    PlanarGraph lg = planarize(local);
    FaceSet lf = trace_faces(lg);
    for (const auto& loop : lf.loops) {
      SNet::Cell cell;
      cell.face = f;
      for (int v : loop) cell.poly.push_back(lg.verts[v]);
      std::vector<ExactPoint> folded;
      for (const auto& p : cell.poly) folded.push_back(fs.face_iso[f].apply(p));
      cell.folded_key = canonical_polygon(folded);
      cell.cls = -1;
      net.cells.push_back(std::move(cell));
    }
  }

  // Overlap classes by exact folded-image equality.
  {
    std::map<std::vector<ExactPoint>, int, bool (*)(const std::vector<ExactPoint>&,
                                                    const std::vector<ExactPoint>&)>
        cls_of([](const std::vector<ExactPoint>& a, const std::vector<ExactPoint>& b) {
          return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
        });
    for (auto& cell : net.cells) {
      auto it = cls_of.find(cell.folded_key);
      if (it == cls_of.end()) {
        cell.cls = net.num_classes;
        cls_of.emplace(cell.folded_key, net.num_classes);
        ++net.num_classes;
      } else {
        cell.cls = it->second;
      }
    }
    net.class_cells.assign(net.num_classes, {});
    for (size_t c = 0; c < net.cells.size(); ++c)
      net.class_cells[net.cells[c].cls].push_back(static_cast<int>(c));
  }

  // Active crease pieces for classifying shared edges.
  std::vector<std::pair<Segment, bool>> crease_pieces;  // (segment, mountain)
  for (size_t e = 0; e < fc.g.edges.size(); ++e) {
    CreaseLabel l = static_cast<CreaseLabel>(fc.g.edges[e].label);
    if (l == CreaseLabel::Boundary) continue;
    crease_pieces.push_back({{fc.g.verts[fc.g.edges[e].a], fc.g.verts[fc.g.edges[e].b]},
                             label_mountain(l)});
  }
  auto on_crease = [&](const Segment& s, bool* mountain) {
    for (const auto& [cs, m] : crease_pieces) {
      if (point_on_segment(s.p, cs) && point_on_segment(s.q, cs)) {
        *mountain = m;
        return true;
      }
    }
    return false;
  };

  // Match cell boundary pieces by canonical paper segment.
  std::map<std::pair<ExactPoint, ExactPoint>, std::vector<int>> edge_cells;
  for (size_t c = 0; c < net.cells.size(); ++c) {
    const auto& poly = net.cells[c].poly;
    for (size_t i = 0; i < poly.size(); ++i) {
      Segment s = canonical_seg({poly[i], poly[(i + 1) % poly.size()]});
      edge_cells[{s.p, s.q}].push_back(static_cast<int>(c));
    }
  }
  for (const auto& [key, cells] : edge_cells) {
    Segment paper_seg{key.first, key.second};
    SNet::Link link;
    assert(cells.size() <= 2);
    if (cells.size() == 1) {
      link.a = cells[0];
      link.kind = SNet::LinkKind::Free;
      const auto& ca = net.cells[link.a];
      link.folded_seg = canonical_seg({fs.face_iso[ca.face].apply(paper_seg.p),
                                       fs.face_iso[ca.face].apply(paper_seg.q)});
      net.links.push_back(link);
      continue;
    }
    link.a = cells[0];
    link.b = cells[1];
    const auto& ca = net.cells[link.a];
    const auto& cb = net.cells[link.b];
    link.folded_seg = canonical_seg({fs.face_iso[ca.face].apply(paper_seg.p),
                                     fs.face_iso[ca.face].apply(paper_seg.q)});
    if (ca.face == cb.face) {
      link.kind = SNet::LinkKind::Flat;
    } else {
      bool mountain = false;
      bool is_crease = on_crease(paper_seg, &mountain);
      assert(is_crease && "cells of different faces must meet on an active crease");
      (void)is_crease;
      link.kind = SNet::LinkKind::Fold;
      link.mountain = mountain;
      link.orient_a = fc.orientation[ca.face];
      assert(ca.cls == cb.cls && "fold pair must strictly overlap");
    }
    net.links.push_back(link);
  }
  return net;
}

namespace {

// Backtracking CSP over pairwise below/above variables within each overlap
// class. Values: 0 unknown, 1 = first below second, 2 = first above second.
struct LayerSolver {
  const SNet& net;
  long long budget;
  long long nodes = 0;
  bool budget_hit = false;

  // Pair variable storage: per class, triangular matrix over member index.
  std::vector<std::vector<char>> rel;  // class -> m*m matrix
  std::vector<int> cls_size;
  std::vector<std::map<int, int>> cell_pos;  // class -> cell id -> member index

  struct PairRef { int cls; int i, j; };  // i < j member indices
  std::vector<PairRef> vars;

  struct EqCon { PairRef x, y; bool flip; };  // rel(x) == rel(y) (or flipped)
  std::vector<EqCon> eqs;
  std::vector<std::array<std::pair<int, int>, 4>> quads;  // (cls fixed) cells as (cls,pos)? see below
  struct Quad { int cls; int a1, b1, a2, b2; };
  std::vector<Quad> quad_list;
  struct NotBetween { int cls; int w, a, b; };
  std::vector<NotBetween> nbs;
  struct Forced { int cls; int i, j; char v; };
  std::vector<Forced> forced;

  std::vector<std::tuple<int, int, int>> trail;  // (cls, i, j) assignments for undo

  explicit LayerSolver(const SNet& n, long long b) : net(n), budget(b) {
    const int C = net.num_classes;
    rel.resize(C);
    cls_size.resize(C);
    cell_pos.resize(C);
    for (int c = 0; c < C; ++c) {
      const auto& members = net.class_cells[c];
      cls_size[c] = static_cast<int>(members.size());
      for (size_t i = 0; i < members.size(); ++i) cell_pos[c][members[i]] = static_cast<int>(i);
      rel[c].assign(members.size() * members.size(), 0);
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = i + 1; j < members.size(); ++j)
          vars.push_back({c, static_cast<int>(i), static_cast<int>(j)});
    }
    build_constraints();
  }

  char get(int c, int i, int j) const { return rel[c][i * cls_size[c] + j]; }

  bool assign(int c, int i, int j, char v) {
    char cur = get(c, i, j);
    if (cur == v) return true;
    if (cur != 0) return false;
    rel[c][i * cls_size[c] + j] = v;
    rel[c][j * cls_size[c] + i] = (v == 1) ? 2 : 1;
    trail.push_back({c, i, j});
    return propagate(c, i, j);
  }

  void undo_to(size_t mark) {
    while (trail.size() > mark) {
      auto [c, i, j] = trail.back();
      trail.pop_back();
      rel[c][i * cls_size[c] + j] = 0;
      rel[c][j * cls_size[c] + i] = 0;
    }
  }

  bool propagate(int c, int i, int j) {
    char v = get(c, i, j);
    // Transitivity within the class.
    for (int k = 0; k < cls_size[c]; ++k) {
      if (k == i || k == j) continue;
      if (get(c, j, k) == v && !assign(c, i, k, v)) return false;
      if (get(c, k, i) == v && !assign(c, k, j, v)) return false;
    }
    // Equality couplings (tortilla consistency), then local taco conditions.
    for (const auto& eq : eqs) {
      char a = get(eq.x.cls, eq.x.i, eq.x.j);
      char b = get(eq.y.cls, eq.y.i, eq.y.j);
      char want_b = (a == 0) ? 0 : (eq.flip ? (a == 1 ? 2 : 1) : a);
      if (a != 0 && b == 0) {
        if (!assign(eq.y.cls, eq.y.i, eq.y.j, want_b)) return false;
      } else if (a != 0 && b != 0 && b != want_b) {
        return false;
      } else if (b != 0 && a == 0) {
        char want_a = eq.flip ? (b == 1 ? 2 : 1) : b;
        if (!assign(eq.x.cls, eq.x.i, eq.x.j, want_a)) return false;
      }
    }
    for (const auto& nb : nbs) {
      char wa = get(nb.cls, nb.w, nb.a);
      char wb = get(nb.cls, nb.w, nb.b);
      if (wa != 0 && wb == 0) {
        if (!assign(nb.cls, nb.w, nb.b, wa)) return false;
      } else if (wb != 0 && wa == 0) {
        if (!assign(nb.cls, nb.w, nb.a, wb)) return false;
      } else if (wa != 0 && wb != 0 && wa != wb) {
        return false;
      }
    }
    for (const auto& q : quad_list)
      if (!check_quad(q)) return false;
    return true;
  }

  bool below(int c, int i, int j) const { return get(c, i, j) == 1; }

  bool check_quad(const Quad& q) {
    const int ids[4] = {q.a1, q.b1, q.a2, q.b2};
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        if (get(q.cls, ids[x], ids[y]) == 0) return true;
    auto between = [&](int x, int u, int v) {
      return (below(q.cls, u, x) && below(q.cls, x, v)) ||
             (below(q.cls, v, x) && below(q.cls, x, u));
    };
    return between(q.a2, q.a1, q.b1) == between(q.b2, q.a1, q.b1);
  }

  void build_constraints() {
    // MV forcing per fold link.
    for (const auto& l : net.links) {
      if (l.kind != SNet::LinkKind::Fold) continue;
      int c = net.cells[l.a].cls;
      int e_cell = (l.orient_a == 1) ? l.a : l.b;
      int o_cell = (e_cell == l.a) ? l.b : l.a;
      int i = cell_pos[c][e_cell];
      int j = cell_pos[c][o_cell];
      // mountain: e above o; valley: e below o
      forced.push_back({c, i, j, static_cast<char>(l.mountain ? 2 : 1)});
    }

    // Group links by canonical folded segment.
    std::map<std::pair<ExactPoint, ExactPoint>, std::vector<int>> by_seg;
    for (size_t li = 0; li < net.links.size(); ++li) {
      const auto& l = net.links[li];
      if (l.kind == SNet::LinkKind::Free) continue;
      by_seg[{l.folded_seg.p, l.folded_seg.q}].push_back(static_cast<int>(li));
    }
    for (const auto& [seg, lis] : by_seg) {
      (void)seg;
      // Folds grouped per class (same class == same opening side).
      std::map<int, std::vector<int>> folds_by_cls;
      std::vector<int> flats;
      for (int li : lis) {
        const auto& l = net.links[li];
        if (l.kind == SNet::LinkKind::Fold)
          folds_by_cls[net.cells[l.a].cls].push_back(li);
        else
          flats.push_back(li);
      }
      for (const auto& [cls, fl] : folds_by_cls) {
        for (size_t x = 0; x < fl.size(); ++x) {
          for (size_t y = x + 1; y < fl.size(); ++y) {
            const auto& lx = net.links[fl[x]];
            const auto& ly = net.links[fl[y]];
            quad_list.push_back({cls, cell_pos[cls][lx.a], cell_pos[cls][lx.b],
                                 cell_pos[cls][ly.a], cell_pos[cls][ly.b]});
          }
        }
        // Taco-tortilla: flat sheets through this hinge with a cell in cls.
        for (int fi : flats) {
          const auto& lf = net.links[fi];
          int w = -1;
          if (net.cells[lf.a].cls == cls) w = lf.a;
          else if (net.cells[lf.b].cls == cls) w = lf.b;
          if (w < 0) continue;
          for (int li : fl) {
            const auto& l = net.links[li];
            if (w == l.a || w == l.b) continue;
            nbs.push_back({cls, cell_pos[cls][w], cell_pos[cls][l.a], cell_pos[cls][l.b]});
          }
        }
      }
      // Tortilla-tortilla: two flat sheets crossing the same hinge keep the
      // same relative order on both sides.
      for (size_t x = 0; x < flats.size(); ++x) {
        for (size_t y = x + 1; y < flats.size(); ++y) {
          const auto& lx = net.links[flats[x]];
          const auto& ly = net.links[flats[y]];
          int ax = lx.a, bx = lx.b, ay = ly.a, by = ly.b;
          // Align sides by class.
          if (net.cells[ax].cls != net.cells[ay].cls) std::swap(ay, by);
          if (net.cells[ax].cls != net.cells[ay].cls) continue;  // disjoint sheets
          if (net.cells[bx].cls != net.cells[by].cls) continue;
          int c1 = net.cells[ax].cls;
          int c2 = net.cells[bx].cls;
          if (ax == ay || bx == by) continue;
          PairRef p1{c1, cell_pos[c1][ax], cell_pos[c1][ay]};
          bool flip1 = false;
          if (p1.i > p1.j) { std::swap(p1.i, p1.j); flip1 = true; }
          PairRef p2{c2, cell_pos[c2][bx], cell_pos[c2][by]};
          bool flip2 = false;
          if (p2.i > p2.j) { std::swap(p2.i, p2.j); flip2 = true; }
          eqs.push_back({p1, p2, flip1 != flip2});
        }
      }
    }
  }

  bool seed() {
    for (const auto& f : forced)
      if (!assign(f.cls, f.i, f.j, f.v)) return false;
    return true;
  }

  template <typename OnSolution>
  bool search(size_t vi, const OnSolution& on_solution) {
    while (vi < vars.size() && get(vars[vi].cls, vars[vi].i, vars[vi].j) != 0) ++vi;
    if (vi == vars.size()) return on_solution();
    const auto& v = vars[vi];
    for (char val : {1, 2}) {
      if (++nodes > budget) {
        budget_hit = true;
        return true;  // abort search
      }
      size_t mark = trail.size();
      if (assign(v.cls, v.i, v.j, val)) {
        if (search(vi + 1, on_solution)) return true;
      }
      undo_to(mark);
    }
    return false;
  }

  LayerOrder extract() const {
    LayerOrder lo;
    lo.stacks.resize(net.num_classes);
    for (int c = 0; c < net.num_classes; ++c) {
      const auto& members = net.class_cells[c];
      std::vector<int> order(members.size());
      for (size_t i = 0; i < members.size(); ++i) order[i] = static_cast<int>(i);
      std::vector<int> below_count(members.size(), 0);
      for (size_t i = 0; i < members.size(); ++i)
        for (size_t j = 0; j < members.size(); ++j)
          if (i != j && get(c, static_cast<int>(j), static_cast<int>(i)) == 1) below_count[i]++;
      std::sort(order.begin(), order.end(),
                [&](int x, int y) { return below_count[x] < below_count[y]; });
      for (int idx : order) lo.stacks[c].push_back(members[idx]);
    }
    return lo;
  }
};

}  // namespace

SolveStatus solve_layers(const SNet& net, long long budget, LayerOrder* out, SolveStats* stats) {
  LayerSolver sv(net, budget);
  bool found = false;
  if (sv.seed()) {
    found = sv.search(0, [&]() {
      if (out) *out = sv.extract();
      return true;
    });
  }
  if (stats) stats->nodes = sv.nodes;
  if (sv.budget_hit) return SolveStatus::Budget;
  return found ? SolveStatus::Sat : SolveStatus::Unsat;
}

EnumerateResult enumerate_layer_orders(const FoldedState& fs, const SNet& net, int cap,
                                       long long budget) {
  (void)fs;
  EnumerateResult res;
  LayerSolver sv(net, budget);
  if (sv.seed()) {
    sv.search(0, [&]() {
      if (static_cast<int>(res.orders.size()) >= cap) {
        res.cap_exceeded = true;
        return true;  // stop
      }
      res.orders.push_back(sv.extract());
      return false;  // keep enumerating
    });
  }
  res.stats.nodes = sv.nodes;
  res.budget_exceeded = sv.budget_hit;
  return res;
}

GlobalResult globally_flat_foldable(const CreasePattern& cp, const Selection& sel,
                                    long long budget, const std::optional<ExactPoint>& anchor) {
  GlobalResult res;
  auto bf = build_faces(cp, sel, anchor);
  if (!bf.ok()) {
    res.verdict = FoldVerdict::No;
    res.reason = bf.error == FaceError::OddDegreeVertex     ? "odd active degree at a vertex"
                 : bf.error == FaceError::DanglingCrease    ? "dangling active crease"
                                                            : "inconsistent face structure";
    return res;
  }
  const FaceComplex& fc = *bf.fc;
  for (size_t v = 0; v < cp.verts.size(); ++v) {
    auto star = make_star(cp, sel, static_cast<int>(v));
    if (!star || star->count() == 0) continue;
    if (!kawasaki_check(*star)) {
      res.verdict = FoldVerdict::No;
      res.reason = "Kawasaki violation at vertex " + std::to_string(v);
      return res;
    }
    if (!maekawa_check(*star)) {
      res.verdict = FoldVerdict::No;
      res.reason = "Maekawa violation at vertex " + std::to_string(v);
      return res;
    }
    if (!single_vertex_foldable(*star)) {
      res.verdict = FoldVerdict::No;
      res.reason = "single-vertex unfoldable at vertex " + std::to_string(v);
      return res;
    }
  }
  auto fm = fold_map(fc);
  if (!fm.ok) {
    res.verdict = FoldVerdict::No;
    res.reason = fm.error;
    return res;
  }
  SNet net = build_snet(fm.fs);
  LayerOrder order;
  SolveStatus st = solve_layers(net, budget, &order, &res.stats);
  if (st == SolveStatus::Budget) {
    res.verdict = FoldVerdict::Unknown;
    res.reason = "layer search budget exhausted";
    return res;
  }
  if (st == SolveStatus::Unsat) {
    res.verdict = FoldVerdict::No;
    res.reason = "no valid layer ordering";
    return res;
  }
  res.verdict = FoldVerdict::Yes;
  res.order = std::move(order);
  return res;
}

}  // namespace ori
