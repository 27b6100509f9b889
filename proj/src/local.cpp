#include "ori/local.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <map>
#include <set>

namespace ori {

int VertexStar::mountains() const {
  int m = 0;
  for (const auto& c : creases) m += c.mountain ? 1 : 0;
  return m;
}

std::vector<int> VertexStar::sectors() const {
  std::vector<int> s;
  const int n = count();
  for (int i = 0; i < n; ++i) {
    int a = creases[i].k;
    int b = creases[(i + 1) % n].k;
    int u = ((b - a) % 24 + 24) % 24;
    if (u == 0) u = 24;  // single-crease star: full turn
    s.push_back(u);
  }
  return s;
}

std::optional<VertexStar> make_star(const CreasePattern& cp, const Selection& sel, int vertex) {
  for (const auto& e : cp.edges)
    if (e.label == CreaseLabel::Boundary && (e.a == vertex || e.b == vertex)) return std::nullopt;
  VertexStar star;
  for (size_t e = 0; e < cp.edges.size(); ++e) {
    const auto& ed = cp.edges[e];
    if (ed.a != vertex && ed.b != vertex) continue;
    if (!sel.is_active(static_cast<int>(e))) continue;
    int other = (ed.a == vertex) ? ed.b : ed.a;
    auto d = classify_dir(cp.verts[other] - cp.verts[vertex]);
    assert(d);
    star.creases.push_back({d->k, label_mountain(ed.label)});
  }
  std::sort(star.creases.begin(), star.creases.end(),
            [](const StarCrease& a, const StarCrease& b) { return a.k < b.k; });
  return star;
}

bool kawasaki_check(const VertexStar& star) {
  const int n = star.count();
  if (n < 2 || n % 2 != 0) return false;
  auto s = star.sectors();
  int odd = 0;
  for (int i = 0; i < n; i += 2) odd += s[i];
  return odd == 12;
}

bool maekawa_check(const VertexStar& star) {
  int m = star.mountains();
  int v = star.count() - m;
  return std::abs(m - v) == 2;
}

namespace {

// Single-vertex layer search. Sectors fold to integer arcs on the direction
// line; a valid stacking is a pairwise below/above relation on overlapping
// sectors satisfying the MV forcing, transitivity, and the taco conditions.
struct StarSolver {
  int n;
  std::vector<int> lo, hi;     // folded arc of each sector
  std::vector<int> parity;     // orientation: +1 for even index
  // rel[i][j]: 0 unknown, 1 = i below j, 2 = i above j. Only for overlapping pairs.
  std::vector<std::vector<char>> rel;
  std::vector<std::vector<char>> overlaps;
  std::vector<std::pair<int, int>> vars;
  std::vector<std::array<int, 4>> quads;        // taco-taco: sectors (a1,b1,a2,b2)
  std::vector<std::array<int, 3>> not_between;  // (w, a, b): rel(w,a) == rel(w,b)
  bool contradiction = false;

  bool overlap(int i, int j) const { return overlaps[i][j]; }

  bool set_rel(int i, int j, char v) {
    if (rel[i][j] == v) return true;
    if (rel[i][j] != 0) return false;
    rel[i][j] = v;
    rel[j][i] = v == 1 ? 2 : 1;
    return propagate_from(i, j);
  }

  bool propagate_from(int i, int j) {
    // Transitivity through every third sector that overlaps both.
    for (int k = 0; k < n; ++k) {
      if (k == i || k == j) continue;
      // i rel j plus j rel k forces i rel k when the pair (i,k) overlaps.
      if (overlap(j, k) && rel[j][k] == rel[i][j] && overlap(i, k)) {
        if (!set_rel(i, k, rel[i][j])) return false;
      }
      if (overlap(i, k) && rel[k][i] == rel[i][j] && overlap(k, j)) {
        if (!set_rel(k, j, rel[i][j])) return false;
      }
    }
    for (const auto& nb : not_between) {
      auto [w, a, b] = nb;
      if (rel[w][a] != 0 && rel[w][b] == 0) {
        if (!set_rel(w, b, rel[w][a])) return false;
      } else if (rel[w][b] != 0 && rel[w][a] == 0) {
        if (!set_rel(w, a, rel[w][b])) return false;
      } else if (rel[w][a] != 0 && rel[w][b] != 0 && rel[w][a] != rel[w][b]) {
        return false;
      }
    }
    for (const auto& q : quads)
      if (!check_quad(q)) return false;
    return true;
  }

  bool below(int i, int j) const { return rel[i][j] == 1; }

  // Interleave test once all six pairwise relations inside the quad are set.
  bool check_quad(const std::array<int, 4>& q) {
    const std::array<int, 4> c = q;
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y)
        if (rel[c[x]][c[y]] == 0) return true;  // incomplete: nothing to check yet
    auto between = [&](int x, int u, int v) {
      return (below(u, x) && below(x, v)) || (below(v, x) && below(x, u));
    };
    return between(c[2], c[0], c[1]) == between(c[3], c[0], c[1]);
  }

  bool solve(size_t vi) {
    while (vi < vars.size() && rel[vars[vi].first][vars[vi].second] != 0) ++vi;
    if (vi == vars.size()) return true;
    auto [i, j] = vars[vi];
    for (char v : {1, 2}) {
      auto saved = rel;
      if (set_rel(i, j, v) && solve(vi + 1)) return true;
      rel = saved;
    }
    return false;
  }
};

bool star_foldable_uncached(const VertexStar& star) {
  const int n = star.count();
  if (n == 0) return true;
  if (n % 2 != 0 || n < 2) return false;
  auto s = star.sectors();

  StarSolver sv;
  sv.n = n;
  std::vector<int> q(n + 1, 0);
  for (int i = 0; i < n; ++i) q[i + 1] = q[i] + ((i % 2 == 0) ? s[i] : -s[i]);
  if (q[n] != 0) return false;  // Kawasaki closure

  sv.lo.resize(n);
  sv.hi.resize(n);
  for (int i = 0; i < n; ++i) {
    sv.lo[i] = std::min(q[i], q[i + 1]);
    sv.hi[i] = std::max(q[i], q[i + 1]);
  }
  sv.rel.assign(n, std::vector<char>(n, 0));
  sv.overlaps.assign(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      sv.overlaps[i][j] = (i != j) &&
          (std::min(sv.hi[i], sv.hi[j]) - std::max(sv.lo[i], sv.lo[j]) > 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (sv.overlaps[i][j]) sv.vars.push_back({i, j});

  // Hinges: crease i sits between sectors i-1 and i at folded position q[i],
  // opening toward sign(q[i+1] - q[i]).
  struct Hinge { int pos, side, sa, sb; };
  std::vector<Hinge> hinges;
  for (int i = 0; i < n; ++i) {
    int a = (i + n - 1) % n;
    int b = i;
    int side = (q[i + 1] > q[i]) ? 1 : -1;
    hinges.push_back({q[i], side, a, b});
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (hinges[i].pos == hinges[j].pos && hinges[i].side == hinges[j].side)
        sv.quads.push_back({hinges[i].sa, hinges[i].sb, hinges[j].sa, hinges[j].sb});
    }
    for (int w = 0; w < n; ++w) {
      if (w == hinges[i].sa || w == hinges[i].sb) continue;
      if (sv.lo[w] < hinges[i].pos && hinges[i].pos < sv.hi[w])
        sv.not_between.push_back({w, hinges[i].sa, hinges[i].sb});
    }
  }

  // MV forcing at each crease: the orientation-preserved sector lies above
  // its neighbor for a mountain, below for a valley.
  for (int i = 0; i < n; ++i) {
    int a = (i + n - 1) % n;
    int b = i;
    int e = (a % 2 == 0) ? a : b;
    int o = (e == a) ? b : a;
    bool m = star.creases[i].mountain;
    // e above o == rel(e,o) = 2
    if (!sv.set_rel(e, o, m ? 2 : 1)) return false;
  }
  return sv.solve(0);
}

}  // namespace

bool single_vertex_foldable(const VertexStar& star) {
  thread_local std::map<std::vector<std::pair<int, bool>>, bool> memo;
  std::vector<std::pair<int, bool>> key;
  key.reserve(star.creases.size());
  for (const auto& c : star.creases) key.push_back({c.k, c.mountain});
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  bool r = star_foldable_uncached(star);
  memo.emplace(std::move(key), r);
  return r;
}

bool justin_check(const LoopCrossing& loop) {
  const int n = static_cast<int>(loop.xs.size());
  if (n == 0) return true;
  if (n % 2 != 0) return false;
  int m = 0;
  for (const auto& x : loop.xs) m += x.mountain ? 1 : -1;
  if (m % 2 != 0) return false;  // (M-V)/2 must be an integer multiple of pi
  auto norm = [](int u) { return ((u % 24) + 24) % 24; };
  int target = norm(m / 2 * 12);
  int odd = 0, even = 0;
  for (int i = 0; i < n; ++i) {
    // alpha_1 is the angle following the first crossing.
    if (i % 2 == 0) odd += loop.xs[i].units_to_next;
    else even += loop.xs[i].units_to_next;
  }
  return norm(odd) == target && norm(even) == target;
}

bool gadget_angle_condition(const std::vector<int>& gap_units) {
  const int n = static_cast<int>(gap_units.size());
  if (n <= 1) return true;
  for (int mask = 1; mask < (1 << n) - 1; ++mask) {
    int sum = 0;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) sum += gap_units[i];
    if (sum % 12 == 0) return false;
  }
  return true;
}

bool wire_single_valley(const Selection& sel, const WireRef& wire) {
  bool t = sel.is_active(wire.true_valley_edge);
  bool f = sel.is_active(wire.false_valley_edge);
  return t != f;
}

}  // namespace ori
