#ifndef TRIPACK_APPROX_HPP
#define TRIPACK_APPROX_HPP

// Two-phase approximation for sparse tournaments. Phase 1 matches
// backward arcs to degree-(0,0) span vertices via maximum bipartite
// matching; phase 2 packs triplets of leftover arcs into triangle pairs.
// With minspan >= c the packing is within a 1+6/(c-1) factor of optimal.

#include "core.hpp"

namespace tripack {

// left vertices = backward arcs, right vertices = degree-(0,0) positions,
// edge (a, v) iff (head(a), v, tail(a)) is a triangle
struct Phase1Graph {
  int n = 0;
  std::vector<Arc> left;
  std::vector<int> right;                // ascending positions
  std::vector<std::vector<int>> adj;     // left index -> right indices, ascending
};

inline Phase1Graph build_phase1_graph(const LinearTournament& t) {
  Phase1Graph g;
  g.n = t.n;
  g.left = t.backward;
  std::sort(g.left.begin(), g.left.end());
  g.right = zero_degree_vertices(t);
  g.adj.resize(g.left.size());
  // a degree-(0,0) vertex is never an arc endpoint, so membership in the
  // span is the whole triangle condition
  for (std::size_t i = 0; i < g.left.size(); ++i) {
    const Arc& a = g.left[i];
    auto lo = std::lower_bound(g.right.begin(), g.right.end(), a.head + 1);
    for (auto it = lo; it != g.right.end() && *it < a.tail; ++it)
      g.adj[i].push_back(static_cast<int>(it - g.right.begin()));
  }
  return g;
}

// Kuhn's augmenting-path matching; left vertices and adjacency are
// scanned in ascending order, which fixes the matching deterministically.
// Returns pairs (left index, right index).
inline std::vector<std::pair<int, int>> maximum_matching(const Phase1Graph& g) {
  int nl = static_cast<int>(g.left.size());
  int nr = static_cast<int>(g.right.size());
  std::vector<int> match_r(nr, -1), match_l(nl, -1);
  std::vector<char> seen(nr, 0);
  auto augment = [&](auto&& self, int l) -> bool {
    for (int r : g.adj[l]) {
      if (seen[r]) continue;
      seen[r] = 1;
      if (match_r[r] < 0 || self(self, match_r[r])) {
        match_r[r] = l;
        match_l[l] = r;
        return true;
      }
    }
    return false;
  };
  for (int l = 0; l < nl; ++l) {
    std::fill(seen.begin(), seen.end(), 0);
    augment(augment, l);
  }
  std::vector<std::pair<int, int>> out;
  for (int l = 0; l < nl; ++l)
    if (match_l[l] >= 0) out.emplace_back(l, match_l[l]);
  return out;
}

// Decides whether three vertex-disjoint backward arcs can be packed into
// two triangles covering exactly their six endpoints. Only the
// interleaving of the endpoints matters: each triangle consists of one
// arc plus one endpoint of the remaining arc strictly inside its span.
inline std::optional<std::pair<Triangle, Triangle>> can_pack_triplet(const Arc& a1, const Arc& a2,
                                                                     const Arc& a3) {
  const Arc arcs[3] = {a1, a2, a3};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      for (int x : {arcs[i].head, arcs[i].tail})
        for (int y : {arcs[j].head, arcs[j].tail})
          if (x == y) throw std::invalid_argument("can_pack_triplet: arcs share an endpoint");
  for (int k = 0; k < 3; ++k) {
    const Arc& spare = arcs[k];
    const Arc& b1 = arcs[k == 0 ? 1 : 0];
    const Arc& b2 = arcs[k == 2 ? 1 : 2];
    for (int flip = 0; flip < 2; ++flip) {
      int m1 = flip ? spare.tail : spare.head;
      int m2 = flip ? spare.head : spare.tail;
      if (b1.head < m1 && m1 < b1.tail && b2.head < m2 && m2 < b2.tail) {
        Triangle t1{b1.head, m1, b1.tail, TriangleKind::OneBackward};
        Triangle t2{b2.head, m2, b2.tail, TriangleKind::OneBackward};
        if (t1.u > t2.u) std::swap(t1, t2);
        return std::make_pair(t1, t2);
      }
    }
  }
  return std::nullopt;
}

struct PhiReport {
  Packing packing;
  int m0 = 0;  // arcs left unused
  int m1 = 0;  // arcs consumed in phase 1
  int m2 = 0;  // arcs consumed in phase 2
  std::optional<int> min_span;
};

inline PhiReport phi(const LinearTournament& t) {
  if (!degrees_in_dm(t)) throw std::invalid_argument("phi: degrees outside D_M");
  PhiReport rep;
  rep.min_span = minspan(t);

  Phase1Graph g = build_phase1_graph(t);
  auto matching = maximum_matching(g);
  std::vector<char> arc_used(g.left.size(), 0);
  for (auto [l, r] : matching) {
    rep.packing.triangles.push_back(
        Triangle{g.left[l].head, g.right[r], g.left[l].tail, TriangleKind::OneBackward});
    arc_used[l] = 1;
  }
  rep.m1 = static_cast<int>(matching.size());

  // phase 2: positions removed with phase-1 triangles never include the
  // endpoints of the remaining arcs, and packability only depends on how
  // those endpoints interleave, so the scan can stay in input coordinates
  std::vector<Arc> rest;
  for (std::size_t i = 0; i < g.left.size(); ++i)
    if (!arc_used[i]) rest.push_back(g.left[i]);
  bool progress = true;
  while (progress && rest.size() >= 3) {
    progress = false;
    for (std::size_t i = 0; i < rest.size() && !progress; ++i)
      for (std::size_t j = i + 1; j < rest.size() && !progress; ++j)
        for (std::size_t k = j + 1; k < rest.size() && !progress; ++k) {
          auto packed = can_pack_triplet(rest[i], rest[j], rest[k]);
          if (!packed) continue;
          rep.packing.triangles.push_back(packed->first);
          rep.packing.triangles.push_back(packed->second);
          rep.m2 += 3;
          rest.erase(rest.begin() + k);
          rest.erase(rest.begin() + j);
          rest.erase(rest.begin() + i);
          progress = true;
        }
  }
  rep.m0 = static_cast<int>(rest.size());
  std::sort(rep.packing.triangles.begin(), rep.packing.triangles.end());
  return rep;
}

}  // namespace tripack

#endif  // TRIPACK_APPROX_HPP
