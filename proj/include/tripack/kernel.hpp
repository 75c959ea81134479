#ifndef TRIPACK_KERNEL_HPP
#define TRIPACK_KERNEL_HPP

// Kernelization: the O(m)-vertex kernel obtained from a given FAS via a
// crown decomposition of the arc/span bipartite graph, and the O(k)
// kernel for sparse tournaments (consecutive-arc normalization plus the
// 5k greedy argument).

#include "approx.hpp"
#include "core.hpp"

namespace tripack {

// Hall-theorem partition of a Phase1Graph: A1 u A2 = left, B0 u B1 u B2
// = right, N(A2) subseteq B2, |B2| <= |A2|, and mu a perfect matching
// between A1 and B1. B0 is the removable part.
struct CrownDecomposition {
  std::vector<int> a1, a2;               // left indices
  std::vector<int> b0, b1, b2;           // right indices
  std::vector<std::pair<int, int>> mu;   // (left, right) matched pairs, A1 x B1
};

inline CrownDecomposition crown_decomposition(const Phase1Graph& g) {
  int nl = static_cast<int>(g.left.size());
  int nr = static_cast<int>(g.right.size());
  auto matching = maximum_matching(g);
  std::vector<int> match_l(nl, -1), match_r(nr, -1);
  for (auto [l, r] : matching) {
    match_l[l] = r;
    match_r[r] = l;
  }
  // A2 = left side reachable from unmatched left vertices by alternating
  // paths (non-matching edge right, matching edge back left)
  std::vector<char> left_reached(nl, 0), right_reached(nr, 0);
  std::vector<int> stack;
  for (int l = 0; l < nl; ++l)
    if (match_l[l] < 0) {
      left_reached[l] = 1;
      stack.push_back(l);
    }
  while (!stack.empty()) {
    int l = stack.back();
    stack.pop_back();
    for (int r : g.adj[l]) {
      if (right_reached[r]) continue;
      right_reached[r] = 1;
      int l2 = match_r[r];
      if (l2 >= 0 && !left_reached[l2]) {
        left_reached[l2] = 1;
        stack.push_back(l2);
      }
    }
  }
  CrownDecomposition c;
  for (int l = 0; l < nl; ++l)
    (left_reached[l] ? c.a2 : c.a1).push_back(l);
  for (int l : c.a1) c.mu.emplace_back(l, match_l[l]);
  std::vector<char> in_b1(nr, 0), in_b2(nr, 0);
  for (int r = 0; r < nr; ++r)
    if (right_reached[r]) in_b2[r] = 1;
  for (auto [l, r] : c.mu) in_b1[r] = 1;
  for (int r = 0; r < nr; ++r) {
    if (in_b2[r])
      c.b2.push_back(r);
    else if (in_b1[r])
      c.b1.push_back(r);
    else
      c.b0.push_back(r);
  }
  return c;
}

struct KernelOutcome {
  bool yes = false;
  Packing witness;            // filled when yes
  LinearTournament reduced;   // filled when !yes
  int k_prime = 0;
  std::vector<int> remap;     // old position -> new position, -1 if removed
};

// Removes the B0 vertices of the crown decomposition; the reduced
// instance has at most 3m vertices and the same packing number.
inline KernelOutcome kernel_by_fas(const LinearTournament& t, int k) {
  Phase1Graph g = build_phase1_graph(t);
  CrownDecomposition c = crown_decomposition(g);
  std::vector<int> drop;
  for (int r : c.b0) drop.push_back(g.right[r]);
  RemovalResult res = remove_vertices(t, drop);
  KernelOutcome out;
  out.yes = false;
  out.reduced = std::move(res.t);
  out.remap = std::move(res.remap);
  out.k_prime = k;
  return out;
}

namespace detail {

struct NormalizeTrace {
  LinearTournament t;
  std::vector<int> orig;  // orig[pos] = vertex label in the caller's numbering
};

// A backward arc between adjacent positions vanishes when the two
// vertices swap places, and (with a matching FAS) nothing else moves.
// Iterating is unnecessary: positions do not change, so no new
// consecutive arc can appear.
inline NormalizeTrace eliminate_consecutive_traced(const LinearTournament& t, std::vector<int> orig) {
  if (!degrees_in_dm(t)) throw std::invalid_argument("eliminate_consecutive_backward: FAS is not a matching");
  NormalizeTrace out;
  out.t.n = t.n;
  out.orig = std::move(orig);
  for (const Arc& a : t.backward) {
    if (span_value(a) == 0)
      std::swap(out.orig[a.head], out.orig[a.tail]);
    else
      out.t.backward.push_back(a);
  }
  std::sort(out.t.backward.begin(), out.t.backward.end());
  return out;
}

}  // namespace detail

inline LinearTournament eliminate_consecutive_backward(const LinearTournament& t) {
  std::vector<int> orig(t.n);
  for (int i = 0; i < t.n; ++i) orig[i] = i;
  return detail::eliminate_consecutive_traced(t, std::move(orig)).t;
}

// Greedy extraction of k triangles when at least 5k backward arcs
// survive normalization. Each round takes the arc with the lowest head,
// the lowest span vertex as middle, removes the three vertices and
// re-normalizes; that destroys at most 5 arcs.
inline Packing greedy_packing_5k(const LinearTournament& t, int k) {
  if (k < 0) throw std::invalid_argument("greedy_packing_5k: negative k");
  if (!degrees_in_dm(t)) throw std::invalid_argument("greedy_packing_5k: FAS is not a matching");
  for (const Arc& a : t.backward)
    if (span_value(a) == 0) throw std::invalid_argument("greedy_packing_5k: consecutive backward arc present");
  if (static_cast<int>(t.backward.size()) < 5 * k)
    throw std::invalid_argument("greedy_packing_5k: fewer than 5k backward arcs");

  detail::NormalizeTrace cur;
  cur.t = t;
  cur.orig.resize(t.n);
  for (int i = 0; i < t.n; ++i) cur.orig[i] = i;

  ArcSet host(t);
  Packing out;
  for (int round = 0; round < k; ++round) {
    if (cur.t.backward.empty()) throw std::logic_error("greedy_packing_5k: ran out of arcs");
    Arc a = *std::min_element(cur.t.backward.begin(), cur.t.backward.end());
    int mid = a.head + 1;
    int trio[3] = {cur.orig[a.head], cur.orig[mid], cur.orig[a.tail]};
    std::sort(std::begin(trio), std::end(trio));
    auto tri = classify_triangle(host, trio[0], trio[1], trio[2]);
    if (!tri) throw std::logic_error("greedy_packing_5k: extracted triple is not a triangle");
    out.triangles.push_back(*tri);

    RemovalResult rem = remove_vertices(cur.t, {a.head, mid, a.tail});
    std::vector<int> orig_next(rem.t.n);
    for (int p = 0; p < cur.t.n; ++p)
      if (rem.remap[p] >= 0) orig_next[rem.remap[p]] = cur.orig[p];
    cur = detail::eliminate_consecutive_traced(rem.t, std::move(orig_next));
  }
  std::sort(out.triangles.begin(), out.triangles.end());
  return out;
}

// O(k)-vertex kernel for sparse tournaments: normalize, answer YES
// greedily when >= 5k arcs remain, otherwise fall back to the FAS kernel
// of the normalized instance (< 15k vertices).
inline KernelOutcome sparse_kernel(const LinearTournament& t, int k) {
  if (k < 0) throw std::invalid_argument("sparse_kernel: negative k");
  if (!degrees_in_dm(t)) throw std::invalid_argument("sparse_kernel: FAS is not a matching");
  std::vector<int> ident(t.n);
  for (int i = 0; i < t.n; ++i) ident[i] = i;
  detail::NormalizeTrace norm = detail::eliminate_consecutive_traced(t, std::move(ident));

  if (static_cast<int>(norm.t.backward.size()) >= 5 * k) {
    Packing w = greedy_packing_5k(norm.t, k);
    // witness positions refer to the normalized ordering; map back
    ArcSet host(t);
    KernelOutcome out;
    out.yes = true;
    out.k_prime = k;
    for (const Triangle& tr : w.triangles) {
      int trio[3] = {norm.orig[tr.u], norm.orig[tr.v], norm.orig[tr.w]};
      std::sort(std::begin(trio), std::end(trio));
      auto tri = classify_triangle(host, trio[0], trio[1], trio[2]);
      if (!tri) throw std::logic_error("sparse_kernel: witness triangle invalid in input ordering");
      out.witness.triangles.push_back(*tri);
    }
    std::sort(out.witness.triangles.begin(), out.witness.triangles.end());
    return out;
  }

  KernelOutcome out = kernel_by_fas(norm.t, k);
  // compose the normalization relabeling with the crown removal
  std::vector<int> remap(t.n, -1);
  for (int p = 0; p < t.n; ++p)
    remap[norm.orig[p]] = out.remap[p];
  out.remap = std::move(remap);
  return out;
}

}  // namespace tripack

#endif  // TRIPACK_KERNEL_HPP
