#ifndef TRIPACK_CORE_HPP
#define TRIPACK_CORE_HPP

// Tournament data model via linear representations: a vertex ordering
// 0..n-1 plus the set of backward arcs (tail > head). Forward arcs are
// implicit. All types are immutable-by-convention value types and all
// operations are pure functions.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

namespace tripack {

struct Arc {
  int tail = 0;  // later position
  int head = 0;  // earlier position

  friend bool operator==(const Arc& a, const Arc& b) {
    return a.tail == b.tail && a.head == b.head;
  }
  friend bool operator<(const Arc& a, const Arc& b) {
    if (a.head != b.head) return a.head < b.head;
    return a.tail < b.tail;
  }
};

// span value of a backward arc: number of positions strictly between
// head and tail.
inline int span_value(const Arc& a) { return a.tail - a.head - 1; }

struct DegreePair {
  int left = 0;   // arcs with this vertex as tail (head to its left)
  int right = 0;  // arcs with this vertex as head (tail to its right)

  friend bool operator==(const DegreePair& a, const DegreePair& b) {
    return a.left == b.left && a.right == b.right;
  }
};

enum class TriangleKind { OneBackward, TwoBackward };

struct Triangle {
  int u = 0, v = 0, w = 0;  // u < v < w
  TriangleKind kind = TriangleKind::OneBackward;

  friend bool operator==(const Triangle& a, const Triangle& b) {
    return a.u == b.u && a.v == b.v && a.w == b.w && a.kind == b.kind;
  }
  friend bool operator<(const Triangle& a, const Triangle& b) {
    if (a.u != b.u) return a.u < b.u;
    if (a.v != b.v) return a.v < b.v;
    return a.w < b.w;
  }
};

struct Packing {
  std::vector<Triangle> triangles;

  int size() const { return static_cast<int>(triangles.size()); }
  bool empty() const { return triangles.empty(); }

  friend bool operator==(const Packing& a, const Packing& b) {
    auto x = a.triangles, y = b.triangles;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }
};

struct LinearTournament {
  int n = 0;
  std::vector<Arc> backward;

  friend bool operator==(const LinearTournament& a, const LinearTournament& b) {
    if (a.n != b.n) return false;
    auto x = a.backward, y = b.backward;
    std::sort(x.begin(), x.end());
    std::sort(y.begin(), y.end());
    return x == y;
  }
};

inline LinearTournament make_linear(int n, std::vector<Arc> arcs) {
  std::sort(arcs.begin(), arcs.end());
  return LinearTournament{n, std::move(arcs)};
}

// Sorted-arc index for membership and degree queries.
class ArcSet {
 public:
  explicit ArcSet(const LinearTournament& t) : arcs_(t.backward) {
    std::sort(arcs_.begin(), arcs_.end());
  }

  bool contains(int tail, int head) const {
    Arc key{tail, head};
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), key);
    return it != arcs_.end() && *it == key;
  }

  const std::vector<Arc>& arcs() const { return arcs_; }

 private:
  std::vector<Arc> arcs_;
};

inline std::vector<std::string> validate(const LinearTournament& t) {
  std::vector<std::string> violations;
  if (t.n < 0) violations.push_back("negative vertex count");
  auto sorted = t.backward;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Arc& a = sorted[i];
    if (a.head < 0 || a.tail >= t.n) {
      violations.push_back("arc (" + std::to_string(a.tail) + "," +
                           std::to_string(a.head) + ") out of range");
      continue;
    }
    if (a.head >= a.tail) {
      violations.push_back("arc (" + std::to_string(a.tail) + "," +
                           std::to_string(a.head) + ") has head >= tail");
      continue;
    }
    if (i > 0 && sorted[i] == sorted[i - 1]) {
      violations.push_back("duplicate arc (" + std::to_string(a.tail) + "," +
                           std::to_string(a.head) + ")");
    }
  }
  return violations;
}

inline std::vector<DegreePair> all_degrees(const LinearTournament& t) {
  std::vector<DegreePair> d(t.n);
  for (const Arc& a : t.backward) {
    d[a.tail].left++;
    d[a.head].right++;
  }
  return d;
}

inline DegreePair degree(const LinearTournament& t, int v) {
  if (v < 0 || v >= t.n) throw std::invalid_argument("degree: position out of range");
  DegreePair d;
  for (const Arc& a : t.backward) {
    if (a.tail == v) d.left++;
    if (a.head == v) d.right++;
  }
  return d;
}

// minspan/maxspan are undefined on an arc-free (acyclic) representation.
inline std::optional<int> minspan(const LinearTournament& t) {
  if (t.backward.empty()) return std::nullopt;
  int best = span_value(t.backward.front());
  for (const Arc& a : t.backward) best = std::min(best, span_value(a));
  return best;
}

inline std::optional<int> maxspan(const LinearTournament& t) {
  if (t.backward.empty()) return std::nullopt;
  int best = span_value(t.backward.front());
  for (const Arc& a : t.backward) best = std::max(best, span_value(a));
  return best;
}

// positions of all vertices with degree (0,0)
inline std::vector<int> zero_degree_vertices(const LinearTournament& t) {
  auto deg = all_degrees(t);
  std::vector<int> out;
  for (int v = 0; v < t.n; ++v)
    if (deg[v].left == 0 && deg[v].right == 0) out.push_back(v);
  return out;
}

// degrees restricted to {(0,1),(1,0),(0,0)}; equivalently the backward
// arcs form a matching
inline bool degrees_in_dm(const LinearTournament& t) {
  auto deg = all_degrees(t);
  for (const auto& d : deg)
    if (d.left + d.right > 1) return false;
  return true;
}

inline std::optional<Triangle> classify_triangle(const ArcSet& arcs, int u, int v, int w) {
  if (!(u < v && v < w)) throw std::invalid_argument("classify_triangle: positions not strictly increasing");
  bool wu = arcs.contains(w, u);
  bool wv = arcs.contains(w, v);
  bool vu = arcs.contains(v, u);
  if (wu && !wv && !vu) return Triangle{u, v, w, TriangleKind::OneBackward};
  if (!wu && wv && vu) return Triangle{u, v, w, TriangleKind::TwoBackward};
  return std::nullopt;
}

inline std::optional<Triangle> classify_triangle(const LinearTournament& t, int u, int v, int w) {
  if (w >= t.n || u < 0) throw std::invalid_argument("classify_triangle: position out of range");
  return classify_triangle(ArcSet(t), u, v, w);
}

// Yields every triangle exactly once in lexicographic (u,v,w) order.
// Walks arcs rather than all C(n,3) triples: a triangle has one or two
// backward arcs, so it is findable from its arc(s).
template <typename Fn>
inline void for_each_triangle(const LinearTournament& t, Fn&& fn) {
  ArcSet arcs(t);
  std::vector<Triangle> out;
  for (const Arc& a : arcs.arcs()) {
    for (int v = a.head + 1; v < a.tail; ++v) {
      if (!arcs.contains(v, a.head) && !arcs.contains(a.tail, v))
        out.push_back(Triangle{a.head, v, a.tail, TriangleKind::OneBackward});
    }
  }
  // two backward arcs sharing a middle vertex: (v,u) and (w,v)
  std::vector<std::vector<int>> tails_by_head(t.n);
  for (const Arc& a : arcs.arcs()) tails_by_head[a.head].push_back(a.tail);
  for (const Arc& low : arcs.arcs()) {
    int u = low.head, v = low.tail;
    for (int w : tails_by_head[v]) {
      if (!arcs.contains(w, u))
        out.push_back(Triangle{u, v, w, TriangleKind::TwoBackward});
    }
  }
  std::sort(out.begin(), out.end());
  for (const Triangle& tr : out) fn(tr);
}

inline std::vector<Triangle> enumerate_triangles(const LinearTournament& t) {
  std::vector<Triangle> out;
  for_each_triangle(t, [&](const Triangle& tr) { out.push_back(tr); });
  return out;
}

inline LinearTournament concatenate(const LinearTournament& a, const LinearTournament& b) {
  LinearTournament out;
  out.n = a.n + b.n;
  out.backward = a.backward;
  for (const Arc& arc : b.backward)
    out.backward.push_back(Arc{arc.tail + a.n, arc.head + a.n});
  std::sort(out.backward.begin(), out.backward.end());
  return out;
}

struct RemovalResult {
  LinearTournament t;
  std::vector<int> remap;  // old position -> new position, -1 if removed
};

inline RemovalResult remove_vertices(const LinearTournament& t, const std::vector<int>& remove) {
  std::vector<char> gone(t.n, 0);
  for (int v : remove) {
    if (v < 0 || v >= t.n) throw std::invalid_argument("remove_vertices: position out of range");
    gone[v] = 1;
  }
  RemovalResult res;
  res.remap.assign(t.n, -1);
  int next = 0;
  for (int v = 0; v < t.n; ++v)
    if (!gone[v]) res.remap[v] = next++;
  res.t.n = next;
  for (const Arc& a : t.backward) {
    if (gone[a.tail] || gone[a.head]) continue;
    res.t.backward.push_back(Arc{res.remap[a.tail], res.remap[a.head]});
  }
  std::sort(res.t.backward.begin(), res.t.backward.end());
  return res;
}

inline bool is_valid_packing(const LinearTournament& t, const Packing& p) {
  ArcSet arcs(t);
  std::vector<char> used(t.n, 0);
  for (const Triangle& tr : p.triangles) {
    if (tr.u < 0 || tr.w >= t.n || !(tr.u < tr.v && tr.v < tr.w)) return false;
    auto cls = classify_triangle(arcs, tr.u, tr.v, tr.w);
    if (!cls || cls->kind != tr.kind) return false;
    for (int x : {tr.u, tr.v, tr.w}) {
      if (used[x]) return false;
      used[x] = 1;
    }
  }
  return true;
}

// --- adjacency representation -------------------------------------------

struct AdjacencyTournament {
  int n = 0;
  std::vector<uint8_t> mat;  // row-major, mat[i*n+j] == 1 iff arc i->j

  bool arc(int i, int j) const { return mat[static_cast<std::size_t>(i) * n + j] != 0; }
  void set_arc(int i, int j) {
    mat[static_cast<std::size_t>(i) * n + j] = 1;
    mat[static_cast<std::size_t>(j) * n + i] = 0;
  }
};

inline AdjacencyTournament make_adjacency(int n) {
  AdjacencyTournament a;
  a.n = n;
  a.mat.assign(static_cast<std::size_t>(n) * n, 0);
  return a;
}

inline std::vector<std::string> validate(const AdjacencyTournament& a) {
  std::vector<std::string> violations;
  for (int i = 0; i < a.n; ++i) {
    if (a.arc(i, i)) violations.push_back("self loop at " + std::to_string(i));
    for (int j = i + 1; j < a.n; ++j) {
      if (a.arc(i, j) == a.arc(j, i))
        violations.push_back("pair {" + std::to_string(i) + "," + std::to_string(j) +
                             "} is not oriented exactly once");
    }
  }
  return violations;
}

// order[p] = vertex of A placed at position p
inline LinearTournament from_adjacency(const AdjacencyTournament& a, const std::vector<int>& order) {
  if (static_cast<int>(order.size()) != a.n)
    throw std::invalid_argument("from_adjacency: order has wrong length");
  std::vector<char> seen(a.n, 0);
  for (int v : order) {
    if (v < 0 || v >= a.n || seen[v]) throw std::invalid_argument("from_adjacency: not a permutation");
    seen[v] = 1;
  }
  LinearTournament t;
  t.n = a.n;
  for (int p = 0; p < a.n; ++p)
    for (int q = p + 1; q < a.n; ++q)
      if (a.arc(order[q], order[p])) t.backward.push_back(Arc{q, p});
  std::sort(t.backward.begin(), t.backward.end());
  return t;
}

inline AdjacencyTournament to_adjacency(const LinearTournament& t) {
  AdjacencyTournament a = make_adjacency(t.n);
  for (int i = 0; i < t.n; ++i)
    for (int j = i + 1; j < t.n; ++j) a.set_arc(i, j);
  for (const Arc& arc : t.backward) a.set_arc(arc.tail, arc.head);
  return a;
}

// --- sparse detection -----------------------------------------------------

struct SparseLinearization {
  LinearTournament t;      // backward arcs form a matching
  std::vector<int> order;  // order[p] = original vertex at position p
};

namespace detail {

// Peeling state for sparse detection. A placed vertex may leave one
// backward arc behind whose tail is still unplaced; such a tail is
// "burdened" and must never touch another backward arc. The next vertex
// is forced up to the indegree-1 set Z (|Z| <= 3):
//   - an indegree-0 vertex is always safe to place first;
//   - an indegree-1 vertex v is placeable only when neither v nor its
//     unique in-neighbour is burdened (the in-neighbour becomes the tail
//     of a new backward arc and inherits the burden);
//   - with no placeable vertex the current branch is infeasible.
// Candidates are tried in ascending vertex order; the search explores
// the divergence between the at most 3 candidates.
struct SparsePeel {
  const AdjacencyTournament& a;
  std::vector<char> alive;
  std::vector<char> burdened;
  std::vector<int> indeg;
  std::vector<int> order;
  std::unordered_set<std::string> failed;

  explicit SparsePeel(const AdjacencyTournament& adj) : a(adj) {
    alive.assign(a.n, 1);
    burdened.assign(a.n, 0);
    indeg.assign(a.n, 0);
    for (int u = 0; u < a.n; ++u)
      for (int v = 0; v < a.n; ++v)
        if (u != v && a.arc(u, v)) indeg[v]++;
  }

  int in_neighbour(int v) const {
    for (int u = 0; u < a.n; ++u)
      if (alive[u] && u != v && a.arc(u, v)) return u;
    return -1;
  }

  bool place_all() {
    if (static_cast<int>(order.size()) == a.n) return true;
    int zero = -1;
    std::vector<int> ones;
    for (int v = 0; v < a.n; ++v) {
      if (!alive[v]) continue;
      if (indeg[v] == 0) zero = v;
      if (indeg[v] == 1) ones.push_back(v);
    }
    std::vector<int> candidates;
    if (zero >= 0) {
      candidates = {zero};  // safe greedy choice, no branching needed
    } else {
      for (int v : ones)
        if (!burdened[v] && !burdened[in_neighbour(v)]) candidates.push_back(v);
      if (candidates.size() > 1 && is_failed_state()) return false;
    }
    for (int v : candidates) {
      int u = indeg[v] == 1 ? in_neighbour(v) : -1;
      place(v, u);
      if (place_all()) return true;
      unplace(v, u);
    }
    if (candidates.size() > 1) failed.insert(state_key());
    return false;
  }

  // different placement orders can reach the same (alive, burdened)
  // state; remembering dead ones keeps the branching from re-exploring
  std::string state_key() const {
    std::string key(alive.size(), '0');
    for (std::size_t v = 0; v < alive.size(); ++v)
      if (alive[v]) key[v] = burdened[v] ? '2' : '1';
    return key;
  }
  bool is_failed_state() const { return failed.count(state_key()) > 0; }

  void place(int v, int burden) {
    alive[v] = 0;
    order.push_back(v);
    for (int w = 0; w < a.n; ++w)
      if (alive[w] && a.arc(v, w)) indeg[w]--;
    if (burden >= 0) burdened[burden] = 1;
  }

  void unplace(int v, int burden) {
    if (burden >= 0) burdened[burden] = 0;
    for (int w = 0; w < a.n; ++w)
      if (alive[w] && a.arc(v, w)) indeg[w]++;
    alive[v] = 1;
    order.pop_back();
  }
};

}  // namespace detail

inline std::optional<SparseLinearization> detect_sparse(const AdjacencyTournament& a) {
  detail::SparsePeel peel(a);
  if (!peel.place_all()) return std::nullopt;
  SparseLinearization res;
  res.order = peel.order;
  res.t = from_adjacency(a, res.order);
  if (!degrees_in_dm(res.t))
    throw std::logic_error("detect_sparse: peeling produced a non-matching FAS");
  return res;
}

}  // namespace tripack

#endif  // TRIPACK_CORE_HPP
