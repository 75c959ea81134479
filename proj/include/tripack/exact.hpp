#ifndef TRIPACK_EXACT_HPP
#define TRIPACK_EXACT_HPP

// Exact maximum triangle packing oracles: branch-and-bound for general
// instances, a sliding-window dynamic program for bounded maxspan, and
// the perfect-packing decision.

#include <chrono>
#include <cstdint>
#include <unordered_map>

#include "core.hpp"

namespace tripack {

struct SolverBudget {
  std::uint64_t node_limit = 100'000'000;
  std::optional<double> time_limit_s;
};

struct ExactResult {
  Packing packing;
  bool optimal = false;  // false means the budget ran out
  std::uint64_t nodes = 0;
};

namespace detail {

class BnbSolver {
 public:
  BnbSolver(const LinearTournament& t, const SolverBudget& budget, int target)
      : t_(t), budget_(budget), target_(target) {
    tris_ = enumerate_triangles(t);
    by_lowest_.assign(t.n, {});
    for (int i = 0; i < static_cast<int>(tris_.size()); ++i)
      by_lowest_[tris_[i].u].push_back(i);
    used_.assign(t.n, 0);
    start_ = std::chrono::steady_clock::now();
  }

  ExactResult run() {
    search(0);
    ExactResult res;
    res.packing = best_;
    res.optimal = !exhausted_;
    res.nodes = nodes_;
    return res;
  }

 private:
  bool out_of_budget() {
    if (nodes_ > budget_.node_limit) return true;
    if (budget_.time_limit_s && (nodes_ & 0x3ff) == 0) {
      auto dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
      if (dt > *budget_.time_limit_s) return true;
    }
    return false;
  }

  // each disjoint triangle contains at least one backward arc with both
  // endpoints inside it, so live arcs bound the remaining count
  int upper_bound(int pos) const {
    int free_vertices = 0;
    for (int v = pos; v < t_.n; ++v)
      if (!used_[v]) free_vertices++;
    int live_arcs = 0;
    for (const Arc& a : t_.backward)
      if (a.head >= pos && !used_[a.head] && !used_[a.tail]) live_arcs++;
    return std::min(free_vertices / 3, live_arcs);
  }

  void search(int pos) {
    nodes_++;
    if (exhausted_ || out_of_budget()) {
      exhausted_ = true;
      return;
    }
    while (pos < t_.n && (used_[pos] || by_lowest_[pos].empty())) pos++;
    if (static_cast<int>(current_.size()) > best_.size()) {
      best_.triangles = current_;
      if (target_ >= 0 && best_.size() >= target_) {
        done_ = true;
        return;
      }
    }
    if (pos >= t_.n) return;
    if (static_cast<int>(current_.size()) + upper_bound(pos) <= best_.size()) return;
    for (int idx : by_lowest_[pos]) {
      const Triangle& tr = tris_[idx];
      if (used_[tr.v] || used_[tr.w]) continue;
      used_[tr.u] = used_[tr.v] = used_[tr.w] = 1;
      current_.push_back(tr);
      search(pos + 1);
      current_.pop_back();
      used_[tr.u] = used_[tr.v] = used_[tr.w] = 0;
      if (done_ || exhausted_) return;
    }
    // branch: pos stays unused
    used_[pos] = 1;
    search(pos + 1);
    used_[pos] = 0;
  }

  const LinearTournament& t_;
  SolverBudget budget_;
  int target_;
  std::vector<Triangle> tris_;
  std::vector<std::vector<int>> by_lowest_;
  std::vector<char> used_;
  std::vector<Triangle> current_;
  Packing best_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
  bool done_ = false;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace detail

// Maximum packing via branch-and-bound over the triangle list. Branches
// on the lowest coverable vertex: one branch per triangle having it as
// lowest vertex, plus one "leave unused" branch. Deterministic; among
// maximum packings returns the lexicographically smallest sequence.
inline ExactResult max_packing_exact(const LinearTournament& t, const SolverBudget& budget = {}) {
  detail::BnbSolver solver(t, budget, -1);
  return solver.run();
}

struct PerfectPackingResult {
  bool decided = true;  // false means the budget ran out
  bool perfect = false;
  Packing witness;  // filled when perfect
};

inline PerfectPackingResult has_perfect_packing(const LinearTournament& t, const SolverBudget& budget = {}) {
  PerfectPackingResult res;
  if (t.n % 3 != 0) return res;
  detail::BnbSolver solver(t, budget, t.n / 3);
  ExactResult r = solver.run();
  if (r.packing.size() == t.n / 3) {
    res.perfect = true;
    res.witness = r.packing;
    return res;
  }
  res.decided = r.optimal;
  return res;
}

// --- bounded-maxspan dynamic program ----------------------------------------

namespace detail {

class WindowDp {
 public:
  WindowDp(const LinearTournament& t, int window) : t_(t), window_(window) {
    by_lowest_.assign(std::max(t.n, 1), {});
    for_each_triangle(t, [&](const Triangle& tr) { by_lowest_[tr.u].push_back(tr); });
  }

  Packing run() {
    Packing out;
    int pos = 0;
    std::uint64_t mask = 0;
    while (pos < t_.n) {
      if (mask & 1) {
        mask >>= 1;
        pos++;
        continue;
      }
      int here = value(pos, mask);
      bool advanced = false;
      for (const Triangle& tr : by_lowest_[pos]) {
        std::uint64_t bv = bit(tr.v - pos), bw = bit(tr.w - pos);
        if ((mask & bv) || (mask & bw)) continue;
        if (1 + value(pos + 1, (mask | bv | bw) >> 1) == here) {
          out.triangles.push_back(tr);
          mask = (mask | bv | bw) >> 1;
          pos++;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        mask >>= 1;
        pos++;
      }
    }
    return out;
  }

 private:
  static std::uint64_t bit(int d) { return std::uint64_t{1} << d; }

  int value(int pos, std::uint64_t mask) {
    if (pos >= t_.n) return 0;
    std::uint64_t key = (static_cast<std::uint64_t>(pos) << window_) | mask;
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    int best;
    if (mask & 1) {
      best = value(pos + 1, mask >> 1);
    } else {
      best = value(pos + 1, mask >> 1);
      for (const Triangle& tr : by_lowest_[pos]) {
        std::uint64_t bv = bit(tr.v - pos), bw = bit(tr.w - pos);
        if ((mask & bv) || (mask & bw)) continue;
        best = std::max(best, 1 + value(pos + 1, (mask | bv | bw) >> 1));
      }
    }
    memo_.emplace(key, best);
    return best;
  }

  const LinearTournament& t_;
  int window_;
  std::vector<std::vector<Triangle>> by_lowest_;
  std::unordered_map<std::uint64_t, int> memo_;
};

}  // namespace detail

// Left-to-right sweep whose state is the set of already-consumed
// positions inside the active window. A triangle with one backward arc
// spans at most maxspan+2 positions; one with two backward arcs can
// reach 2*maxspan+3, so the window is sized from the actual triangle
// extents rather than maxspan alone.
inline Packing max_packing_dp_bounded_maxspan(const LinearTournament& t, int span_cap = 20) {
  int window = 1;
  ArcSet arcs(t);
  std::vector<std::vector<int>> tails_by_head(t.n);
  for (const Arc& a : arcs.arcs()) {
    window = std::max(window, span_value(a) + 2);
    tails_by_head[a.head].push_back(a.tail);
  }
  for (const Arc& low : arcs.arcs())
    for (int w : tails_by_head[low.tail])
      if (!arcs.contains(w, low.head)) window = std::max(window, w - low.head + 1);
  if (window > span_cap + 2 || window > 44)
    throw std::invalid_argument("max_packing_dp_bounded_maxspan: window too wide");
  detail::WindowDp dp(t, window);
  return dp.run();
}

}  // namespace tripack

#endif  // TRIPACK_EXACT_HPP
