#ifndef TRIPACK_GADGETS_HPP
#define TRIPACK_GADGETS_HPP

// Constructors and verifiers for the hardness gadgets: the 2-SAT(3)
// reduction with its canonical packings and restructuration procedures,
// the perfect-packing variants, the instance selector, the weak
// composition, and seeded instance generators.

#include <array>
#include <cstdint>
#include <list>
#include <map>

#include "cnf.hpp"
#include "core.hpp"

namespace tripack {

enum class GadgetVariant { Max2Sat3, Perfect2Sat3, Perfect3Sat3 };

// Position bookkeeping for the SAT(3) gadget tournaments. Each variable
// gadget L_i is a block of 35 vertices:
//   X(4) X'(4) Xbar(4) Xbar'(4) beta beta' A(4) B(4) alpha A'(4) B'(4)
// with one backward arc per 4-set (last -> first), the four arcs e1..e4
// from the A/B side into the X side, and the two medium arcs m1, m2.
struct GadgetLayout {
  GadgetVariant variant = GadgetVariant::Max2Sat3;
  int num_vars = 0;
  int num_clauses = 0;
  int n_prime = 0;   // dummy pairs (perfect variants)
  int k_target = 0;  // clauses to satisfy (Perfect2Sat3)
  int total = 0;
  CnfFormula formula;
  std::vector<std::vector<int>> clause_arc_head;  // [j][literal] -> occurrence vertex

  int clause_block_size() const { return variant == GadgetVariant::Perfect3Sat3 ? 2 : 5; }
  int left_size() const {
    int dummies = variant == GadgetVariant::Perfect3Sat3 ? 2 * n_prime : 0;
    return dummies + 35 * num_vars;
  }

  int var_base(int i) const {
    int shift = variant == GadgetVariant::Max2Sat3 ? 0 : n_prime;
    return shift + 35 * i;
  }
  int clause_base(int j) const {
    switch (variant) {
      case GadgetVariant::Max2Sat3:
        return 35 * num_vars + 5 * j;
      case GadgetVariant::Perfect2Sat3:
        return n_prime + 35 * num_vars + 5 * j;
      case GadgetVariant::Perfect3Sat3:
        return 2 * n_prime + 35 * num_vars + 2 * j;
    }
    return 0;
  }

  // variable slots, k in [1,4]
  int x(int i, int k) const { return var_base(i) + k - 1; }
  int xp(int i, int k) const { return var_base(i) + 4 + k - 1; }
  int xbar(int i, int k) const { return var_base(i) + 8 + k - 1; }
  int xbarp(int i, int k) const { return var_base(i) + 12 + k - 1; }
  int beta(int i) const { return var_base(i) + 16; }
  int betap(int i) const { return var_base(i) + 17; }
  int a(int i, int k) const { return var_base(i) + 18 + k - 1; }
  int b(int i, int k) const { return var_base(i) + 22 + k - 1; }
  int alpha(int i) const { return var_base(i) + 26; }
  int ap(int i, int k) const { return var_base(i) + 27 + k - 1; }
  int bp(int i, int k) const { return var_base(i) + 31 + k - 1; }

  // clause slots
  int theta(int j) const { return clause_base(j); }
  int d1(int j) const { return clause_base(j) + 1; }
  int c(int j, int x) const {
    return variant == GadgetVariant::Perfect3Sat3 ? clause_base(j) + 1 : clause_base(j) + 1 + x;
  }
  int d2(int j) const { return clause_base(j) + 4; }

  // dummy slots, l in [0, n_prime)
  int r1(int l) const { return l; }
  int r2(int l) const {
    return variant == GadgetVariant::Perfect3Sat3 ? n_prime + 35 * num_vars + l
                                                  : n_prime + 35 * num_vars + 5 * num_clauses + l;
  }

  bool in_variable_block(int pos, int i) const {
    return pos >= var_base(i) && pos < var_base(i) + 35;
  }
  // which variable block a position falls in, -1 otherwise
  int variable_of(int pos) const {
    int shift = variant == GadgetVariant::Max2Sat3 ? 0 : n_prime;
    if (pos < shift || pos >= shift + 35 * num_vars) return -1;
    return (pos - shift) / 35;
  }
  // which clause block a position falls in, -1 otherwise
  int clause_of(int pos) const {
    if (num_clauses == 0) return -1;
    int base0 = clause_base(0);
    int end = base0 + clause_block_size() * num_clauses;
    if (pos < base0 || pos >= end) return -1;
    return (pos - base0) / clause_block_size();
  }

  std::vector<std::pair<std::string, int>> slots() const {
    std::vector<std::pair<std::string, int>> out;
    auto add4 = [&](const std::string& name, int i, auto&& fn) {
      for (int k = 1; k <= 4; ++k)
        out.emplace_back(name + std::to_string(i + 1) + "_" + std::to_string(k), fn(i, k));
    };
    for (int i = 0; i < num_vars; ++i) {
      add4("x", i, [&](int a, int b) { return x(a, b); });
      add4("xp", i, [&](int a, int b) { return xp(a, b); });
      add4("xb", i, [&](int a, int b) { return xbar(a, b); });
      add4("xbp", i, [&](int a, int b) { return xbarp(a, b); });
      out.emplace_back("beta" + std::to_string(i + 1), beta(i));
      out.emplace_back("betap" + std::to_string(i + 1), betap(i));
      add4("a", i, [&](int q, int k) { return a(q, k); });
      add4("b", i, [&](int q, int k) { return b(q, k); });
      out.emplace_back("alpha" + std::to_string(i + 1), alpha(i));
      add4("ap", i, [&](int q, int k) { return ap(q, k); });
      add4("bp", i, [&](int q, int k) { return bp(q, k); });
    }
    for (int j = 0; j < num_clauses; ++j) {
      out.emplace_back("theta" + std::to_string(j + 1), theta(j));
      if (variant == GadgetVariant::Perfect3Sat3) {
        out.emplace_back("c" + std::to_string(j + 1), c(j, 1));
      } else {
        out.emplace_back("d" + std::to_string(j + 1) + "_1", d1(j));
        out.emplace_back("c" + std::to_string(j + 1) + "_1", c(j, 1));
        out.emplace_back("c" + std::to_string(j + 1) + "_2", c(j, 2));
        out.emplace_back("d" + std::to_string(j + 1) + "_2", d2(j));
      }
    }
    for (int l = 0; l < n_prime; ++l) {
      out.emplace_back("r1_" + std::to_string(l + 1), r1(l));
      out.emplace_back("r2_" + std::to_string(l + 1), r2(l));
    }
    return out;
  }
};

namespace detail {

inline void add_variable_gadget_arcs(std::vector<Arc>& arcs, const GadgetLayout& lay, int i) {
  auto block = [&](int first) { arcs.push_back(Arc{first + 3, first}); };
  block(lay.x(i, 1));
  block(lay.xp(i, 1));
  block(lay.xbar(i, 1));
  block(lay.xbarp(i, 1));
  block(lay.a(i, 1));
  block(lay.b(i, 1));
  block(lay.ap(i, 1));
  block(lay.bp(i, 1));
  // e1..e4: heads on the X side, tails on the A/B side
  arcs.push_back(Arc{lay.a(i, 3), lay.x(i, 3)});
  arcs.push_back(Arc{lay.ap(i, 3), lay.xp(i, 3)});
  arcs.push_back(Arc{lay.b(i, 3), lay.xbar(i, 3)});
  arcs.push_back(Arc{lay.bp(i, 3), lay.xbarp(i, 3)});
  // medium arcs m1, m2
  arcs.push_back(Arc{lay.ap(i, 2), lay.a(i, 2)});
  arcs.push_back(Arc{lay.bp(i, 2), lay.b(i, 2)});
}

// assigns occurrence vertices: first positive occurrence -> x^2, second
// -> x'^2, the negative one -> xbar^2
inline void add_clause_arcs(std::vector<Arc>& arcs, GadgetLayout& lay) {
  const CnfFormula& f = lay.formula;
  std::vector<int> pos_used(f.num_vars, 0), neg_used(f.num_vars, 0);
  lay.clause_arc_head.assign(f.clauses.size(), {});
  for (int j = 0; j < static_cast<int>(f.clauses.size()); ++j) {
    const auto& clause = f.clauses[j];
    for (int li = 0; li < static_cast<int>(clause.size()); ++li) {
      const Literal& lit = clause[li];
      int head;
      if (lit.positive) {
        if (pos_used[lit.var] >= 2) throw std::invalid_argument("occurrence budget exceeded");
        head = pos_used[lit.var] == 0 ? lay.x(lit.var, 2) : lay.xp(lit.var, 2);
        pos_used[lit.var]++;
      } else {
        if (neg_used[lit.var] >= 1) throw std::invalid_argument("occurrence budget exceeded");
        head = lay.xbar(lit.var, 2);
        neg_used[lit.var]++;
      }
      int tail = lay.c(j, li + 1);
      arcs.push_back(Arc{tail, head});
      lay.clause_arc_head[j].push_back(head);
    }
  }
}

inline std::pair<LinearTournament, GadgetLayout> build_sat3(const CnfFormula& f, GadgetVariant variant,
                                                            int k) {
  int arity = variant == GadgetVariant::Perfect3Sat3 ? 3 : 2;
  check_sat3_occurrences(f, arity);
  GadgetLayout lay;
  lay.variant = variant;
  lay.num_vars = f.num_vars;
  lay.num_clauses = static_cast<int>(f.clauses.size());
  lay.formula = f;
  int n = lay.num_vars, m = lay.num_clauses;
  if (variant == GadgetVariant::Perfect2Sat3) {
    if (k < 0 || k > m || 2 * n + 2 * m - 3 * k < 0) throw std::invalid_argument("k out of range");
    lay.k_target = k;
    lay.n_prime = 2 * n + 2 * m - 3 * k;  // N - x* with N = 35n+5m, x* = 33n+3m+3k
  } else if (variant == GadgetVariant::Perfect3Sat3) {
    if (2 * n < m) throw std::invalid_argument("requires 2n >= m");
    lay.n_prime = 2 * n - m;
  }
  lay.total = 2 * lay.n_prime + 35 * n + lay.clause_block_size() * m;

  std::vector<Arc> arcs;
  for (int i = 0; i < n; ++i) add_variable_gadget_arcs(arcs, lay, i);
  if (variant != GadgetVariant::Perfect3Sat3)
    for (int j = 0; j < m; ++j) arcs.push_back(Arc{lay.d2(j), lay.d1(j)});
  add_clause_arcs(arcs, lay);
  for (int l = 0; l < lay.n_prime; ++l) arcs.push_back(Arc{lay.r2(l), lay.r1(l)});

  LinearTournament t = make_linear(lay.total, std::move(arcs));
  if (!validate(t).empty()) throw std::logic_error("gadget construction produced an invalid instance");
  if (variant != GadgetVariant::Perfect3Sat3 && !degrees_in_dm(t))
    throw std::logic_error("gadget construction left D_M");
  return {std::move(t), std::move(lay)};
}

}  // namespace detail

inline std::pair<LinearTournament, GadgetLayout> build_2sat3_gadget(const CnfFormula& f) {
  return detail::build_sat3(f, GadgetVariant::Max2Sat3, 0);
}

inline std::pair<LinearTournament, GadgetLayout> build_perfect_2sat3(const CnfFormula& f, int k) {
  return detail::build_sat3(f, GadgetVariant::Perfect2Sat3, k);
}

inline std::pair<LinearTournament, GadgetLayout> build_perfect_3sat3(const CnfFormula& f) {
  return detail::build_sat3(f, GadgetVariant::Perfect3Sat3, 0);
}

// The 11 canonical triangles of a variable block: P_i (value true)
// leaves {x^2, x'^2} unused, Pbar_i (value false) leaves {xbar^2, xbar'^2}.
inline std::vector<Triangle> canonical_variable_triangles(const GadgetLayout& lay, int i, bool value) {
  if (i < 0 || i >= lay.num_vars) throw std::invalid_argument("variable index out of range");
  auto t2 = [&](int first) { return Triangle{first, first + 1, first + 3, TriangleKind::OneBackward}; };
  auto t3 = [&](int first) { return Triangle{first, first + 2, first + 3, TriangleKind::OneBackward}; };
  std::vector<Triangle> out;
  if (value) {
    out = {t3(lay.x(i, 1)),     t3(lay.xp(i, 1)), t2(lay.xbar(i, 1)), t2(lay.xbarp(i, 1)),
           t3(lay.a(i, 1)),     t2(lay.b(i, 1)),  t3(lay.ap(i, 1)),   t2(lay.bp(i, 1)),
           Triangle{lay.xbar(i, 3), lay.beta(i), lay.b(i, 3), TriangleKind::OneBackward},
           Triangle{lay.xbarp(i, 3), lay.betap(i), lay.bp(i, 3), TriangleKind::OneBackward},
           Triangle{lay.a(i, 2), lay.alpha(i), lay.ap(i, 2), TriangleKind::OneBackward}};
  } else {
    out = {t2(lay.x(i, 1)),     t2(lay.xp(i, 1)), t3(lay.xbar(i, 1)), t3(lay.xbarp(i, 1)),
           t2(lay.a(i, 1)),     t3(lay.b(i, 1)),  t2(lay.ap(i, 1)),   t3(lay.bp(i, 1)),
           Triangle{lay.x(i, 3), lay.beta(i), lay.a(i, 3), TriangleKind::OneBackward},
           Triangle{lay.xp(i, 3), lay.betap(i), lay.ap(i, 3), TriangleKind::OneBackward},
           Triangle{lay.b(i, 2), lay.alpha(i), lay.bp(i, 2), TriangleKind::OneBackward}};
  }
  std::sort(out.begin(), out.end());
  return out;
}

// A satisfied-clause witness: the clause index and which of its literals
// (by position in the clause) is satisfied.
struct ClauseWitness {
  int clause = 0;
  int literal = 0;
};

namespace detail {

inline void check_witnesses(const GadgetLayout& lay, const std::vector<bool>& assignment,
                            const std::vector<ClauseWitness>& witnesses) {
  if (static_cast<int>(assignment.size()) != lay.num_vars)
    throw std::invalid_argument("assignment has wrong length");
  std::vector<char> seen(lay.num_clauses, 0);
  for (const ClauseWitness& w : witnesses) {
    if (w.clause < 0 || w.clause >= lay.num_clauses) throw std::invalid_argument("witness clause out of range");
    if (seen[w.clause]) throw std::invalid_argument("duplicate witness clause");
    seen[w.clause] = 1;
    const auto& clause = lay.formula.clauses[w.clause];
    if (w.literal < 0 || w.literal >= static_cast<int>(clause.size()))
      throw std::invalid_argument("witness literal out of range");
    const Literal& lit = clause[w.literal];
    if (assignment[lit.var] != lit.positive)
      throw std::invalid_argument("witness inconsistent with assignment");
  }
}

}  // namespace detail

// The forward construction: canonical triangles per variable, one inner
// triangle per clause, and one outer triangle per satisfied clause.
// Yields exactly 11n + m + k triangles.
inline Packing packing_from_assignment(const LinearTournament& t, const GadgetLayout& lay,
                                       const std::vector<bool>& assignment,
                                       const std::vector<ClauseWitness>& witnesses) {
  if (lay.variant != GadgetVariant::Max2Sat3)
    throw std::invalid_argument("packing_from_assignment expects the Max2Sat3 gadget");
  detail::check_witnesses(lay, assignment, witnesses);
  Packing p;
  for (int i = 0; i < lay.num_vars; ++i) {
    auto tris = canonical_variable_triangles(lay, i, assignment[i]);
    p.triangles.insert(p.triangles.end(), tris.begin(), tris.end());
  }
  std::vector<int> outer_slot(lay.num_clauses, 0);  // 0: none, else x of the used c^x
  for (const ClauseWitness& w : witnesses) outer_slot[w.clause] = w.literal + 1;
  for (int j = 0; j < lay.num_clauses; ++j) {
    int x = outer_slot[j];
    int inner = x == 0 ? 1 : 3 - x;
    p.triangles.push_back(Triangle{lay.d1(j), lay.c(j, inner), lay.d2(j), TriangleKind::OneBackward});
    if (x != 0) {
      int y = lay.clause_arc_head[j][x - 1];
      p.triangles.push_back(Triangle{y, lay.theta(j), lay.c(j, x), TriangleKind::OneBackward});
    }
  }
  std::sort(p.triangles.begin(), p.triangles.end());
  if (!is_valid_packing(t, p)) throw std::logic_error("constructed packing is invalid");
  return p;
}

// Forward construction for the perfect variants: the base packing plus
// one dummy triangle per leftover vertex.
inline Packing perfect_packing_from_assignment(const LinearTournament& t, const GadgetLayout& lay,
                                               const std::vector<bool>& assignment,
                                               const std::vector<ClauseWitness>& witnesses) {
  if (lay.variant == GadgetVariant::Max2Sat3)
    throw std::invalid_argument("perfect_packing_from_assignment expects a perfect variant");
  detail::check_witnesses(lay, assignment, witnesses);
  if (lay.variant == GadgetVariant::Perfect2Sat3 &&
      static_cast<int>(witnesses.size()) != lay.k_target)
    throw std::invalid_argument("Perfect2Sat3 needs exactly k witnessed clauses");
  if (lay.variant == GadgetVariant::Perfect3Sat3 &&
      static_cast<int>(witnesses.size()) != lay.num_clauses)
    throw std::invalid_argument("Perfect3Sat3 needs every clause witnessed");

  Packing p;
  for (int i = 0; i < lay.num_vars; ++i) {
    auto tris = canonical_variable_triangles(lay, i, assignment[i]);
    p.triangles.insert(p.triangles.end(), tris.begin(), tris.end());
  }
  std::vector<int> outer_slot(lay.num_clauses, 0);
  for (const ClauseWitness& w : witnesses) outer_slot[w.clause] = w.literal + 1;
  for (int j = 0; j < lay.num_clauses; ++j) {
    int x = outer_slot[j];
    if (lay.variant == GadgetVariant::Perfect2Sat3) {
      int inner = x == 0 ? 1 : 3 - x;
      p.triangles.push_back(Triangle{lay.d1(j), lay.c(j, inner), lay.d2(j), TriangleKind::OneBackward});
    }
    if (x != 0) {
      int y = lay.clause_arc_head[j][x - 1];
      p.triangles.push_back(Triangle{y, lay.theta(j), lay.c(j, x), TriangleKind::OneBackward});
    }
  }
  std::vector<char> used(t.n, 0);
  for (const Triangle& tr : p.triangles) used[tr.u] = used[tr.v] = used[tr.w] = 1;
  // dummy middles must lie between R1 and R2: the whole core for the
  // 2-SAT(3) variant, only the variable blocks for the 3-SAT(3) one
  int core_end = lay.variant == GadgetVariant::Perfect2Sat3
                     ? lay.n_prime + 35 * lay.num_vars + 5 * lay.num_clauses
                     : lay.n_prime + 35 * lay.num_vars;
  std::vector<int> leftover;
  for (int v = lay.n_prime; v < core_end; ++v)
    if (!used[v]) leftover.push_back(v);
  if (static_cast<int>(leftover.size()) != lay.n_prime)
    throw std::logic_error("perfect construction leftover does not match dummy count");
  for (int l = 0; l < lay.n_prime; ++l)
    p.triangles.push_back(Triangle{lay.r1(l), leftover[l], lay.r2(l), TriangleKind::OneBackward});
  std::sort(p.triangles.begin(), p.triangles.end());
  if (!is_valid_packing(t, p)) throw std::logic_error("constructed perfect packing is invalid");
  if (3 * p.size() != t.n) throw std::logic_error("constructed packing is not perfect");
  return p;
}

// --- restructuration ---------------------------------------------------------

namespace detail {

// mutable view over a packing with vertex ownership tracking
class PackingEditor {
 public:
  PackingEditor(const LinearTournament& t, const Packing& p) : arcs_(t), owner_(t.n, -1) {
    for (const Triangle& tr : p.triangles) add(tr.u, tr.v, tr.w);
  }

  int owner(int v) const { return owner_[v]; }
  const Triangle& tri(int idx) const { return tris_[idx]; }
  bool alive(int idx) const { return alive_[idx]; }

  int add(int u, int v, int w) {
    auto cls = classify_triangle(arcs_, u, v, w);
    if (!cls) throw std::logic_error("restructure: attempted to add a non-triangle");
    for (int x : {u, v, w})
      if (owner_[x] >= 0) throw std::logic_error("restructure: vertex already used");
    int idx = static_cast<int>(tris_.size());
    tris_.push_back(*cls);
    alive_.push_back(1);
    for (int x : {u, v, w}) owner_[x] = idx;
    return idx;
  }

  void remove(int idx) {
    for (int x : {tris_[idx].u, tris_[idx].v, tris_[idx].w}) owner_[x] = -1;
    alive_[idx] = 0;
  }

  void set_middle(int idx, int v) {
    Triangle t = tris_[idx];
    remove(idx);
    add(t.u, v, t.w);
  }

  Packing result() const {
    Packing p;
    for (std::size_t i = 0; i < tris_.size(); ++i)
      if (alive_[i]) p.triangles.push_back(tris_[i]);
    std::sort(p.triangles.begin(), p.triangles.end());
    return p;
  }

  int count() const {
    int c = 0;
    for (char a : alive_) c += a;
    return c;
  }

 private:
  ArcSet arcs_;
  std::vector<Triangle> tris_;
  std::vector<char> alive_;
  std::vector<int> owner_;
};

}  // namespace detail

// The clause-block property: block K_j holds exactly one inner triangle
// Q^x_j, and its remaining vertices are either untouched or consumed by
// a single outer triangle (v, theta_j, c^{3-x}_j).
inline bool clause_block_canonical(const GadgetLayout& lay, const Packing& p, int j) {
  int theta = lay.theta(j), d1 = lay.d1(j), c1 = lay.c(j, 1), c2 = lay.c(j, 2), d2 = lay.d2(j);
  int inner_x = 0;
  bool theta_used = false;
  int outer_c = -1;
  for (const Triangle& tr : p.triangles) {
    bool touches = false;
    for (int v : {tr.u, tr.v, tr.w})
      if (v >= lay.clause_base(j) && v < lay.clause_base(j) + 5) touches = true;
    if (!touches) continue;
    if (tr.u == d1 && tr.w == d2 && (tr.v == c1 || tr.v == c2)) {
      if (inner_x != 0) return false;
      inner_x = tr.v == c1 ? 1 : 2;
    } else if (tr.v == theta && (tr.w == c1 || tr.w == c2)) {
      theta_used = true;
      outer_c = tr.w == c1 ? 1 : 2;
    } else {
      return false;
    }
  }
  if (inner_x == 0) return false;
  if (theta_used && outer_c != 3 - inner_x) return false;
  return true;
}

// Restructures a packing so that every clause block is canonical,
// scanning blocks from the last to the first; the size never decreases.
inline Packing restructure_clause_blocks(const LinearTournament& t, const GadgetLayout& lay,
                                         const Packing& p) {
  if (lay.variant != GadgetVariant::Max2Sat3)
    throw std::invalid_argument("restructure_clause_blocks expects the Max2Sat3 gadget");
  if (!is_valid_packing(t, p)) throw std::invalid_argument("restructure: invalid input packing");
  detail::PackingEditor ed(t, p);
  auto expect_free = [&](int v, const char* what) {
    if (ed.owner(v) >= 0) throw std::logic_error(std::string("restructure: expected unused ") + what);
  };
  for (int j = lay.num_clauses - 1; j >= 0; --j) {
    int theta = lay.theta(j), d1 = lay.d1(j), c1 = lay.c(j, 1), c2 = lay.c(j, 2), d2 = lay.d2(j);
    int inner = ed.owner(d1);
    if (inner >= 0 && !(ed.tri(inner).u == d1 && ed.tri(inner).w == d2)) inner = -1;
    if (inner >= 0) {
      int x = ed.tri(inner).v == c1 ? 1 : 2;
      int v0 = x == 1 ? c2 : c1;
      int other = ed.owner(v0);
      if (other < 0) {
        expect_free(theta, "theta");
        continue;  // block already uses only Q^x_j
      }
      if (ed.tri(other).w != v0) throw std::logic_error("restructure: unexpected triangle through c-vertex");
      if (ed.tri(other).v != theta) {
        expect_free(theta, "theta");
        ed.set_middle(other, theta);
      }
      continue;
    }
    // no inner triangle
    expect_free(d2, "d2");
    int o1 = ed.owner(c1), o2 = ed.owner(c2);
    if (o1 < 0 && o2 < 0) {
      expect_free(d1, "d1");
      expect_free(theta, "theta");
      ed.add(d1, c1, d2);
    } else if (o1 < 0 || o2 < 0) {
      int x = o1 >= 0 ? 1 : 2;
      int oc = x == 1 ? o1 : o2;
      int cx = x == 1 ? c1 : c2;
      if (ed.tri(oc).w != cx) throw std::logic_error("restructure: unexpected triangle through c-vertex");
      if (ed.tri(oc).v != theta) {
        expect_free(theta, "theta");
        ed.set_middle(oc, theta);
      }
      expect_free(d1, "d1");
      ed.add(d1, x == 1 ? c2 : c1, d2);
    } else if (o1 == o2) {
      // one triangle (u, c1, c2)
      expect_free(theta, "theta");
      expect_free(d1, "d1");
      ed.set_middle(o1, theta);
      ed.add(d1, c1, d2);
    } else {
      if (ed.tri(o1).w != c1 || ed.tri(o2).w != c2)
        throw std::logic_error("restructure: unexpected triangle through c-vertex");
      if (ed.tri(o1).v != theta && ed.tri(o2).v != theta) {
        expect_free(theta, "theta");
        ed.set_middle(o1, theta);
        o1 = ed.owner(c1);
      }
      int keep = ed.tri(o1).v == theta ? o1 : o2;  // the one through theta stays
      int drop = keep == o1 ? o2 : o1;
      int drop_c = keep == o1 ? c2 : c1;
      if (ed.tri(drop).v != d1) {
        expect_free(d1, "d1");
      }
      ed.remove(drop);
      ed.add(d1, drop_c, d2);
    }
  }
  Packing out = ed.result();
  if (!is_valid_packing(t, out) || out.size() < p.size())
    throw std::logic_error("restructure_clause_blocks broke the packing");
  return out;
}

// Restructures variable blocks so that the inner triangles of each L_i
// are exactly P_i or Pbar_i, keeping the packing size. Requires the
// clause-block property.
inline Packing restructure_variable_blocks(const LinearTournament& t, const GadgetLayout& lay,
                                           const Packing& p) {
  if (lay.variant != GadgetVariant::Max2Sat3)
    throw std::invalid_argument("restructure_variable_blocks expects the Max2Sat3 gadget");
  if (!is_valid_packing(t, p)) throw std::invalid_argument("restructure: invalid input packing");
  for (int j = 0; j < lay.num_clauses; ++j)
    if (!clause_block_canonical(lay, p, j))
      throw std::invalid_argument("restructure_variable_blocks: clause blocks not canonical");

  // classify triangles per variable block
  std::vector<std::vector<Triangle>> inner(lay.num_vars);
  std::vector<std::vector<Triangle>> outer(lay.num_vars);
  std::vector<Triangle> rest;
  for (const Triangle& tr : p.triangles) {
    int iu = lay.variable_of(tr.u), iw = lay.variable_of(tr.w);
    if (iu >= 0 && iw == iu) {
      inner[iu].push_back(tr);
    } else if (iu >= 0 && lay.clause_of(tr.w) >= 0) {
      if (tr.v != lay.theta(lay.clause_of(tr.w)))
        throw std::invalid_argument("restructure_variable_blocks: non-canonical outer triangle");
      outer[iu].push_back(tr);
    } else {
      rest.push_back(tr);  // clause inner
    }
  }

  Packing out;
  out.triangles = rest;
  for (int i = 0; i < lay.num_vars; ++i) {
    auto cand_true = canonical_variable_triangles(lay, i, true);
    auto cand_false = canonical_variable_triangles(lay, i, false);
    auto sorted_inner = inner[i];
    std::sort(sorted_inner.begin(), sorted_inner.end());
    if (sorted_inner == cand_true || sorted_inner == cand_false) {
      out.triangles.insert(out.triangles.end(), sorted_inner.begin(), sorted_inner.end());
      for (const Triangle& tr : outer[i]) out.triangles.push_back(tr);
      continue;
    }
    // an outer triangle starts at an occurrence vertex; P_i keeps the
    // positive ones alive, Pbar_i the negative one
    int keep_pos = 0, keep_neg = 0;
    for (const Triangle& tr : outer[i]) {
      if (tr.u == lay.x(i, 2) || tr.u == lay.xp(i, 2))
        keep_pos++;
      else if (tr.u == lay.xbar(i, 2))
        keep_neg++;
      else
        throw std::invalid_argument("restructure_variable_blocks: outer triangle at a non-occurrence vertex");
    }
    bool value = keep_pos >= keep_neg;
    int kept = value ? keep_pos : keep_neg;
    if (11 + kept < static_cast<int>(inner[i].size() + outer[i].size()))
      throw std::logic_error("restructure_variable_blocks: replacement would shrink the packing");
    const auto& chosen = value ? cand_true : cand_false;
    out.triangles.insert(out.triangles.end(), chosen.begin(), chosen.end());
    for (const Triangle& tr : outer[i]) {
      bool compatible = value ? (tr.u == lay.x(i, 2) || tr.u == lay.xp(i, 2)) : tr.u == lay.xbar(i, 2);
      if (compatible) out.triangles.push_back(tr);
    }
  }
  std::sort(out.triangles.begin(), out.triangles.end());
  if (!is_valid_packing(t, out) || out.size() < p.size())
    throw std::logic_error("restructure_variable_blocks broke the packing");
  return out;
}

struct ExtractedAssignment {
  std::vector<bool> assignment;
  int satisfied = 0;
};

// Reads an assignment off a restructured packing: x_i true iff block i
// carries P_i. Satisfies at least |P| - 11n - m clauses.
inline ExtractedAssignment extract_assignment(const LinearTournament& t, const GadgetLayout& lay,
                                              const Packing& p) {
  Packing canon = restructure_variable_blocks(t, lay, restructure_clause_blocks(t, lay, p));
  ExtractedAssignment out;
  out.assignment.assign(lay.num_vars, false);
  for (int i = 0; i < lay.num_vars; ++i) {
    std::vector<Triangle> inner;
    for (const Triangle& tr : canon.triangles)
      if (lay.variable_of(tr.u) == i && lay.variable_of(tr.w) == i) inner.push_back(tr);
    std::sort(inner.begin(), inner.end());
    if (inner == canonical_variable_triangles(lay, i, true))
      out.assignment[i] = true;
    else if (inner != canonical_variable_triangles(lay, i, false))
      throw std::logic_error("extract_assignment: block not canonical after restructuration");
  }
  out.satisfied = count_satisfied(lay.formula, out.assignment);
  return out;
}

// --- instance selector ---------------------------------------------------------

// Position bookkeeping for the selector P_{(m,g)}: g distinguished sets
// X^i of m vertices each, level sets V^l with |V^l| = m*g/2^l + 2, one
// dummy alpha_l per level, and per level a chain of unit arcs plus two
// closing arcs forming an even circuit on V^l.
struct SelectorLayout {
  int set_size = 0;
  int g = 0;
  int levels = 0;
  int total = 0;
  std::vector<std::vector<int>> x_pos;      // [i][j] position of x^i_j
  std::vector<std::vector<int>> level_pos;  // [l][k] position of v^l_{k+1}
  std::vector<int> alpha_pos;               // [l]
  std::vector<std::vector<Arc>> chain;      // [l], ascending k
  std::vector<std::array<Arc, 2>> closing;  // [l]: {v_last->v_{last-1}, v_last->v_1}

  // matching side of a chain arc (0-based index c): arcs alternate along
  // the circuit, odd 1-based indices on side 0
  static int chain_side(int c) { return c % 2 == 0 ? 0 : 1; }
};

inline std::pair<LinearTournament, SelectorLayout> build_selector(int set_size, int g) {
  if (set_size < 1) throw std::invalid_argument("selector set size must be positive");
  int levels = 0;
  while ((1 << (levels + 1)) <= g) levels++;
  if (g < 2 || (1 << levels) != g) throw std::invalid_argument("selector g must be a power of two >= 2");

  struct Slot {
    int kind;  // 0 = level vertex, 1 = x vertex, 2 = alpha
    int a, b;
  };
  std::list<Slot> seq;
  std::map<std::pair<int, int>, std::list<Slot>::iterator> vpos;
  std::map<int, std::list<Slot>::iterator> apos;

  int m = set_size;
  auto push_v = [&](int l, int k) { vpos[{l, k}] = seq.insert(seq.end(), Slot{0, l, k}); };
  for (int j = 0; j < m; ++j)
    for (int i = 0; i < g; ++i) {
      push_v(0, j * g + i);
      seq.insert(seq.end(), Slot{1, i, j});
    }
  push_v(0, m * g);
  apos[0] = seq.insert(seq.end(), Slot{2, 0, 0});
  push_v(0, m * g + 1);

  for (int l = 1; l < levels; ++l) {
    int sz = m * g / (1 << l) + 2;
    int sz_prev = m * g / (1 << (l - 1)) + 2;
    auto insert_after = [&](std::list<Slot>::iterator it, Slot s) {
      return seq.insert(std::next(it), s);
    };
    for (int k = 1; k <= sz - 2; ++k)  // v^l_k goes just after v^{l-1}_{2k-1}
      vpos[{l, k - 1}] = insert_after(vpos[{l - 1, 2 * k - 2}], Slot{0, l, k - 1});
    vpos[{l, sz - 2}] = insert_after(vpos[{l - 1, sz_prev - 2}], Slot{0, l, sz - 2});
    vpos[{l, sz - 1}] = insert_after(vpos[{l - 1, sz_prev - 1}], Slot{0, l, sz - 1});
    apos[l] = insert_after(apos[l - 1], Slot{2, l, 0});
  }

  SelectorLayout lay;
  lay.set_size = m;
  lay.g = g;
  lay.levels = levels;
  lay.x_pos.assign(g, std::vector<int>(m, -1));
  lay.level_pos.resize(levels);
  lay.alpha_pos.assign(levels, -1);
  for (int l = 0; l < levels; ++l) lay.level_pos[l].assign(m * g / (1 << l) + 2, -1);
  int pos = 0;
  for (const Slot& s : seq) {
    if (s.kind == 0)
      lay.level_pos[s.a][s.b] = pos;
    else if (s.kind == 1)
      lay.x_pos[s.a][s.b] = pos;
    else
      lay.alpha_pos[s.a] = pos;
    pos++;
  }
  lay.total = pos;

  std::vector<Arc> arcs;
  lay.chain.resize(levels);
  lay.closing.resize(levels);
  for (int l = 0; l < levels; ++l) {
    const auto& vp = lay.level_pos[l];
    int sz = static_cast<int>(vp.size());
    for (int k = 1; k <= sz - 2; ++k) lay.chain[l].push_back(Arc{vp[k], vp[k - 1]});
    lay.closing[l] = {Arc{vp[sz - 1], vp[sz - 2]}, Arc{vp[sz - 1], vp[0]}};
    for (const Arc& a : lay.chain[l]) arcs.push_back(a);
    arcs.push_back(lay.closing[l][0]);
    arcs.push_back(lay.closing[l][1]);
  }
  LinearTournament t = make_linear(lay.total, std::move(arcs));
  if (!validate(t).empty()) throw std::logic_error("selector construction produced an invalid instance");

  // construction self-checks: distinguished vertices have degree (0,0),
  // and the span of the c-th chain arc of level l covers exactly the 2^l
  // X-columns starting at a multiple of 2^l, all on matching-side bit l
  auto deg = all_degrees(t);
  for (const auto& row : lay.x_pos)
    for (int xp : row)
      if (deg[xp].left != 0 || deg[xp].right != 0)
        throw std::logic_error("selector: distinguished vertex has nonzero degree");
  for (int l = 0; l < levels; ++l) {
    for (int c = 0; c < static_cast<int>(lay.chain[l].size()); ++c) {
      const Arc& a = lay.chain[l][c];
      std::vector<int> cols;
      for (int i = 0; i < g; ++i)
        for (int j = 0; j < m; ++j)
          if (a.head < lay.x_pos[i][j] && lay.x_pos[i][j] < a.tail) cols.push_back(i);
      if (static_cast<int>(cols.size()) != (1 << l))
        throw std::logic_error("selector: chain arc span has wrong X count");
      int first = *std::min_element(cols.begin(), cols.end());
      if (first % (1 << l) != 0) throw std::logic_error("selector: chain arc span misaligned");
      for (int i : cols)
        if (((i >> l) & 1) != SelectorLayout::chain_side(c))
          throw std::logic_error("selector: span bit does not match matching side");
    }
  }
  return {std::move(t), std::move(lay)};
}

// The packing that consumes everything except X^i, built level by level
// from the binary representation of i.
inline Packing selector_select(const LinearTournament& t, const SelectorLayout& lay, int i) {
  if (i < 0 || i >= lay.g) throw std::invalid_argument("selector index out of range");
  std::vector<std::vector<char>> alive(lay.g, std::vector<char>(lay.set_size, 1));
  Packing p;
  for (int l = 0; l < lay.levels; ++l) {
    int bit = (i >> l) & 1;
    for (int c = 0; c < static_cast<int>(lay.chain[l].size()); ++c) {
      if (SelectorLayout::chain_side(c) != 1 - bit) continue;
      const Arc& a = lay.chain[l][c];
      int hit_i = -1, hit_j = -1;
      for (int ii = 0; ii < lay.g; ++ii)
        for (int jj = 0; jj < lay.set_size; ++jj)
          if (alive[ii][jj] && a.head < lay.x_pos[ii][jj] && lay.x_pos[ii][jj] < a.tail) {
            if (hit_i >= 0) throw std::logic_error("selector_select: two surviving X vertices in one span");
            hit_i = ii, hit_j = jj;
          }
      if (hit_i < 0) throw std::logic_error("selector_select: no surviving X vertex in span");
      alive[hit_i][hit_j] = 0;
      p.triangles.push_back(Triangle{a.head, lay.x_pos[hit_i][hit_j], a.tail, TriangleKind::OneBackward});
    }
    const Arc& cl = lay.closing[l][bit == 1 ? 0 : 1];
    p.triangles.push_back(Triangle{cl.head, lay.alpha_pos[l], cl.tail, TriangleKind::OneBackward});
  }
  for (int ii = 0; ii < lay.g; ++ii)
    for (int jj = 0; jj < lay.set_size; ++jj)
      if (alive[ii][jj] != (ii == i ? 1 : 0))
        throw std::logic_error("selector_select: leftover is not exactly X^i");
  std::sort(p.triangles.begin(), p.triangles.end());
  if (!is_valid_packing(t, p)) throw std::logic_error("selector_select produced an invalid packing");
  return p;
}

// Test oracle for maximum selector packings: returns the i whose X^i
// contains the whole leftover, nullopt when no such i exists (which also
// covers inputs that are not valid packings).
inline std::optional<int> selector_leftover_check(const LinearTournament& t, const SelectorLayout& lay,
                                                  const Packing& p) {
  if (3 * p.size() != lay.total - lay.set_size)
    throw std::invalid_argument("selector_leftover_check: packing does not cover |V| - m vertices");
  if (!is_valid_packing(t, p)) return std::nullopt;
  std::vector<char> used(t.n, 0);
  for (const Triangle& tr : p.triangles) used[tr.u] = used[tr.v] = used[tr.w] = 1;
  for (int i = 0; i < lay.g; ++i) {
    bool inside = true;
    // every uncovered vertex must belong to X^i
    std::vector<char> in_xi(t.n, 0);
    for (int j = 0; j < lay.set_size; ++j) in_xi[lay.x_pos[i][j]] = 1;
    for (int v = 0; v < t.n && inside; ++v)
      if (!used[v] && !in_xi[v]) inside = false;
    if (inside) return i;
  }
  return std::nullopt;
}

// --- weak composition ------------------------------------------------------------

struct CompositionLayout {
  int g = 0;
  int n = 0, m = 0;  // left/right block sizes
  int l_base = 0, mg_base = 0, ltilde_base = 0, mtildeg_base = 0, p_base = 0;
  int k_base = 0, md_base = 0, ktilde_base = 0, mtilded_base = 0, pp_base = 0;
  int total = 0;
  LinearTournament p_sel, pp_sel;
  SelectorLayout p_lay, pp_lay;
  std::vector<int> inst_at;  // p * g + q -> instance index after padding
};

// Composes t perfect-3SAT(3) instances sharing the same shape into one
// tournament whose perfect packings select one (p,q) cell. Pads by
// cycling through the instances until the count is a square of a power
// of two.
inline std::pair<LinearTournament, CompositionLayout> compose(
    const std::vector<std::pair<LinearTournament, GadgetLayout>>& instances) {
  if (instances.empty()) throw std::invalid_argument("compose: no instances");
  const GadgetLayout& first = instances[0].second;
  if (first.variant != GadgetVariant::Perfect3Sat3)
    throw std::invalid_argument("compose: instances must come from build_perfect_3sat3");
  for (const auto& [it, il] : instances)
    if (il.variant != first.variant || il.num_vars != first.num_vars ||
        il.num_clauses != first.num_clauses || it.n != instances[0].first.n)
      throw std::invalid_argument("compose: shape mismatch among instances");

  CompositionLayout c;
  c.n = first.left_size();
  c.m = 2 * first.num_clauses;
  int g = 1;
  while (g * g < static_cast<int>(instances.size()) || g < 2) g *= 2;
  c.g = g;
  c.inst_at.resize(g * g);
  for (int cell = 0; cell < g * g; ++cell) c.inst_at[cell] = cell % static_cast<int>(instances.size());

  auto [psel, play] = build_selector(c.n, g);
  auto [ppsel, pplay] = build_selector(c.m, g);
  c.p_sel = std::move(psel);
  c.p_lay = std::move(play);
  c.pp_sel = std::move(ppsel);
  c.pp_lay = std::move(pplay);

  c.l_base = 0;
  c.mg_base = c.l_base + g * c.n;
  c.ltilde_base = c.mg_base + (g - 1) * c.n;
  c.mtildeg_base = c.ltilde_base + g * c.n;
  c.p_base = c.mtildeg_base + c.n;
  c.k_base = c.p_base + c.p_lay.total;
  c.md_base = c.k_base + g * c.m;
  c.ktilde_base = c.md_base + (g - 1) * c.m;
  c.mtilded_base = c.ktilde_base + g * c.m;
  c.pp_base = c.mtilded_base + c.m;
  c.total = c.pp_base + c.pp_lay.total;

  std::vector<Arc> arcs;
  const LinearTournament& inst0 = instances[0].first;
  std::vector<Arc> left_arcs;
  for (const Arc& a : inst0.backward)
    if (a.tail < c.n) left_arcs.push_back(a);
  for (int p = 0; p < g; ++p)
    for (const Arc& a : left_arcs)
      arcs.push_back(Arc{c.l_base + p * c.n + a.tail, c.l_base + p * c.n + a.head});
  for (int p = 0; p < g; ++p)
    for (int x = 0; x < c.n; ++x)
      for (int y = 0; y < c.n; ++y)
        arcs.push_back(Arc{c.ltilde_base + p * c.n + x, c.l_base + p * c.n + y});
  for (int p = 0; p < g; ++p)
    for (int j = 0; j < c.n; ++j)
      for (int y = 0; y < c.n; ++y)
        arcs.push_back(Arc{c.p_base + c.p_lay.x_pos[p][j], c.ltilde_base + p * c.n + y});
  for (const Arc& a : c.p_sel.backward) arcs.push_back(Arc{c.p_base + a.tail, c.p_base + a.head});

  for (int q = 0; q < g; ++q)
    for (int x = 0; x < c.m; ++x)
      for (int y = 0; y < c.m; ++y)
        arcs.push_back(Arc{c.ktilde_base + q * c.m + x, c.k_base + q * c.m + y});
  for (int q = 0; q < g; ++q)
    for (int j = 0; j < c.m; ++j)
      for (int y = 0; y < c.m; ++y)
        arcs.push_back(Arc{c.pp_base + c.pp_lay.x_pos[q][j], c.ktilde_base + q * c.m + y});
  for (const Arc& a : c.pp_sel.backward) arcs.push_back(Arc{c.pp_base + a.tail, c.pp_base + a.head});

  // cross arcs embedding instance (p,q) into T[K_q L_p]
  for (int p = 0; p < g; ++p)
    for (int q = 0; q < g; ++q) {
      const LinearTournament& inst = instances[c.inst_at[p * g + q]].first;
      for (const Arc& a : inst.backward)
        if (a.tail >= c.n)
          arcs.push_back(Arc{c.k_base + q * c.m + (a.tail - c.n), c.l_base + p * c.n + a.head});
    }

  LinearTournament t = make_linear(c.total, std::move(arcs));
  if (!validate(t).empty()) throw std::logic_error("compose produced an invalid instance");
  return {std::move(t), std::move(c)};
}

// Completes a perfect packing of instance (p0,q0) into a perfect packing
// of the composed tournament: selector packings leaving X^{p0} / X'^{q0},
// the bridge triangles through the M blocks, and the inner packing
// re-embedded.
inline Packing compose_forward_packing(const LinearTournament& t, const CompositionLayout& c, int p0,
                                       int q0, const Packing& inner_perfect) {
  if (p0 < 0 || p0 >= c.g || q0 < 0 || q0 >= c.g)
    throw std::invalid_argument("compose_forward_packing: cell out of range");
  if (3 * inner_perfect.size() != c.n + c.m)
    throw std::invalid_argument("compose_forward_packing: inner packing not perfect");
  Packing p;
  auto shift_sel = [&](const Packing& sp, int base) {
    for (const Triangle& tr : sp.triangles)
      p.triangles.push_back(Triangle{tr.u + base, tr.v + base, tr.w + base, tr.kind});
  };
  shift_sel(selector_select(c.p_sel, c.p_lay, p0), c.p_base);
  shift_sel(selector_select(c.pp_sel, c.pp_lay, q0), c.pp_base);
  for (int j = 0; j < c.n; ++j)
    p.triangles.push_back(Triangle{c.ltilde_base + p0 * c.n + j, c.mtildeg_base + j,
                                   c.p_base + c.p_lay.x_pos[p0][j], TriangleKind::OneBackward});
  for (int j = 0; j < c.m; ++j)
    p.triangles.push_back(Triangle{c.ktilde_base + q0 * c.m + j, c.mtilded_base + j,
                                   c.pp_base + c.pp_lay.x_pos[q0][j], TriangleKind::OneBackward});
  int mg_next = 0;
  for (int q = 0; q < c.g; ++q) {
    if (q == p0) continue;
    for (int j = 0; j < c.n; ++j, ++mg_next)
      p.triangles.push_back(Triangle{c.l_base + q * c.n + j, c.mg_base + mg_next,
                                     c.ltilde_base + q * c.n + j, TriangleKind::OneBackward});
  }
  int md_next = 0;
  for (int q = 0; q < c.g; ++q) {
    if (q == q0) continue;
    for (int j = 0; j < c.m; ++j, ++md_next)
      p.triangles.push_back(Triangle{c.k_base + q * c.m + j, c.md_base + md_next,
                                     c.ktilde_base + q * c.m + j, TriangleKind::OneBackward});
  }
  for (const Triangle& tr : inner_perfect.triangles) {
    auto shift = [&](int v) {
      return v < c.n ? c.l_base + p0 * c.n + v : c.k_base + q0 * c.m + (v - c.n);
    };
    p.triangles.push_back(Triangle{shift(tr.u), shift(tr.v), shift(tr.w), tr.kind});
  }
  std::sort(p.triangles.begin(), p.triangles.end());
  if (!is_valid_packing(t, p)) throw std::logic_error("compose_forward_packing produced an invalid packing");
  if (3 * p.size() != t.n) throw std::logic_error("compose_forward_packing is not perfect");
  return p;
}

// --- seeded generators ------------------------------------------------------------

namespace detail {

// splitmix64; self-contained so that seeds mean the same thing on every
// platform
struct Rng {
  std::uint64_t state;
  explicit Rng(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  int below(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }
  bool coin() { return next() & 1; }
};

}  // namespace detail

inline AdjacencyTournament gen_random_tournament(int n, std::uint64_t seed) {
  detail::Rng rng(seed);
  AdjacencyTournament a = make_adjacency(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (rng.coin())
        a.set_arc(i, j);
      else
        a.set_arc(j, i);
    }
  return a;
}

// Random sparse instance: num_arcs backward arcs with pairwise-disjoint
// endpoints and span at least min_span. Rejection sampling with a retry
// cap; infeasible parameter combinations are reported as errors.
inline LinearTournament gen_sparse(int n, int num_arcs, int min_span, std::uint64_t seed) {
  if (n < 0 || num_arcs < 0 || min_span < 0) throw std::invalid_argument("gen_sparse: negative parameter");
  detail::Rng rng(seed);
  const int attempts = 1000;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::vector<char> used(n, 0);
    std::vector<Arc> arcs;
    bool ok = true;
    for (int a = 0; a < num_arcs && ok; ++a) {
      std::vector<Arc> cand;
      for (int h = 0; h < n; ++h) {
        if (used[h]) continue;
        for (int tl = h + min_span + 1; tl < n; ++tl)
          if (!used[tl]) cand.push_back(Arc{tl, h});
      }
      if (cand.empty()) {
        ok = false;
        break;
      }
      Arc pick = cand[rng.below(static_cast<int>(cand.size()))];
      used[pick.head] = used[pick.tail] = 1;
      arcs.push_back(pick);
    }
    if (ok) return make_linear(n, std::move(arcs));
  }
  throw std::invalid_argument("gen_sparse: could not place arcs (infeasible parameters)");
}

}  // namespace tripack

#endif  // TRIPACK_GADGETS_HPP
