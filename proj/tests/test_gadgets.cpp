#include <catch2/catch_amalgamated.hpp>

#include "support/oracles.hpp"
#include "tripack/exact.hpp"
#include "tripack/gadgets.hpp"
#include "tripack/io.hpp"

using namespace tripack;

namespace {

CnfFormula formula_n2m3() {
  CnfFormula f;
  f.num_vars = 2;
  f.clauses = {{{0, true}, {1, true}}, {{0, true}, {1, false}}, {{0, false}, {1, true}}};
  return f;
}

Packing random_greedy_packing(const LinearTournament& t, std::uint64_t seed) {
  auto tris = enumerate_triangles(t);
  detail::Rng rng(seed);
  for (int i = static_cast<int>(tris.size()) - 1; i > 0; --i) std::swap(tris[i], tris[rng.below(i + 1)]);
  Packing p;
  std::vector<char> used(t.n, 0);
  for (const Triangle& tr : tris) {
    if (used[tr.u] || used[tr.v] || used[tr.w]) continue;
    if (rng.below(5) == 0) continue;
    used[tr.u] = used[tr.v] = used[tr.w] = 1;
    p.triangles.push_back(tr);
  }
  std::sort(p.triangles.begin(), p.triangles.end());
  return p;
}

std::vector<int> uncovered(const LinearTournament& t, const std::vector<Triangle>& tris) {
  std::vector<char> used(t.n, 0);
  for (const Triangle& tr : tris) used[tr.u] = used[tr.v] = used[tr.w] = 1;
  std::vector<int> out;
  for (int v = 0; v < t.n; ++v)
    if (!used[v]) out.push_back(v);
  return out;
}

}  // namespace

TEST_CASE("the 2-SAT(3) gadget has 35n+5m vertices, all degrees in D_M") {
  auto [t, lay] = build_2sat3_gadget(formula_n2m3());
  REQUIRE(t.n == 35 * 2 + 5 * 3);
  REQUIRE(validate(t).empty());
  REQUIRE(degrees_in_dm(t));
  REQUIRE(lay.var_base(1) - lay.var_base(0) == 35);
  // every occurrence vertex heads exactly one clause arc
  ArcSet arcs(t);
  for (int j = 0; j < lay.num_clauses; ++j)
    for (std::size_t li = 0; li < lay.clause_arc_head[j].size(); ++li)
      REQUIRE(arcs.contains(lay.c(j, static_cast<int>(li) + 1), lay.clause_arc_head[j][li]));
}

TEST_CASE("every vertex is owned by exactly one layout slot") {
  CnfFormula f3;
  f3.num_vars = 3;
  f3.clauses = {{{0, true}, {1, true}, {2, true}},
                {{0, false}, {1, true}, {2, true}},
                {{1, false}, {2, false}, {0, true}}};
  std::vector<std::pair<LinearTournament, GadgetLayout>> built = {
      build_2sat3_gadget(formula_n2m3()), build_perfect_2sat3(formula_n2m3(), 2),
      build_perfect_3sat3(f3)};
  for (const auto& [t, lay] : built) {
    auto slots = lay.slots();
    REQUIRE(static_cast<int>(slots.size()) == t.n);
    std::vector<char> seen(t.n, 0);
    for (const auto& [name, pos] : slots) {
      REQUIRE(pos >= 0);
      REQUIRE(pos < t.n);
      REQUIRE(!seen[pos]);
      seen[pos] = 1;
    }
  }
}

TEST_CASE("the builder rejects occurrence violations") {
  CnfFormula f;
  f.num_vars = 1;
  f.clauses = {{{0, true}, {0, false}}};
  REQUIRE_THROWS_AS(build_2sat3_gadget(CnfFormula{1, {{{0, true}, {0, true}}}}), std::invalid_argument);
  CnfFormula g;
  g.num_vars = 2;
  g.clauses = {{{0, true}, {1, true}, {0, false}}};  // arity 3
  REQUIRE_THROWS_AS(build_2sat3_gadget(g), std::invalid_argument);
}

TEST_CASE("canonical variable triangles cover all but the advertised pair") {
  auto [t, lay] = build_2sat3_gadget(formula_n2m3());
  for (int i = 0; i < 2; ++i) {
    for (bool value : {true, false}) {
      auto tris = canonical_variable_triangles(lay, i, value);
      REQUIRE(tris.size() == 11);
      REQUIRE(is_valid_packing(t, Packing{tris}));
      for (const Triangle& tr : tris) {
        REQUIRE(tr.u >= lay.var_base(i));
        REQUIRE(tr.w < lay.var_base(i) + 35);
      }
      auto left = uncovered(t, tris);
      std::vector<int> in_block;
      for (int v : left)
        if (v >= lay.var_base(i) && v < lay.var_base(i) + 35) in_block.push_back(v);
      if (value)
        REQUIRE(in_block == std::vector<int>{lay.x(i, 2), lay.xp(i, 2)});
      else
        REQUIRE(in_block == std::vector<int>{lay.xbar(i, 2), lay.xbarp(i, 2)});
    }
  }
}

TEST_CASE("packing_from_assignment yields 11n+m+k triangles") {
  CnfFormula f = formula_n2m3();
  auto [t, lay] = build_2sat3_gadget(f);

  Packing base = packing_from_assignment(t, lay, {true, true}, {});
  REQUIRE(base.size() == 11 * 2 + 3);

  auto ms = oracles::max_sat(f);
  REQUIRE(ms.best == 3);
  auto wit = oracles::witnesses_for(f, ms.assignment);
  Packing full = packing_from_assignment(t, lay, ms.assignment, wit);
  REQUIRE(full.size() == 11 * 2 + 3 + 3);
  REQUIRE(is_valid_packing(t, full));

  // outer triangle count equals k
  int outers = 0;
  for (const Triangle& tr : full.triangles)
    if (lay.clause_of(tr.w) >= 0 && tr.v == lay.theta(lay.clause_of(tr.w))) outers++;
  REQUIRE(outers == 3);

  REQUIRE_THROWS_AS(packing_from_assignment(t, lay, {false, false}, {{0, 0}}), std::invalid_argument);
}

TEST_CASE("clause restructuration repairs a perturbed outer triangle") {
  auto [t, lay] = build_2sat3_gadget(formula_n2m3());
  Packing canonical = packing_from_assignment(t, lay, {true, true},
                                              oracles::witnesses_for(lay.formula, {true, true}));
  // drop the inner triangle of clause 2 and reroute the outer triangle of
  // clause 3 through a freed c-vertex instead of its theta
  Packing perturbed;
  Triangle outer2{lay.clause_arc_head[2][1], lay.theta(2), lay.c(2, 2), TriangleKind::OneBackward};
  Triangle inner1{lay.d1(1), lay.c(1, 2), lay.d2(1), TriangleKind::OneBackward};
  for (const Triangle& tr : canonical.triangles)
    if (!(tr == outer2) && !(tr == inner1)) perturbed.triangles.push_back(tr);
  auto rerouted = classify_triangle(t, lay.clause_arc_head[2][1], lay.c(1, 2), lay.c(2, 2));
  REQUIRE(rerouted.has_value());
  perturbed.triangles.push_back(*rerouted);
  std::sort(perturbed.triangles.begin(), perturbed.triangles.end());
  REQUIRE(is_valid_packing(t, perturbed));

  Packing repaired = restructure_clause_blocks(t, lay, perturbed);
  REQUIRE(repaired.size() >= perturbed.size());
  for (int j = 0; j < lay.num_clauses; ++j) REQUIRE(clause_block_canonical(lay, repaired, j));
}

TEST_CASE("clause restructuration repairs random packings") {
  auto [t, lay] = build_2sat3_gadget(formula_n2m3());
  Packing canonical = packing_from_assignment(t, lay, {true, true},
                                              oracles::witnesses_for(lay.formula, {true, true}));
  REQUIRE(restructure_clause_blocks(t, lay, canonical) == canonical);

  Packing empty;
  Packing fixed = restructure_clause_blocks(t, lay, empty);
  for (int j = 0; j < lay.num_clauses; ++j) REQUIRE(clause_block_canonical(lay, fixed, j));

  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Packing p = random_greedy_packing(t, seed);
    Packing q = restructure_clause_blocks(t, lay, p);
    REQUIRE(q.size() >= p.size());
    REQUIRE(is_valid_packing(t, q));
    for (int j = 0; j < lay.num_clauses; ++j) REQUIRE(clause_block_canonical(lay, q, j));
  }
}

TEST_CASE("variable restructuration canonicalizes blocks without shrinking") {
  auto [t, lay] = build_2sat3_gadget(formula_n2m3());
  Packing canonical = packing_from_assignment(t, lay, {false, true},
                                              oracles::witnesses_for(lay.formula, {false, true}));
  Packing same = restructure_variable_blocks(t, lay, canonical);
  REQUIRE(same == canonical);

  // the bad-shaped block pattern with g = (3,4,4,1), shipped as a fixture
  Packing bad = bind_packing(t, parse_packing(read_file(std::string(TEST_DATA_DIR) + "/badshape_fig3.packing")));
  REQUIRE(is_valid_packing(t, bad));
  Packing repaired = restructure_variable_blocks(t, lay, bad);
  REQUIRE(repaired.size() == bad.size());
  for (int i = 0; i < lay.num_vars; ++i) {
    std::vector<Triangle> inner;
    for (const Triangle& tr : repaired.triangles)
      if (lay.variable_of(tr.u) == i && lay.variable_of(tr.w) == i) inner.push_back(tr);
    std::sort(inner.begin(), inner.end());
    bool is_p = inner == canonical_variable_triangles(lay, i, true);
    bool is_pbar = inner == canonical_variable_triangles(lay, i, false);
    REQUIRE((is_p || is_pbar));
  }

  for (std::uint64_t seed = 100; seed < 140; ++seed) {
    Packing p = random_greedy_packing(t, seed);
    Packing q = restructure_clause_blocks(t, lay, p);
    Packing r = restructure_variable_blocks(t, lay, q);
    REQUIRE(r.size() >= q.size());
    REQUIRE(is_valid_packing(t, r));
  }
}

TEST_CASE("extract_assignment recovers enough satisfied clauses") {
  CnfFormula f = formula_n2m3();
  auto [t, lay] = build_2sat3_gadget(f);
  auto ms = oracles::max_sat(f);
  Packing full = packing_from_assignment(t, lay, ms.assignment, oracles::witnesses_for(f, ms.assignment));
  ExtractedAssignment ex = extract_assignment(t, lay, full);
  REQUIRE(ex.satisfied >= ms.best);

  ExtractedAssignment from_empty = extract_assignment(t, lay, Packing{});
  REQUIRE(from_empty.satisfied >= 0);  // bound vacuous for the empty packing

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Packing p = random_greedy_packing(t, 1000 + seed);
    ExtractedAssignment e = extract_assignment(t, lay, p);
    REQUIRE(e.satisfied >= p.size() - 11 * lay.num_vars - lay.num_clauses);
  }
}

TEST_CASE("perfect 2-SAT(3) variant sizes and forward packing") {
  CnfFormula f = formula_n2m3();
  int n = 2, m = 3, k = 3;
  auto [t, lay] = build_perfect_2sat3(f, k);
  int N = 35 * n + 5 * m;
  int n_prime = N - (33 * n + 3 * m + 3 * k);
  REQUIRE(lay.n_prime == n_prime);
  REQUIRE(t.n == N + 2 * n_prime);
  REQUIRE(degrees_in_dm(t));

  auto ms = oracles::max_sat(f);
  Packing perfect = perfect_packing_from_assignment(t, lay, ms.assignment,
                                                    oracles::witnesses_for(f, ms.assignment));
  REQUIRE(3 * perfect.size() == t.n);
  REQUIRE(is_valid_packing(t, perfect));

  REQUIRE_THROWS_AS(build_perfect_2sat3(f, 100), std::invalid_argument);
}

TEST_CASE("perfect 3-SAT(3) variant structure and forward packing") {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses = {{{0, true}, {1, true}, {2, true}},
               {{0, false}, {1, true}, {2, true}},
               {{1, false}, {2, false}, {0, true}}};
  int n = 3, m = 3;
  auto [t, lay] = build_perfect_3sat3(f);
  REQUIRE(t.n == 35 * n + 2 * (2 * n - m) + 2 * m);

  // arcs touching the clause part have their head in the variable part
  for (const Arc& a : t.backward) {
    bool tail_in_k = lay.clause_of(a.tail) >= 0;
    bool head_in_k = lay.clause_of(a.head) >= 0;
    REQUIRE_FALSE(head_in_k);
    if (tail_in_k) {
      REQUIRE(a.tail == lay.c(lay.clause_of(a.tail), 1));
      REQUIRE(lay.variable_of(a.head) >= 0);
    }
  }
  auto deg = all_degrees(t);
  for (int j = 0; j < m; ++j) REQUIRE(deg[lay.theta(j)] == DegreePair{0, 0});

  std::vector<bool> all_true(3, true);
  REQUIRE(count_satisfied(f, all_true) == m);
  Packing perfect = perfect_packing_from_assignment(t, lay, all_true, oracles::witnesses_for(f, all_true));
  REQUIRE(3 * perfect.size() == t.n);
  REQUIRE(is_valid_packing(t, perfect));
}

TEST_CASE("selector construction matches the size formulas") {
  auto [t, lay] = build_selector(3, 4);
  REQUIRE(t.n == 36);  // 12 + 14 + 8 + 2
  REQUIRE(lay.levels == 2);
  REQUIRE(lay.level_pos[0].size() == 14);
  REQUIRE(lay.level_pos[1].size() == 8);
  REQUIRE(validate(t).empty());

  // distinguished vertices have degree (0,0)
  auto deg = all_degrees(t);
  for (const auto& row : lay.x_pos)
    for (int xp : row) REQUIRE(deg[xp] == DegreePair{0, 0});

  // level arcs induce an even circuit on V^l: both matching sides are
  // perfect matchings of the level set
  for (int l = 0; l < lay.levels; ++l) {
    for (int side = 0; side < 2; ++side) {
      std::vector<int> covered;
      for (int c = 0; c < static_cast<int>(lay.chain[l].size()); ++c)
        if (SelectorLayout::chain_side(c) == side) {
          covered.push_back(lay.chain[l][c].head);
          covered.push_back(lay.chain[l][c].tail);
        }
      covered.push_back(lay.closing[l][side].head);
      covered.push_back(lay.closing[l][side].tail);
      std::sort(covered.begin(), covered.end());
      REQUIRE(std::unique(covered.begin(), covered.end()) == covered.end());
      std::vector<int> level = lay.level_pos[l];
      std::sort(level.begin(), level.end());
      REQUIRE(covered == level);
    }
  }

  REQUIRE_THROWS_AS(build_selector(2, 3), std::invalid_argument);
}

TEST_CASE("selector_select leaves exactly X^i") {
  for (auto [m, g] : std::vector<std::pair<int, int>>{{3, 4}, {2, 8}, {1, 2}, {2, 2}}) {
    auto [t, lay] = build_selector(m, g);
    for (int i = 0; i < g; ++i) {
      Packing p = selector_select(t, lay, i);
      REQUIRE(is_valid_packing(t, p));
      REQUIRE(3 * p.size() == t.n - m);
      std::vector<int> left = uncovered(t, p.triangles);
      std::vector<int> xi = lay.x_pos[i];
      std::sort(xi.begin(), xi.end());
      REQUIRE(left == xi);
      REQUIRE(selector_leftover_check(t, lay, p) == i);
    }
    REQUIRE_THROWS_AS(selector_select(t, lay, g), std::invalid_argument);
  }
}

TEST_CASE("maximum packings of the small selectors leave one distinguished set") {
  // A closing-arc triangle can take a distinguished vertex as its middle
  // and leave the level dummy uncovered instead, so the leftover is in
  // general "part of one X^i plus some dummies": its distinguished part
  // always fits inside a single X^i.
  for (auto [m, g] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}}) {
    auto [t, lay] = build_selector(m, g);
    int target = (t.n - m) / 3;
    auto packings = oracles::all_packings_of_size(t, target);
    REQUIRE(!packings.empty());
    int clean = 0;
    for (const Packing& p : packings) {
      std::vector<char> used(t.n, 0);
      for (const Triangle& tr : p.triangles) used[tr.u] = used[tr.v] = used[tr.w] = 1;
      std::vector<char> is_alpha(t.n, 0);
      for (int a : lay.alpha_pos) is_alpha[a] = 1;
      std::vector<std::vector<char>> in_xi(lay.g, std::vector<char>(t.n, 0));
      for (int i = 0; i < lay.g; ++i)
        for (int j = 0; j < lay.set_size; ++j) in_xi[i][lay.x_pos[i][j]] = 1;
      bool fits_some_xi = false;
      for (int i = 0; i < lay.g; ++i) {
        bool ok = true;
        for (int v = 0; v < t.n && ok; ++v)
          if (!used[v] && !is_alpha[v] && !in_xi[i][v]) ok = false;
        fits_some_xi = fits_some_xi || ok;
      }
      REQUIRE(fits_some_xi);
      if (selector_leftover_check(t, lay, p).has_value()) clean++;
    }
    // the packings built by selector_select leave exactly one X^i
    REQUIRE(clean >= g);
  }
}

TEST_CASE("a hand-broken pseudo-packing is flagged as a violation") {
  auto [t, lay] = build_selector(2, 2);
  Packing p = selector_select(t, lay, 0);
  // overwrite one middle with a vertex already used elsewhere
  p.triangles[0].v = p.triangles[1].v;
  REQUIRE_FALSE(selector_leftover_check(t, lay, p).has_value());
  Packing wrong_size;
  REQUIRE_THROWS_AS(selector_leftover_check(t, lay, wrong_size), std::invalid_argument);
}

TEST_CASE("composition size, degrees and cross arcs") {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses = {{{0, true}, {1, true}, {2, true}},
               {{0, false}, {1, true}, {2, true}},
               {{1, false}, {2, false}, {0, true}}};
  std::vector<std::pair<LinearTournament, GadgetLayout>> instances;
  for (int i = 0; i < 4; ++i) instances.push_back(build_perfect_3sat3(f));
  auto [t, comp] = compose(instances);
  int g = comp.g, n = comp.n, m = comp.m;
  REQUIRE(g == 2);
  REQUIRE(t.n == comp.pp_lay.total + m + (g - 1) * m + 2 * m * g + comp.p_lay.total + n +
                     (g - 1) * n + 2 * n * g);

  auto deg = all_degrees(t);
  for (int v = comp.mg_base; v < comp.mg_base + (g - 1) * n; ++v) REQUIRE(deg[v] == DegreePair{0, 0});
  for (int v = comp.mtildeg_base; v < comp.mtildeg_base + n; ++v) REQUIRE(deg[v] == DegreePair{0, 0});
  for (int v = comp.md_base; v < comp.md_base + (g - 1) * m; ++v) REQUIRE(deg[v] == DegreePair{0, 0});
  for (int v = comp.mtilded_base; v < comp.mtilded_base + m; ++v) REQUIRE(deg[v] == DegreePair{0, 0});

  // arcs leaving the K region reach only variable-part heads
  for (const Arc& a : t.backward) {
    bool tail_in_k = a.tail >= comp.k_base && a.tail < comp.k_base + g * m;
    if (tail_in_k) REQUIRE((a.head >= comp.l_base && a.head < comp.l_base + g * n));
  }
}

TEST_CASE("composition forward packing is perfect with the right bridge counts") {
  CnfFormula f;
  f.num_vars = 3;
  f.clauses = {{{0, true}, {1, true}, {2, true}},
               {{0, false}, {1, true}, {2, true}},
               {{1, false}, {2, false}, {0, true}}};
  std::vector<std::pair<LinearTournament, GadgetLayout>> instances;
  for (int i = 0; i < 4; ++i) instances.push_back(build_perfect_3sat3(f));
  auto [t, comp] = compose(instances);

  std::vector<bool> all_true(3, true);
  const auto& [inst_t, inst_lay] = instances[0];
  Packing inner = perfect_packing_from_assignment(inst_t, inst_lay, all_true,
                                                  oracles::witnesses_for(f, all_true));
  for (int p0 = 0; p0 < comp.g; ++p0)
    for (int q0 = 0; q0 < comp.g; ++q0) {
      Packing perfect = compose_forward_packing(t, comp, p0, q0, inner);
      REQUIRE(3 * perfect.size() == t.n);
      REQUIRE(is_valid_packing(t, perfect));

      int in_mtilde_d = 0, in_md = 0, in_mtilde_g = 0, in_mg = 0;
      for (const Triangle& tr : perfect.triangles) {
        if (tr.v >= comp.mtilded_base && tr.v < comp.mtilded_base + comp.m) in_mtilde_d++;
        if (tr.v >= comp.md_base && tr.v < comp.md_base + (comp.g - 1) * comp.m) in_md++;
        if (tr.v >= comp.mtildeg_base && tr.v < comp.mtildeg_base + comp.n) in_mtilde_g++;
        if (tr.v >= comp.mg_base && tr.v < comp.mg_base + (comp.g - 1) * comp.n) in_mg++;
      }
      REQUIRE(in_mtilde_d == comp.m);
      REQUIRE(in_md == (comp.g - 1) * comp.m);
      REQUIRE(in_mtilde_g == comp.n);
      REQUIRE(in_mg == (comp.g - 1) * comp.n);
    }
}

TEST_CASE("generators are deterministic and honor their contracts") {
  LinearTournament s = gen_sparse(9, 3, 1, 4);
  REQUIRE(s.backward.size() == 3);
  REQUIRE(degrees_in_dm(s));
  REQUIRE(minspan(s).value() >= 1);
  REQUIRE(gen_sparse(9, 3, 1, 4) == s);

  AdjacencyTournament a = gen_random_tournament(5, 9);
  REQUIRE(validate(a).empty());
  REQUIRE(gen_random_tournament(5, 9).mat == a.mat);

  REQUIRE_THROWS_AS(gen_sparse(6, 3, 4, 1), std::invalid_argument);
}
