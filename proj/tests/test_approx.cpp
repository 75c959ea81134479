#include <catch2/catch_amalgamated.hpp>

#include "support/corpus.hpp"
#include "support/oracles.hpp"
#include "tripack/approx.hpp"
#include "tripack/exact.hpp"
#include "tripack/gadgets.hpp"

using namespace tripack;

TEST_CASE("phase-1 graph edges are the degree-(0,0) span vertices") {
  Phase1Graph g1 = build_phase1_graph(make_linear(5, {Arc{4, 0}}));
  REQUIRE(g1.left.size() == 1);
  REQUIRE(g1.right == std::vector<int>{1, 2, 3});
  REQUIRE(g1.adj[0] == std::vector<int>{0, 1, 2});

  Phase1Graph g2 = build_phase1_graph(make_linear(6, {Arc{3, 0}, Arc{5, 2}}));
  REQUIRE(g2.right == std::vector<int>{1, 4});
  REQUIRE(g2.adj[0] == std::vector<int>{0});  // arc (3,0) with vertex 1
  REQUIRE(g2.adj[1] == std::vector<int>{1});  // arc (5,2) with vertex 4

  Phase1Graph g3 = build_phase1_graph(make_linear(3, {Arc{2, 0}}));
  REQUIRE(g3.adj[0] == std::vector<int>{0});
}

TEST_CASE("maximum matching is deterministic with lowest-index ties") {
  Phase1Graph g;
  g.n = 5;
  g.left = {Arc{4, 0}};
  g.right = {1, 2, 3};
  g.adj = {{0, 1, 2}};
  auto m = maximum_matching(g);
  REQUIRE(m == std::vector<std::pair<int, int>>{{0, 0}});  // arc matched to vertex 1

  Phase1Graph empty;
  empty.n = 2;
  empty.left = {Arc{1, 0}};
  empty.right = {};
  empty.adj = {{}};
  REQUIRE(maximum_matching(empty).empty());

  // 2x2 with a single perfect matching
  Phase1Graph forced;
  forced.n = 9;
  forced.left = {Arc{5, 0}, Arc{6, 1}};
  forced.right = {2, 3};
  forced.adj = {{0, 1}, {1}};
  auto mf = maximum_matching(forced);
  REQUIRE(mf == std::vector<std::pair<int, int>>{{0, 0}, {1, 1}});
}

TEST_CASE("triplet packing follows the endpoint interleaving") {
  // h1 < h2 < t1 < h3 < t2 < t3 packs into (h1,h2,t1), (h3,t2,t3)
  auto packed = can_pack_triplet(Arc{2, 0}, Arc{4, 1}, Arc{5, 3});
  REQUIRE(packed.has_value());
  REQUIRE(packed->first == Triangle{0, 1, 2, TriangleKind::OneBackward});
  REQUIRE(packed->second == Triangle{3, 4, 5, TriangleKind::OneBackward});

  // h1 < h2 < t2 < h3 < t3 < t1 cannot be packed
  REQUIRE_FALSE(can_pack_triplet(Arc{5, 0}, Arc{2, 1}, Arc{4, 3}).has_value());

  REQUIRE_THROWS_AS(can_pack_triplet(Arc{2, 0}, Arc{3, 0}, Arc{5, 4}), std::invalid_argument);
}

TEST_CASE("triplet packing agrees with brute force on every interleaving") {
  // all ways to split positions 0..5 into three disjoint (head, tail) pairs
  std::vector<int> perm = {0, 1, 2, 3, 4, 5};
  std::sort(perm.begin(), perm.end());
  int checked = 0;
  do {
    Arc a1{std::max(perm[0], perm[1]), std::min(perm[0], perm[1])};
    Arc a2{std::max(perm[2], perm[3]), std::min(perm[2], perm[3])};
    Arc a3{std::max(perm[4], perm[5]), std::min(perm[4], perm[5])};
    LinearTournament host = make_linear(6, {a1, a2, a3});
    if (!validate(host).empty() || !degrees_in_dm(host)) continue;
    bool got = can_pack_triplet(a1, a2, a3).has_value();
    bool want = oracles::triplet_packable_bruteforce(host, a1, a2, a3);
    REQUIRE(got == want);
    if (auto packed = can_pack_triplet(a1, a2, a3)) {
      REQUIRE(is_valid_packing(host, Packing{{packed->first, packed->second}}));
    }
    checked++;
  } while (std::next_permutation(perm.begin(), perm.end()));
  REQUIRE(checked > 0);
}

TEST_CASE("phi solves the pocket examples") {
  PhiReport r1 = phi(make_linear(5, {Arc{4, 0}}));
  REQUIRE(r1.packing.size() == 1);
  REQUIRE(r1.m1 == 1);
  REQUIRE(r1.m0 == 0);
  REQUIRE(r1.m2 == 0);

  PhiReport r2 = phi(make_linear(6, {Arc{3, 0}, Arc{5, 2}}));
  REQUIRE(r2.packing.size() == 2);
  REQUIRE(r2.m1 == 2);
}

TEST_CASE("phi refuses non-sparse instances") {
  REQUIRE_THROWS_WITH(phi(make_linear(4, {Arc{3, 1}, Arc{1, 0}})),
                      Catch::Matchers::ContainsSubstring("D_M"));
}

TEST_CASE("phi invariants across a seeded sparse corpus") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    int c = 2 + static_cast<int>(seed % 7);
    LinearTournament t = gen_sparse(18 + seed % 13, 2 + seed % 4, c, 500 + seed);
    PhiReport rep = phi(t);
    int m = static_cast<int>(t.backward.size());
    REQUIRE(rep.m0 + rep.m1 + rep.m2 == m);
    REQUIRE(rep.m2 % 3 == 0);
    REQUIRE(rep.packing.size() == rep.m1 + 2 * (rep.m2 / 3));
    REQUIRE(is_valid_packing(t, rep.packing));

    // phase 1 part equals the maximum matching size
    REQUIRE(rep.m1 == static_cast<int>(maximum_matching(build_phase1_graph(t)).size()));

    // no backward arc straddles the packing boundary
    std::vector<char> used(t.n, 0);
    for (const Triangle& tr : rep.packing.triangles) used[tr.u] = used[tr.v] = used[tr.w] = 1;
    for (const Arc& a : t.backward) REQUIRE(used[a.head] == used[a.tail]);

    // arc-consumption bound: m_phi >= (1 - 6/(c+5)) m
    REQUIRE((rep.m1 + rep.m2) * (c + 5) >= (c - 1) * m);

    // approximation guarantee against the exact optimum
    int opt = max_packing_exact(t).packing.size();
    REQUIRE(opt * (c - 1) <= rep.packing.size() * (c + 5));
  }
}
