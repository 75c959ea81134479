#include <catch2/catch_amalgamated.hpp>

#include "support/corpus.hpp"
#include "tripack/gadgets.hpp"
#include "tripack/io.hpp"

using namespace tripack;

TEST_CASE("ltour round trip") {
  REQUIRE(parse_ltour("ltour 3 1\n3 1\n") == make_linear(3, {Arc{2, 0}}));
  REQUIRE(parse_ltour("ltour 2 0\n") == make_linear(2, {}));
  REQUIRE(serialize_ltour(make_linear(3, {Arc{2, 0}})) == "ltour 3 1\n3 1\n");
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    LinearTournament t = corpus::gen_general(15, 6, 9, seed);
    REQUIRE(parse_ltour(serialize_ltour(t)) == t);
  }
}

TEST_CASE("ltour parser rejects malformed documents") {
  REQUIRE_THROWS_AS(parse_ltour("ltour 3 1\n1 3\n"), parse_error);    // head >= tail
  REQUIRE_THROWS_AS(parse_ltour("ltour 3 1\n4 1\n"), parse_error);    // out of range
  REQUIRE_THROWS_AS(parse_ltour("ltour 3 2\n3 1\n3 1\n"), parse_error);  // duplicate
  REQUIRE_THROWS_AS(parse_ltour("ltour 3 1\n"), parse_error);         // truncated
  REQUIRE_THROWS_AS(parse_ltour("ltour 3 0\nstray\n"), parse_error);  // trailing content
  REQUIRE_THROWS_AS(parse_ltour("graph 3 0\n"), parse_error);
}

TEST_CASE("packing round trip and binding") {
  auto triples = parse_packing("packing 1\n1 2 3\n");
  REQUIRE(triples.size() == 1);
  REQUIRE(triples[0] == std::array<int, 3>{0, 1, 2});
  Packing p = bind_packing(make_linear(3, {Arc{2, 0}}), triples);
  REQUIRE(p.size() == 1);
  REQUIRE(serialize_packing(p) == "packing 1\n1 2 3\n");
  REQUIRE_THROWS_AS(parse_packing("packing 1\n3 2 1\n"), parse_error);
  REQUIRE_THROWS_AS(bind_packing(make_linear(3, {}), parse_packing("packing 1\n1 2 3\n")), parse_error);
}

TEST_CASE("tour round trip and validation") {
  AdjacencyTournament a = gen_random_tournament(5, 42);
  REQUIRE(validate(a).empty());
  std::string doc = serialize_tour(a);
  AdjacencyTournament b = parse_tour(doc);
  REQUIRE(a.mat == b.mat);
  // complement violation: vertices 0 and 1 both claim the arc
  REQUIRE_THROWS_AS(parse_tour("tour 2\n01\n10\n"), parse_error);
  REQUIRE_THROWS_AS(parse_tour("tour 2\n01\n"), parse_error);
}

TEST_CASE("cnf parsing") {
  CnfFormula f = parse_cnf("p cnf 2 1\n1 -2 0\n");
  REQUIRE(f.num_vars == 2);
  REQUIRE(f.clauses.size() == 1);
  REQUIRE(f.clauses[0] == std::vector<Literal>{{0, true}, {1, false}});

  CnfFormula g = parse_cnf("c comment\np cnf 2 3\n1 2 0\n1 -2 0\n-1 2 0\n", CnfMode::TwoSat3);
  REQUIRE(g.clauses.size() == 3);

  REQUIRE_THROWS(parse_cnf("p cnf 2 1\n1 2 0\n", CnfMode::TwoSat3));  // missing negatives
  REQUIRE_THROWS_AS(parse_cnf("p cnf 2 1\n1 -2\n"), parse_error);     // no terminator
  REQUIRE_THROWS_AS(parse_cnf("p cnf 2 1\n1 -3 0\n"), parse_error);   // var out of range
  REQUIRE_THROWS_AS(parse_cnf("p cnf 2 1\n1 -2 0\nextra 0\n"), parse_error);
}

TEST_CASE("layout round trip") {
  std::vector<std::pair<std::string, int>> slots = {{"theta1", 4}, {"c1_1", 6}};
  auto parsed = parse_layout(serialize_layout(slots));
  REQUIRE(parsed == slots);
}
