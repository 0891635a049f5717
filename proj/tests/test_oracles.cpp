#include <doctest.h>

#include "pitri/genio.hpp"
#include "pitri/oracles.hpp"

using namespace pitri;

// The oracles are themselves checked on hand-worked cases before they are
// trusted elsewhere.

TEST_CASE("oracle_is_chain") {
  CHECK(oracle_is_chain(EdgeSet{}));
  CHECK(oracle_is_chain(EdgeSet{{0, 0}, {0, 1}, {1, 0}}));
  CHECK_FALSE(oracle_is_chain(EdgeSet{{0, 0}, {1, 1}}));
  CHECK_FALSE(oracle_is_chain(EdgeSet{{0, 0}, {1, 1}, {2, 0}}));
}

TEST_CASE("oracle_cover_exists") {
  const auto two_k2 = BipartiteGraph::from_edge_list(2, 2, EdgeSet{{0, 0}, {1, 1}});
  CHECK(oracle_cover_exists(CoverProblem(two_k2, {})));
  CHECK(oracle_cover_exists(CoverProblem(two_k2, {{0, 0}})));
  CHECK_FALSE(oracle_cover_exists(CoverProblem(two_k2, {{0, 0}, {1, 1}})));
  // 3K2 needs three chain graphs.
  const auto three_k2 = BipartiteGraph::from_edge_list(3, 3, EdgeSet{{0, 0}, {1, 1}, {2, 2}});
  CHECK_FALSE(oracle_cover_exists(CoverProblem(three_k2, {})));

  EdgeSet big;
  for (int u = 0; u < 4; ++u) {
    for (int v = 0; v < 4; ++v) big.push_back({u, v});
  }
  CHECK_THROWS_AS(oracle_cover_exists(CoverProblem(BipartiteGraph::from_edge_list(4, 4, big), {})), GuardError);
}

TEST_CASE("oracle_alternating_cycle") {
  const auto two_k2 = BipartiteGraph::from_edge_list(2, 2, EdgeSet{{0, 0}, {1, 1}});
  const EdgeSet m{{0, 0}, {1, 1}};
  const auto c = oracle_alternating_cycle(two_k2, m);
  REQUIRE(c);
  CHECK(is_alternating_cycle(two_k2, m, *c));
  CHECK_FALSE(oracle_alternating_cycle(two_k2, EdgeSet{{0, 0}}));
  CHECK_THROWS_AS(oracle_alternating_cycle(BipartiteGraph::from_edge_list(8, 1, EdgeSet{}), EdgeSet{}), GuardError);
}

TEST_CASE("oracle_all_transitive_orientations") {
  const auto k3 = complement(SimpleGraph(3));
  CHECK(oracle_all_transitive_orientations(k3).size() == 6);
  const auto edge = SimpleGraph::from_edge_list(2, std::vector<VertexPair>{{0, 1}});
  CHECK(oracle_all_transitive_orientations(edge).size() == 2);
  const auto c5 = SimpleGraph::from_edge_list(5, std::vector<VertexPair>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK(oracle_all_transitive_orientations(c5).empty());
  CHECK(oracle_all_transitive_orientations(SimpleGraph(3)).size() == 1);
  CHECK_THROWS_AS(oracle_all_transitive_orientations(complement(SimpleGraph(7))), GuardError);
}

TEST_CASE("oracle_2sat_satisfiable") {
  TwoSatInstance inst(2);
  inst.add_clause(pos(0), pos(1));
  CHECK(oracle_2sat_satisfiable(inst));
  inst.add_unit(neg(0));
  inst.add_unit(neg(1));
  CHECK_FALSE(oracle_2sat_satisfiable(inst));
  CHECK_THROWS_AS(oracle_2sat_satisfiable(TwoSatInstance(21)), GuardError);
}

TEST_CASE("oracle_is_simple_triangle") {
  CHECK(oracle_is_simple_triangle(SimpleGraph(1)));
  CHECK(oracle_is_simple_triangle(complement(SimpleGraph(5))));
  const auto c5 = SimpleGraph::from_edge_list(5, std::vector<VertexPair>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
  CHECK_FALSE(oracle_is_simple_triangle(c5));
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    CHECK(oracle_is_simple_triangle(intersection_graph(gen_triangle_representation(6, seed))));
  }
  CHECK_THROWS_AS(oracle_is_simple_triangle(SimpleGraph(8)), GuardError);
}

TEST_CASE("graph_mask and table") {
  const auto g = SimpleGraph::from_edge_list(3, std::vector<VertexPair>{{1, 2}});
  // Pairs in order (0,1), (0,2), (1,2).
  CHECK(graph_mask(g) == 4u);
  const auto table = oracle_simple_triangle_table(3);
  CHECK(table.size() == 8);
  CHECK(std::count(table.begin(), table.end(), true) == 8);
  const auto t5 = oracle_simple_triangle_table(5);
  CHECK(t5.size() == 1024);
  CHECK_FALSE(t5[graph_mask(SimpleGraph::from_edge_list(5, std::vector<VertexPair>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}))]);
}
