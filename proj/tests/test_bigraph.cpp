#include <doctest.h>

#include <set>

#include "pitri/bigraph.hpp"
#include "pitri/genio.hpp"

using namespace pitri;

namespace {

BipartiteGraph make(int nu, int nv, EdgeSet edges) { return BipartiteGraph::from_edge_list(nu, nv, edges); }

// Definition of an induced 2K2 inside an edge set, written out directly.
bool induces_2k2(const std::set<Edge>& s, Edge a, Edge b) {
  return a.u != b.u && a.v != b.v && !s.contains({a.u, b.v}) && !s.contains({b.u, a.v});
}

const EdgeSet kTwoK2 = {{0, 0}, {1, 1}};
const EdgeSet kK22 = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
// u0 - v0 - u1 - v1
const EdgeSet kPath = {{0, 0}, {1, 0}, {1, 1}};

}  // namespace

TEST_CASE("from_edge_list builds, deduplicates and range-checks") {
  CHECK(make(2, 2, kTwoK2).edge_count() == 2);
  CHECK(make(2, 2, {}).edge_count() == 0);
  CHECK(make(1, 1, {{0, 0}, {0, 0}}).edge_count() == 1);
  CHECK_THROWS_AS(make(2, 2, {{2, 0}}), InputError);
  CHECK_THROWS_AS(make(2, 2, {{0, -1}}), InputError);

  const auto g = make(3, 2, {{2, 1}, {0, 1}, {0, 0}});
  CHECK(g.edges()[0] == Edge{0, 0});
  CHECK(g.edge_id(2, 1) == 2);
  CHECK(g.edge_id(1, 1) == -1);
  CHECK(g.neighbors_of_u(0).size() == 2);
  CHECK(g.non_edge_count() == 3);
}

TEST_CASE("bipartite complement") {
  CHECK(bipartite_complement(make(2, 2, kK22)).edge_count() == 0);
  CHECK(bipartite_complement(make(2, 2, {})) == make(2, 2, kK22));
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const auto g = gen_random_bipartite(static_cast<int>(seed % 6), 1 + static_cast<int>(seed % 5), 0.4, seed);
    const auto co = bipartite_complement(g);
    CHECK(co.edge_count() == g.non_edge_count());
    CHECK(bipartite_complement(co) == g);
  }
}

TEST_CASE("in_conflict") {
  const auto two_k2 = make(2, 2, kTwoK2);
  CHECK(in_conflict(two_k2, {0, 0}, {1, 1}));
  CHECK_FALSE(in_conflict(make(2, 2, kK22), {0, 0}, {1, 1}));
  CHECK_FALSE(in_conflict(make(2, 2, kPath), {0, 0}, {1, 1}));
  CHECK_FALSE(in_conflict(two_k2, {0, 0}, {0, 0}));
  CHECK_THROWS_AS(in_conflict(two_k2, {0, 0}, {0, 1}), InputError);

  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const auto g = gen_random_bipartite(5, 5, 0.5, seed);
    for (const Edge& a : g.edges()) {
      for (const Edge& b : g.edges()) CHECK(in_conflict(g, a, b) == in_conflict(g, b, a));
    }
  }
}

TEST_CASE("classify_edges") {
  const auto two_k2 = classify_edges(make(2, 2, kTwoK2));
  CHECK(two_k2.committed == kTwoK2);
  CHECK(two_k2.uncommitted.empty());

  const auto k22 = classify_edges(make(2, 2, kK22));
  CHECK(k22.committed.empty());
  CHECK(k22.uncommitted == kK22);

  // Path: every pair shares an endpoint or has a connecting edge, so no pair
  // is in conflict (pairwise scan below agrees).
  const auto path = classify_edges(make(2, 2, kPath));
  CHECK(path.committed.empty());
  CHECK(path.uncommitted == kPath);

  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const auto g = gen_random_bipartite(1 + static_cast<int>(seed % 6), 1 + static_cast<int>(seed / 7 % 6), 0.5, seed);
    const std::set<Edge> all(g.edges().begin(), g.edges().end());
    const auto cls = classify_edges(g);
    for (std::size_t i = 0; i < g.edge_count(); ++i) {
      bool partner = false;
      for (const Edge& other : g.edges()) partner = partner || induces_2k2(all, g.edges()[i], other);
      CHECK(cls.is_committed[i] == partner);
    }
    CHECK(cls.committed.size() + cls.uncommitted.size() == g.edge_count());
  }
}

TEST_CASE("is_chain_graph examples") {
  const auto two_k2 = make(2, 2, kTwoK2);
  const auto t = is_chain_graph(two_k2, kTwoK2);
  CHECK_FALSE(t.is_chain);
  REQUIRE(t.witness);
  CHECK(std::set<Edge>{t.witness->first, t.witness->second} == std::set<Edge>{kTwoK2.begin(), kTwoK2.end()});

  CHECK(is_chain_graph(make(2, 2, kK22), kK22).is_chain);
  const EdgeSet nested = {{0, 0}, {1, 0}, {1, 1}};
  CHECK(is_chain_graph(make(2, 2, nested), nested).is_chain);
  // A subset of a chain graph need not be chain.
  CHECK_FALSE(is_chain_graph(make(2, 2, kK22), kTwoK2).is_chain);
  CHECK(is_chain_graph(make(3, 3, {}), EdgeSet{}).is_chain);
  CHECK_THROWS_AS(is_chain_graph(two_k2, EdgeSet{{0, 1}}), InputError);
}

TEST_CASE("neighbourhood nesting agrees with the pairwise 2K2 scan") {
  for (std::uint64_t seed = 1; seed <= 1000; ++seed) {
    Rng rng(seed);
    const int nu = rng.uniform(0, 8);
    const int nv = rng.uniform(0, 8);
    const double density = rng.unit();
    const auto g = gen_random_bipartite(nu, nv, density, rng.next());
    const double keep = rng.unit();
    const EdgeSet subset = gen_random_F(g, keep, rng.next());
    const std::set<Edge> s(subset.begin(), subset.end());

    bool free = true;
    for (const Edge& a : subset) {
      for (const Edge& b : subset) free = free && !induces_2k2(s, a, b);
    }
    const auto t = is_chain_graph(g, subset);
    REQUIRE(t.is_chain == free);
    if (!t.is_chain) {
      CHECK(s.contains(t.witness->first));
      CHECK(s.contains(t.witness->second));
      CHECK(induces_2k2(s, t.witness->first, t.witness->second));
    }
  }
}
