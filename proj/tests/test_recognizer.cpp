#include <doctest.h>

#include <numeric>

#include "pitri/genio.hpp"
#include "pitri/oracles.hpp"
#include "pitri/recognizer.hpp"

using namespace pitri;

namespace {

SimpleGraph graph_from_mask(int n, std::uint32_t mask) {
  SimpleGraph g(n);
  int k = 0;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b, ++k) {
      if (mask >> k & 1u) g.add_edge(a, b);
    }
  }
  return g;
}

SimpleGraph c5() {
  return SimpleGraph::from_edge_list(5, std::vector<VertexPair>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

// Complement is comparability, but Ĉ(P) has no linear-interval cover.
SimpleGraph six_vertex_no() {
  return SimpleGraph::from_edge_list(
      6, std::vector<VertexPair>{{0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}});
}

void check_yes(const SimpleGraph& g) {
  const auto r = recognize_simple_triangle(g);
  REQUIRE(r.verdict == Verdict::Yes);
  REQUIRE(r.orientation);
  REQUIRE(r.cover);
  CHECK(check_simple_triangle_certificate(g, r.orientation->pairs(), *r.cover).empty());
}

}  // namespace

TEST_CASE("trivial graphs") {
  check_yes(SimpleGraph(0));
  check_yes(SimpleGraph(1));
  check_yes(SimpleGraph::from_edge_list(2, std::vector<VertexPair>{{0, 1}}));
  check_yes(SimpleGraph(5));
}

TEST_CASE("C5 is rejected at the comparability stage") {
  const auto r = recognize_simple_triangle(c5());
  CHECK(r.verdict == Verdict::No);
  CHECK(r.reason == RejectReason::ComplementNotComparability);
  CHECK_FALSE(r.orientation);
  CHECK_FALSE(oracle_is_simple_triangle(c5()));
}

TEST_CASE("six-vertex graph is rejected at the cover stage") {
  const auto g = six_vertex_no();
  const auto r = recognize_simple_triangle(g);
  CHECK(r.verdict == Verdict::No);
  CHECK(r.reason == RejectReason::NoLinearIntervalCover);
  CHECK_FALSE(oracle_is_simple_triangle(g));
  CHECK(std::string(to_string(r.reason)) == "NoLinearIntervalCover");
}

TEST_CASE("graphs of random triangle representations are accepted") {
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    const int n = 1 + static_cast<int>(seed % 40);
    check_yes(intersection_graph(gen_triangle_representation(n, seed)));
  }
}

TEST_CASE("permutation and interval graphs are accepted") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    const int n = 1 + static_cast<int>(seed % 30);
    check_yes(gen_permutation_graph(n, seed));
    check_yes(gen_interval_graph(n, seed));
  }
}

TEST_CASE("verdicts match the representation sweep on all graphs up to 6 vertices") {
  for (int n = 1; n <= 6; ++n) {
    const auto table = oracle_simple_triangle_table(n);
    int yes = 0;
    for (std::uint32_t mask = 0; mask < table.size(); ++mask) {
      const auto g = graph_from_mask(n, mask);
      REQUIRE(graph_mask(g) == mask);
      const bool ours = recognize_simple_triangle(g).verdict == Verdict::Yes;
      REQUIRE(ours == table[mask]);
      yes += ours;
    }
    // n <= 4: every graph qualifies; C5 and its relabellings are the only
    // exceptions on five vertices.
    if (n <= 4) CHECK(yes == static_cast<int>(table.size()));
    if (n == 5) CHECK(yes == 1024 - 12);
  }
}

TEST_CASE("verdict is invariant under relabelling") {
  Rng rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = rng.uniform(1, 12);
    const double density = rng.unit();
    SimpleGraph g(n);
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        if (rng.chance(density)) g.add_edge(a, b);
      }
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    const auto h = relabel(g, perm);
    CHECK(recognize_simple_triangle(g).verdict == recognize_simple_triangle(h).verdict);
  }
  const std::vector<int> perm{3, 0, 4, 1, 2};
  CHECK(recognize_simple_triangle(relabel(c5(), perm)).verdict == Verdict::No);
}

TEST_CASE("certificate check catches tampering") {
  const auto g = intersection_graph(gen_triangle_representation(12, 3));
  const auto r = recognize_simple_triangle(g);
  REQUIRE(r.verdict == Verdict::Yes);
  auto pairs = r.orientation->pairs();
  REQUIRE(!pairs.empty());

  SUBCASE("missing cover edge") {
    ChainCover c = *r.cover;
    REQUIRE(!c.g2.empty());
    const Edge gone = c.g2.front();
    std::erase(c.g1, gone);
    std::erase(c.g2, gone);
    CHECK_FALSE(check_simple_triangle_certificate(g, pairs, c).empty());
  }
  SUBCASE("orientation missing a pair") {
    auto cut = pairs;
    cut.pop_back();
    CHECK_FALSE(check_simple_triangle_certificate(g, cut, *r.cover).empty());
  }
  SUBCASE("reversed pair") {
    auto flipped = pairs;
    std::swap(flipped[0].first, flipped[0].second);
    CHECK_FALSE(check_simple_triangle_certificate(g, flipped, *r.cover).empty());
  }
  SUBCASE("forbidden edge in G1") {
    ChainCover c = *r.cover;
    c.g1.push_back({0, 0});
    normalize(c.g1);
    CHECK_FALSE(check_simple_triangle_certificate(g, pairs, c).empty());
  }
}
