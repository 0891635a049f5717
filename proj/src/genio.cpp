#include "pitri/genio.hpp"

#include <algorithm>
#include <numeric>

namespace pitri {

Rng::Rng(std::uint64_t seed) : engine_(seed) {}

std::uint64_t Rng::next() { return engine_(); }

int Rng::uniform(int lo, int hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

double Rng::unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

namespace {

std::vector<int> shuffled_range(int first, int count, Rng& rng) {
  std::vector<int> xs(static_cast<std::size_t>(count));
  std::iota(xs.begin(), xs.end(), first);
  rng.shuffle(xs);
  return xs;
}

void check_density(double density) {
  if (!(density >= 0.0 && density <= 1.0)) throw InputError("density must be in [0, 1]");
}

}  // namespace

TriangleRepresentation gen_triangle_representation(int n, std::uint64_t seed) {
  if (n < 0) throw InputError("triangle representation: negative size");
  Rng rng(seed);
  const auto apexes = shuffled_range(1, n, rng);
  const auto ends = shuffled_range(1, 2 * n, rng);
  TriangleRepresentation r;
  for (int i = 0; i < n; ++i) {
    const int a = ends[2 * i];
    const int b = ends[2 * i + 1];
    r.triangles.push_back({apexes[i], std::min(a, b), std::max(a, b)});
  }
  return r;
}

bool left_of(const Triangle& a, const Triangle& b) { return a.apex < b.apex && a.right < b.left; }

SimpleGraph intersection_graph(const TriangleRepresentation& r) {
  const int n = static_cast<int>(r.triangles.size());
  SimpleGraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (!left_of(r.triangles[a], r.triangles[b]) && !left_of(r.triangles[b], r.triangles[a])) {
        g.add_edge(a, b);
      }
    }
  }
  return g;
}

PartialOrder order_of_representation(const TriangleRepresentation& r) {
  const int n = static_cast<int>(r.triangles.size());
  std::vector<VertexPair> pairs;
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a != b && left_of(r.triangles[a], r.triangles[b])) pairs.emplace_back(a, b);
    }
  }
  return PartialOrder::from_pairs(n, pairs);
}

BipartiteGraph gen_random_bipartite(int u_count, int v_count, double density, std::uint64_t seed) {
  check_density(density);
  Rng rng(seed);
  EdgeSet edges;
  for (int u = 0; u < u_count; ++u) {
    for (int v = 0; v < v_count; ++v) {
      if (rng.chance(density)) edges.push_back({u, v});
    }
  }
  return BipartiteGraph::from_edge_list(u_count, v_count, edges);
}

EdgeSet gen_random_F(const BipartiteGraph& g, double density, std::uint64_t seed) {
  check_density(density);
  Rng rng(seed);
  EdgeSet f;
  for (const Edge& e : g.edges()) {
    if (rng.chance(density)) f.push_back(e);
  }
  return f;
}

SimpleGraph gen_permutation_graph(int n, std::uint64_t seed) {
  if (n < 0) throw InputError("permutation graph: negative size");
  Rng rng(seed);
  const auto pi = shuffled_range(0, n, rng);
  SimpleGraph g(n);
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (pi[a] > pi[b]) g.add_edge(a, b);
    }
  }
  return g;
}

SimpleGraph gen_interval_graph(int n, std::uint64_t seed) {
  if (n < 0) throw InputError("interval graph: negative size");
  Rng rng(seed);
  const auto ends = shuffled_range(1, 2 * n, rng);
  SimpleGraph g(n);
  auto lo = [&](int i) { return std::min(ends[2 * i], ends[2 * i + 1]); };
  auto hi = [&](int i) { return std::max(ends[2 * i], ends[2 * i + 1]); };
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      if (lo(a) < hi(b) && lo(b) < hi(a)) g.add_edge(a, b);
    }
  }
  return g;
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  SimpleGraph out(g.vertex_count());
  for (const auto& [a, b] : g.edges()) out.add_edge(perm[a], perm[b]);
  return out;
}

}  // namespace pitri
